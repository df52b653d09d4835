#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zgrass/errors.hpp"
#include "zgrass/grassmannian.hpp"
#include "zgrass/random.hpp"

namespace zgr {

/// Outcome of one randomized check.
struct CheckEntry {
  std::vector<std::size_t> tuple;
  bool pass = false;
  bool skipped = false;
  std::optional<GradedSeries> residual;
  std::string note;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  std::size_t checked() const;
  std::size_t failures() const;
  std::size_t skipped() const;
  bool all_pass() const { return failures() == 0; }
};

struct SweepOptions {
  std::uint64_t seed = 0;
  int retries = 50;
  unsigned threads = 0;
};

/// First differing entry of two equally shaped matrices, as a difference.
std::optional<GradedSeries> matrix_residual(const SuperMatrix& a, const SuperMatrix& b);

void compare(CheckEntry& entry, const GradedSeries& lhs, const GradedSeries& rhs);
void compare(CheckEntry& entry, const SuperMatrix& lhs, const SuperMatrix& rhs);
void skip(CheckEntry& entry, const std::string& why);

/// Runs body(entry, rng) for every tuple, each with a stream split on the
/// tuple and its position. Library errors become failed entries.
template <class Fn>
CheckReport sweep(const std::vector<std::vector<std::size_t>>& tuples, const SweepOptions& options, Fn body) {
  CheckReport report;
  report.entries.resize(tuples.size());
  const SeededStream root(options.seed);
  parallel_for(tuples.size(), options.threads, [&](std::size_t i) {
    CheckEntry& entry = report.entries[i];
    entry.tuple = tuples[i];
    std::vector<std::size_t> key = tuples[i];
    key.push_back(i);
    SeededStream rng = root.split(key);
    try {
      body(entry, rng);
    } catch (const Error& e) {
      entry.pass = false;
      entry.skipped = false;
      entry.note = e.what();
    }
  });
  return report;
}

enum class AlgebraLaw { associativity, graded_commutativity, body_homomorphism, inverse };

std::string to_string(AlgebraLaw law);

/// `count` random trials of each law over `algebra`; entry tuples are
/// (law, trial).
CheckReport verify_algebra_laws(const Algebra& algebra, std::size_t count, const SweepOptions& options);

}  // namespace zgr
