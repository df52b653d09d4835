#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zgr {

enum class Parity { even, odd };

/// An element of Z_2^n. Component 0 is stored in the most significant of
/// the n low bits, so integer comparison of `bits()` is lexicographic order.
class Degree {
 public:
  static constexpr unsigned max_length = 16;

  Degree() = default;
  Degree(unsigned length, std::uint32_t bits);
  Degree(std::initializer_list<int> components);
  explicit Degree(std::span<const int> components);

  static Degree zero(unsigned length) { return Degree(length, 0u); }

  unsigned length() const { return length_; }
  std::uint32_t bits() const { return bits_; }
  int component(unsigned i) const;
  std::vector<int> components() const;
  bool is_zero() const { return bits_ == 0; }

  /// Componentwise addition mod 2.
  Degree operator+(const Degree& other) const;
  Degree& operator+=(const Degree& other);

  friend bool operator==(const Degree&, const Degree&) = default;

  std::string to_string() const;

 private:
  std::uint8_t length_ = 0;
  std::uint32_t bits_ = 0;
};

/// Sum of a_i b_i mod 2.
int pairing(const Degree& a, const Degree& b);
Parity parity(const Degree& a);
/// (-1)^pairing(a, b)
int sign(const Degree& a, const Degree& b);

/// All 2^n degrees: even ones first, then odd ones, each group in
/// lexicographic order.
std::vector<Degree> enumerate_degrees(unsigned n);

/// Engine-level grading configuration: the fixed n and the ordered chain
/// gamma_0 < gamma_1 < ... < gamma_q. Every block index elsewhere refers to
/// a position in this chain.
class DegreeSystem {
 public:
  explicit DegreeSystem(unsigned n);

  unsigned n() const { return n_; }
  /// q + 1 = 2^n
  std::size_t size() const { return chain_.size(); }
  std::size_t q() const { return chain_.size() - 1; }

  const Degree& operator[](std::size_t i) const { return chain_[i]; }
  const std::vector<Degree>& chain() const { return chain_; }
  const Degree& zero() const { return chain_.front(); }

  /// Position of `d` in the chain.
  std::size_t index_of(const Degree& d) const;
  /// Position of gamma_i + gamma_j.
  std::size_t sum_index(std::size_t i, std::size_t j) const;

  void check(const Degree& d) const;

 private:
  unsigned n_;
  std::vector<Degree> chain_;
  std::vector<std::size_t> position_;  // indexed by bit pattern
};

using DegreeSystemPtr = std::shared_ptr<const DegreeSystem>;

inline DegreeSystemPtr make_degree_system(unsigned n) {
  return std::make_shared<const DegreeSystem>(n);
}

}  // namespace zgr
