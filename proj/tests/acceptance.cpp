// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "worked_example.hpp"
#include "zgrass/errors.hpp"
#include "zgrass/group_action.hpp"

using namespace zgr;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

GrassmannShape g11() {
  return GrassmannShape::make(make_degree_system(1), BlockDims({1, 1}), BlockDims({2, 2}));
}

std::vector<std::vector<std::size_t>> all_tuples(std::size_t charts, std::size_t length) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : out) {
      for (std::size_t c = 0; c < charts; ++c) {
        next.push_back(t);
        next.back().push_back(c);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string summary(const CheckReport& r) {
  std::ostringstream os;
  os << r.checked() << " checked, " << r.failures() << " failed, " << r.skipped() << " skipped";
  return os.str();
}

bool clean(const CheckReport& r, std::size_t at_least) { return r.failures() == 0 && r.checked() >= at_least; }

Outcome degree_order() {
  std::string chain;
  for (const Degree& d : enumerate_degrees(3)) chain += (chain.empty() ? "" : " < ") + d.to_string();
  const std::string want = "(0,0,0) < (0,1,1) < (1,0,1) < (1,1,0) < (0,0,1) < (0,1,0) < (1,0,0) < (1,1,1)";
  return {chain == want, chain};
}

Outcome example_structure() {
  const GrassmannShape s = worked::shape();
  const BlockDims beta = beta_dims(*s.degrees, s.k, s.m);
  const Chart ci = build_chart(s, worked::chart_i, 3);
  std::vector<std::string> names;
  for (const auto& g : ci.table()->generators()) names.push_back(g.name);
  const std::set<std::string> got(names.begin(), names.end());
  const std::set<std::string> want(worked::generator_order.begin(), worked::generator_order.end());
  const std::string label = worked::grid_mismatch(ci.label(), worked::label_i);
  const std::string minor = worked::grid_mismatch(extract_minor(ci.label(), worked::chart_j), worked::minor_j_of_label_i);
  const std::string other = worked::grid_mismatch(build_chart(s, worked::chart_j, 3).label(), worked::label_j);
  const bool pass = beta.sizes() == std::vector<int>{3, 4, 4, 4} && ci.table()->central_count() == 3 &&
                    ci.table()->graded_count() == 12 && got == want && names == worked::generator_order &&
                    label.empty() && minor.empty() && other.empty();
  std::ostringstream os;
  os << "beta " << beta.to_string() << ", " << names.size() << " generators";
  for (const auto* m : {&label, &minor, &other}) {
    if (!m->empty()) os << ", mismatch " << *m;
  }
  return {pass, os.str()};
}

std::string cocycle_summary(const CocycleReport& r) {
  return std::to_string(r.entries.size()) + " tuples, " + std::to_string(r.failures()) + " failed";
}

Outcome cocycle_full() {
  const Atlas atlas(g11(), 4);
  CocycleOptions options;
  options.mode = CocycleMode::all;
  const CocycleReport r = verify_cocycle(atlas, options);
  return {r.all_pass() && r.entries.size() == 4 + 16 + 64, cocycle_summary(r)};
}

Outcome cocycle_sampled(std::uint64_t seed) {
  const Atlas atlas(worked::shape(), 3);
  const std::size_t i = atlas.position(worked::chart_i), j = atlas.position(worked::chart_j);
  CocycleOptions options;
  options.mode = CocycleMode::triples;
  options.samples = 12;
  options.seed = seed;
  options.extra_tuples = {{i, j}, {j, i}};
  const CocycleReport r = verify_cocycle(atlas, options);
  std::size_t triples = 0;
  for (const auto& e : r.entries) triples += e.tuple.size() == 3;
  return {r.all_pass() && triples >= 10, cocycle_summary(r) + " (" + std::to_string(triples) + " triples)"};
}

Outcome lemma(std::uint64_t seed) {
  SweepOptions options;
  options.seed = seed;
  const Atlas small(g11(), 3);
  const Algebra t1 = make_tpoint_algebra(small.chart(0).shape().degrees, 3);
  auto pairs = all_tuples(small.size(), 2);
  const CheckReport a = verify_lemma(small, t1, pairs, options);
  const Atlas big(worked::shape(), 3);
  const Algebra t2 = make_tpoint_algebra(big.chart(0).shape().degrees, 3);
  const std::size_t i = big.position(worked::chart_i), j = big.position(worked::chart_j);
  const CheckReport b = verify_lemma(big, t2, {{i, j}, {j, i}, {0, 7}, {5, 2}}, options);
  return {a.failures() + b.failures() == 0 && a.checked() + b.checked() >= 20,
          "G_{1|1}(2|2): " + summary(a) + "; n = 2: " + summary(b)};
}

Outcome gluing(std::uint64_t seed) {
  SweepOptions options;
  options.seed = seed;
  SeededStream rng(seed ^ 0x6c75ULL);
  const Atlas small(g11(), 3);
  const Algebra t1 = make_tpoint_algebra(small.chart(0).shape().degrees, 3);
  CheckReport a;
  std::size_t points = 0;
  for (int k = 0; k < 3; ++k) {
    const auto p = random_gl_point(t1, g11().m, rng);
    if (!p) continue;
    ++points;
    options.seed = seed + static_cast<std::uint64_t>(k);
    const CheckReport part = verify_action_gluing(small, *p, all_tuples(small.size(), 4), options);
    a.entries.insert(a.entries.end(), part.entries.begin(), part.entries.end());
  }
  const Atlas big(worked::shape(), 3);
  const Algebra t2 = make_tpoint_algebra(big.chart(0).shape().degrees, 3);
  std::mt19937_64 pick(seed);
  std::vector<std::vector<std::size_t>> tuples;
  for (int s = 0; s < 12; ++s) {
    std::vector<std::size_t> t(4);
    for (auto& c : t) c = pick() % big.size();
    tuples.push_back(t);
  }
  const auto p = random_gl_point(t2, worked::shape().m, rng);
  CheckReport b;
  if (p) b = verify_action_gluing(big, *p, tuples, options);
  return {points == 3 && p && clean(a, 256 * 3) && clean(b, 10),
          "G_{1|1}(2|2), " + std::to_string(points) + " points: " + summary(a) + "; n = 2: " + summary(b)};
}

Outcome action_laws(std::uint64_t seed) {
  SweepOptions options;
  options.seed = seed;
  const Atlas atlas(g11(), 3);
  const Algebra t = make_tpoint_algebra(atlas.chart(0).shape().degrees, 3);
  const CheckReport r = verify_action_laws(atlas, t, all_tuples(atlas.size(), 3), options);
  return {clean(r, 50), summary(r)};
}

Outcome transitivity(std::uint64_t seed) {
  SweepOptions options;
  options.seed = seed;
  const Atlas atlas(g11(), 3);
  const Algebra t = make_tpoint_algebra(atlas.chart(0).shape().degrees, 3, false);
  const CheckReport r = verify_transitivity(atlas, 0, t, 3, options);
  std::set<std::size_t> charts;
  for (const auto& e : r.entries) {
    if (e.pass && !e.skipped) charts.insert(e.tuple.at(1));
  }
  return {clean(r, 1) && charts.size() == atlas.size(),
          summary(r) + ", " + std::to_string(charts.size()) + " charts covered"};
}

Outcome algebra_laws(std::uint64_t seed) {
  SweepOptions options;
  options.seed = seed;
  const Algebra t = make_tpoint_algebra(make_degree_system(2), 3);
  const CheckReport r = verify_algebra_laws(t, 1000, options);
  std::vector<std::size_t> per_law(4, 0);
  for (const auto& e : r.entries) {
    if (e.pass && !e.skipped) ++per_law.at(e.tuple.at(0));
  }
  bool all = r.failures() == 0;
  std::ostringstream os;
  for (std::size_t l = 0; l < per_law.size(); ++l) {
    all = all && per_law[l] >= 1000;
    os << (l ? ", " : "") << to_string(static_cast<AlgebraLaw>(l)) << " " << per_law[l];
  }
  os << "; " << r.failures() << " failed";
  return {all, os.str()};
}

Outcome negative_control(const std::string& cli) {
  Atlas atlas(g11(), 3);
  atlas.corrupt(1, 0);
  const CocycleReport r = verify_cocycle(atlas, {});
  bool residual = false;
  for (const auto& e : r.entries) residual = residual || (!e.pass && e.residual && !e.residual->is_zero());
  std::ostringstream os;
  os << r.failures() << " failing tuples";
  if (cli.empty()) {
    os << ", CLI not given";
    return {false, os.str()};
  }
  const std::string command = "\"" + cli + "\" verify cocycle --n 1 --k 1,1 --m 2,2 --corrupt > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  const int code = status != -1 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  os << ", CLI exit code " << code;
  return {residual && code == 1, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::string cli;
  std::uint64_t seed = 20240601;
  app.add_option("--cli", cli, "Path to the zgrass executable");
  app.add_option("--seed", seed, "Seed for the randomized criteria")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"degree order", degree_order},
      {"example structure", example_structure},
      {"cocycle full G_{1|1}(2|2) N=4", cocycle_full},
      {"cocycle sampled n=2 N=3", [&] { return cocycle_sampled(seed); }},
      {"chart change lemma", [&] { return lemma(seed); }},
      {"action gluing", [&] { return gluing(seed); }},
      {"action laws", [&] { return action_laws(seed); }},
      {"transitivity witness", [&] { return transitivity(seed); }},
      {"algebra kernel", [&] { return algebra_laws(seed); }},
      {"negative control", [&] { return negative_control(cli); }},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[c].second();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !out.pass;
    std::printf("%s %zu %s: %s [%.2fs]\n", out.pass ? "PASS" : "FAIL", c + 1, criteria[c].first.c_str(),
                out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
