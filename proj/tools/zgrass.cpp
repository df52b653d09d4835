// Command-line front end: atlas construction, transition maps and the
// verification suites.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zgrass/errors.hpp"
#include "zgrass/json_io.hpp"

namespace {

using zgr::Json;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_config = 2;

struct Config {
  unsigned n = 1;
  std::string k;
  std::string m;
  unsigned trunc = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string output = "text";
  std::string eval_at;
  unsigned threads = 0;
};

std::vector<int> parse_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw zgr::ParseError(std::string("bad entry '") + item + "' in --" + what);
    }
  }
  return out;
}

zgr::GrassmannShape make_shape(const Config& cfg) {
  if (cfg.k.empty() || cfg.m.empty()) throw zgr::ConfigurationError("--k and --m are required");
  if (cfg.trunc < 1) throw zgr::ConfigurationError("--trunc must be at least 1");
  return zgr::GrassmannShape::make(zgr::make_degree_system(cfg.n), zgr::BlockDims(parse_list(cfg.k, "k")),
                                   zgr::BlockDims(parse_list(cfg.m, "m")));
}

/// Accepts JSON [[1],[1,2],[1],[2]] or the slash form 1/1,2/1/2.
zgr::KIndex parse_index(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    try {
      return zgr::kindex_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw zgr::ParseError(std::string("bad k-index: ") + e.what());
    }
  }
  return zgr::parse_kindex(text);
}

Json chain_json(const zgr::DegreeSystem& d) {
  Json out = Json::array();
  for (const auto& g : d.chain()) out.push_back(zgr::to_json(g));
  return out;
}

std::string chain_text(const zgr::DegreeSystem& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? " < " : "") + d[i].to_string();
  return out;
}

void emit(const Config& cfg, const Json& json, const std::string& text) {
  if (cfg.output == "json") {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_atlas(const Config& cfg) {
  const auto degrees = zgr::make_degree_system(cfg.n);
  Json out{{"n", cfg.n}, {"degrees", chain_json(*degrees)}};
  std::ostringstream text;
  text << "degrees: " << chain_text(*degrees) << "\n";
  if (cfg.k.empty() && cfg.m.empty()) {
    emit(cfg, out, text.str());
    return exit_pass;
  }
  const zgr::GrassmannShape shape = make_shape(cfg);
  const zgr::BlockDims beta = zgr::beta_dims(*shape.degrees, shape.k, shape.m);
  const zgr::Atlas atlas(shape, cfg.trunc);
  out["k"] = zgr::to_json(shape.k);
  out["m"] = zgr::to_json(shape.m);
  out["beta"] = zgr::to_json(beta);
  out["trunc"] = cfg.trunc;
  out["chartCount"] = atlas.size();
  Json charts = Json::array();
  text << "k: " << shape.k.to_string() << "  m: " << shape.m.to_string() << "\n"
       << "beta: " << beta.to_string() << " (" << beta.total() << " generators, " << beta[0] << " central)\n"
       << "charts: " << atlas.size() << "\n";
  for (const zgr::Chart& chart : atlas.charts()) {
    charts.push_back(zgr::to_json(chart));
    text << "  " << chart.index().to_string() << ":";
    for (const auto& g : chart.table()->generators()) text << " " << g.name;
    text << "\n";
  }
  out["charts"] = charts;
  emit(cfg, out, text.str());
  return exit_pass;
}

std::vector<zgr::Rational> parse_point(const std::string& text, const std::vector<std::string>& names) {
  std::vector<std::optional<zgr::Rational>> values(names.size());
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw zgr::ParseError("--eval-at expects var=rational pairs");
    const std::string name = item.substr(0, eq);
    std::size_t v = names.size();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) v = i;
    }
    if (v == names.size()) throw zgr::ParseError("--eval-at: '" + name + "' is not a central generator");
    values[v] = zgr::parse_rational(item.substr(eq + 1));
  }
  std::vector<zgr::Rational> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!values[i]) throw zgr::ParseError("--eval-at: no value for " + names[i]);
    out.push_back(*values[i]);
  }
  return out;
}

int cmd_transition(const Config& cfg, const std::string& from, const std::string& to) {
  const zgr::Atlas atlas(make_shape(cfg), cfg.trunc);
  const std::size_t source = atlas.position(parse_index(from));
  const std::size_t target = atlas.position(parse_index(to));
  std::shared_ptr<const zgr::TransitionMap> map;
  try {
    map = atlas.transition(target, source);
  } catch (const zgr::SingularBody& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  }
  Json out = zgr::to_json(*map);
  const zgr::GeneratorTable& table = *map->target_table;
  const auto& names = map->source_algebra.table()->central_names();
  std::ostringstream text;
  text << "transition " << map->source.to_string() << " -> " << map->target.to_string() << "\n";
  for (std::size_t g = 0; g < map->images.size(); ++g) text << "  " << table[g].name << " = " << map->images[g].to_string() << "\n";
  text << "certificate: " << map->certificate.to_string(names) << "\n";
  if (!cfg.eval_at.empty()) {
    const std::vector<zgr::Rational> point = parse_point(cfg.eval_at, names);
    Json bodies = Json::object();
    text << "bodies at " << cfg.eval_at << ":\n";
    for (std::size_t g = 0; g < map->images.size(); ++g) {
      const auto v = zgr::body(map->images[g]).evaluate(point);
      bodies[table[g].name] = v ? Json(zgr::rational_to_string(*v)) : Json(nullptr);
      text << "  " << table[g].name << " = " << (v ? zgr::rational_to_string(*v) : "undefined") << "\n";
    }
    out["evaluated"] = bodies;
  }
  emit(cfg, out, text.str());
  return exit_pass;
}

struct Section {
  std::string name;
  Json entries = Json::array();
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failure_lines;
};

Section section_from(const std::string& name, const zgr::CheckReport& report) {
  Section s{name};
  for (const auto& e : report.entries) {
    s.entries.push_back(zgr::to_json(e));
    if (!e.skipped && !e.pass) {
      std::string tuple;
      for (std::size_t c : e.tuple) tuple += (tuple.empty() ? "" : ",") + std::to_string(c);
      s.failure_lines.push_back("(" + tuple + ") " + e.note + (e.residual ? ": residual " + e.residual->to_string() : ""));
    }
  }
  s.checked = report.checked();
  s.failures = report.failures();
  s.skipped = report.skipped();
  return s;
}

int report_sections(const Config& cfg, const std::string& suite, const std::vector<Section>& sections) {
  bool pass = true;
  Json out{{"suite", suite}, {"seed", cfg.seed}, {"trunc", cfg.trunc}};
  Json parts = Json::array();
  std::ostringstream text;
  for (const Section& s : sections) {
    pass = pass && s.failures == 0 && s.checked > 0;
    parts.push_back(Json{{"name", s.name},
                         {"checked", s.checked},
                         {"failures", s.failures},
                         {"skipped", s.skipped},
                         {"entries", s.entries}});
    text << (s.failures == 0 && s.checked > 0 ? "PASS " : "FAIL ") << suite << "/" << s.name << ": " << s.checked
         << " checked, " << s.failures << " failed, " << s.skipped << " skipped\n";
    for (const auto& line : s.failure_lines) text << "  " << line << "\n";
  }
  out["pass"] = pass;
  out["sections"] = parts;
  emit(cfg, out, text.str());
  return pass ? exit_pass : exit_fail;
}

int verify_cocycle(const Config& cfg, const std::string& mode, bool corrupt) {
  zgr::Atlas atlas(make_shape(cfg), cfg.trunc);
  zgr::CocycleOptions options;
  options.mode = mode == "pairs" ? zgr::CocycleMode::pairs
                 : mode == "triples" ? zgr::CocycleMode::triples
                                     : zgr::CocycleMode::all;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.threads = cfg.threads;
  if (corrupt) {
    if (atlas.chart(0).fill().empty()) throw zgr::ConfigurationError("--corrupt needs a chart with generators");
    atlas.corrupt(atlas.size() > 1 ? 1 : 0, 0);
  }
  const zgr::CocycleReport report = zgr::verify_cocycle(atlas, options);
  Section s{"cocycle"};
  for (const auto& e : report.entries) {
    s.entries.push_back(zgr::to_json(e, atlas));
    if (!e.pass) {
      std::string tuple;
      for (std::size_t c : e.tuple) tuple += (tuple.empty() ? "" : " ") + atlas.chart(c).index().to_string();
      s.failure_lines.push_back("(" + tuple + ") " +
                                (e.generator ? *e.generator + ": residual " + e.residual->to_string() : e.error));
    }
  }
  s.checked = report.entries.size();
  s.failures = report.failures();
  return report_sections(cfg, "cocycle", {s});
}

std::vector<std::vector<std::size_t>> chart_tuples(std::size_t charts, std::size_t length, std::size_t samples,
                                                   zgr::SeededStream& rng) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) total *= charts;
  if (samples == 0 || samples >= total) {
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::size_t> t(length);
      std::size_t rest = code;
      for (std::size_t i = length; i-- > 0;) {
        t[i] = rest % charts;
        rest /= charts;
      }
      out.push_back(std::move(t));
    }
    return out;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::size_t> t(length);
    for (auto& c : t) c = rng.below(charts);
    out.push_back(std::move(t));
  }
  return out;
}

int verify_action(const Config& cfg, std::size_t points) {
  const zgr::Atlas atlas(make_shape(cfg), cfg.trunc);
  const zgr::Algebra t_algebra = zgr::make_tpoint_algebra(atlas.shape().degrees, cfg.trunc);
  zgr::SeededStream rng(cfg.seed);
  zgr::SweepOptions options{cfg.seed, 50, cfg.threads};
  // Exhaustive for atlases with at most 256 four-tuples, else 10 samples.
  const std::size_t default_samples = atlas.size() <= 4 ? 0 : 10;
  const std::size_t samples = cfg.samples ? cfg.samples : default_samples;

  std::vector<Section> sections;
  zgr::SeededStream tuple_rng = rng.split(1);
  sections.push_back(section_from("lemma", zgr::verify_lemma(atlas, t_algebra, chart_tuples(atlas.size(), 2, samples, tuple_rng), options)));
  const auto quads = chart_tuples(atlas.size(), 4, samples, tuple_rng);
  zgr::CheckReport gluing;
  for (std::size_t i = 0; i < points; ++i) {
    zgr::SeededStream p_rng = rng.split(100 + i);
    const auto p = zgr::random_gl_point(t_algebra, atlas.shape().m, p_rng);
    if (!p) throw zgr::SingularBody("no invertible GL point drawn");
    options.seed = cfg.seed + i;
    auto part = zgr::verify_action_gluing(atlas, *p, quads, options);
    for (auto& e : part.entries) {
      e.tuple.push_back(i);
      gluing.entries.push_back(std::move(e));
    }
  }
  options.seed = cfg.seed;
  sections.push_back(section_from("gluing", gluing));
  sections.push_back(section_from("laws", zgr::verify_action_laws(atlas, t_algebra, chart_tuples(atlas.size(), 3, samples, tuple_rng), options)));
  return report_sections(cfg, "action", sections);
}

int verify_transitivity(const Config& cfg, const std::string& base) {
  const zgr::Atlas atlas(make_shape(cfg), cfg.trunc);
  const zgr::Algebra t_algebra = zgr::make_tpoint_algebra(atlas.shape().degrees, cfg.trunc, false);
  const std::size_t b = base.empty() ? 0 : atlas.position(parse_index(base));
  const std::size_t per_chart = cfg.samples ? cfg.samples : 3;
  const auto report = zgr::verify_transitivity(atlas, b, t_algebra, per_chart, {cfg.seed, 50, cfg.threads});
  return report_sections(cfg, "transitivity", {section_from("witness", report)});
}

int verify_algebra(const Config& cfg) {
  const zgr::Algebra algebra = zgr::make_tpoint_algebra(zgr::make_degree_system(cfg.n), cfg.trunc);
  const std::size_t count = cfg.samples ? cfg.samples : 1000;
  const auto report = zgr::verify_algebra_laws(algebra, count, {cfg.seed, 50, cfg.threads});
  std::vector<Section> sections;
  for (std::size_t law = 0; law < 4; ++law) {
    zgr::CheckReport part;
    for (const auto& e : report.entries) {
      if (e.tuple[0] == law) part.entries.push_back(e);
    }
    sections.push_back(section_from(zgr::to_string(static_cast<zgr::AlgebraLaw>(law)), part));
  }
  return report_sections(cfg, "algebra", sections);
}

void add_common(CLI::App* app, Config& cfg, bool needs_shape) {
  app->add_option("--n", cfg.n, "Number of Z2 factors")->check(CLI::Range(1u, 8u));
  auto* k = app->add_option("--k", cfg.k, "k sizes along the degree chain, e.g. 1,2,1,1");
  auto* m = app->add_option("--m", cfg.m, "m sizes along the degree chain, e.g. 2,2,2,2");
  if (needs_shape) {
    k->required();
    m->required();
  }
  app->add_option("--trunc", cfg.trunc, "Truncation order N")->capture_default_str();
  app->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app->add_option("--output", cfg.output, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atlases, transition maps and GL action checks for Z2^n-graded supergrassmannians"};
  app.require_subcommand(1);
  Config cfg;

  auto* atlas = app.add_subcommand("atlas", "Degree chain, beta dimensions and chart generator tables");
  atlas->alias("info");
  add_common(atlas, cfg, false);

  std::string from;
  std::string to;
  auto* transition = app.add_subcommand("transition", "Transition map between two charts");
  add_common(transition, cfg, true);
  transition->add_option("--from", from, "Source k-index, e.g. 1/1 or [[1],[1]]")->required();
  transition->add_option("--to", to, "Target k-index")->required();
  transition->add_option("--eval-at", cfg.eval_at, "Evaluate image bodies at var=rat,...");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  std::string mode = "all";
  bool corrupt = false;
  std::size_t points = 1;
  std::string base;
  auto* cocycle = verify->add_subcommand("cocycle", "Identity, pair and triple identities of the transitions");
  add_common(cocycle, cfg, true);
  cocycle->add_option("--samples", cfg.samples, "Random tuples per kind (0 = all)");
  cocycle->add_option("--mode", mode, "Tuple kinds")->check(CLI::IsMember({"pairs", "triples", "all"}))->capture_default_str();
  cocycle->add_flag("--corrupt", corrupt, "Test hook: perturb one transition before checking");
  auto* action = verify->add_subcommand("action", "Chart change identity, action gluing and action laws");
  add_common(action, cfg, true);
  action->add_option("--samples", cfg.samples, "Random chart tuples per check (0 = default)");
  action->add_option("--points", points, "Number of random GL points for the gluing check")->capture_default_str();
  auto* transitivity = verify->add_subcommand("transitivity", "Solve p V = W for random W in every chart");
  add_common(transitivity, cfg, true);
  transitivity->add_option("--samples", cfg.samples, "Targets per chart (0 = 3)");
  transitivity->add_option("--base", base, "Chart of the base point (default: first chart)");
  auto* algebra = verify->add_subcommand("algebra", "Randomized ring law checks");
  add_common(algebra, cfg, false);
  algebra->add_option("--samples", cfg.samples, "Trials per law (0 = 1000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_config;
  }

  try {
    if (*atlas) return cmd_atlas(cfg);
    if (*transition) return cmd_transition(cfg, from, to);
    if (*cocycle) return verify_cocycle(cfg, mode, corrupt);
    if (*action) return verify_action(cfg, points);
    if (*transitivity) return verify_transitivity(cfg, base);
    if (*algebra) return verify_algebra(cfg);
  } catch (const zgr::SingularBody& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  } catch (const zgr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  }
  return exit_config;
}
