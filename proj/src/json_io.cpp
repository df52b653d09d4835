#include "zgrass/json_io.hpp"

#include "zgrass/errors.hpp"

namespace zgr {

namespace {

std::size_t lookup(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw ParseError("unknown variable '" + name + "'");
}

template <class Fn>
auto guarded(const char* what, Fn fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Degree& d) { return Json(d.components()); }

Json to_json(const BlockDims& dims) { return Json(dims.sizes()); }

Json to_json(const KIndex& index) { return Json(index.data()); }

Json to_json(const Polynomial& p, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const PolyTerm& t : p.terms()) {
    Json mono = Json::array();
    for (std::size_t v = 0; v < t.exps.size(); ++v) {
      if (t.exps[v] != 0) mono.push_back(Json::array({v < names.size() ? names[v] : "v" + std::to_string(v), t.exps[v]}));
    }
    out.push_back(Json::array({mono, rational_to_string(t.coeff)}));
  }
  return out;
}

Json to_json(const RationalFunction& f, const std::vector<std::string>& names) {
  return Json{{"num", to_json(f.numerator(), names)}, {"den", to_json(f.denominator(), names)}};
}

Json to_json(const GradedSeries& f) {
  const GeneratorTable& table = *f.algebra().table();
  Json terms = Json::array();
  for (const auto& [mono, coeff] : f.terms()) {
    Json m = Json::array();
    for (std::size_t s = 0; s < mono.exponents().size(); ++s) {
      if (mono.exponents()[s] != 0) m.push_back(Json::array({table[table.graded_generator(s)].name, mono.exponents()[s]}));
    }
    terms.push_back(Json{{"mono", m}, {"coeff", to_json(coeff, table.central_names())}});
  }
  return Json{{"trunc", f.algebra().truncation()}, {"terms", terms}, {"text", f.to_string()}};
}

Json to_json(const SuperMatrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rowDims", to_json(a.row_dims())}, {"colDims", to_json(a.col_dims())}, {"entries", rows}};
}

Json to_json(const Chart& chart) {
  Json names = Json::array();
  for (const Generator& g : chart.table()->generators()) names.push_back(g.name);
  return Json{{"index", to_json(chart.index())}, {"generators", names}};
}

Json to_json(const TransitionMap& map) {
  Json images = Json::object();
  for (std::size_t g = 0; g < map.images.size(); ++g) images[(*map.target_table)[g].name] = to_json(map.images[g]);
  return Json{{"from", to_json(map.source)},
              {"to", to_json(map.target)},
              {"images", images},
              {"certificate", to_json(map.certificate, map.source_algebra.table()->central_names())}};
}

Json to_json(const GrassmannTPoint& psi) {
  Json out = to_json(psi.matrix);
  out["chart"] = to_json(psi.chart);
  return out;
}

Json to_json(const GLPoint& p) { return to_json(p.matrix()); }

Json to_json(const CocycleEntry& entry, const Atlas& atlas) {
  Json charts = Json::array();
  for (std::size_t c : entry.tuple) charts.push_back(to_json(atlas.chart(c).index()));
  Json out{{"tuple", charts}, {"pass", entry.pass}};
  out["generator"] = entry.generator ? Json(*entry.generator) : Json(nullptr);
  out["residual"] = entry.residual ? to_json(*entry.residual) : Json(nullptr);
  if (!entry.error.empty()) out["error"] = entry.error;
  return out;
}

Json to_json(const CheckEntry& entry) {
  Json out{{"tuple", entry.tuple}, {"pass", entry.pass}};
  if (entry.skipped) out["skipped"] = true;
  out["residual"] = entry.residual ? to_json(*entry.residual) : Json(nullptr);
  if (!entry.note.empty()) out["note"] = entry.note;
  return out;
}

KIndex kindex_from_json(const Json& j) {
  return guarded("k-index", [&] { return KIndex(j.get<std::vector<std::vector<int>>>()); });
}

Polynomial polynomial_from_json(const Json& j, const std::vector<std::string>& names) {
  return guarded("polynomial", [&] {
    std::vector<PolyTerm> terms;
    for (const Json& t : j) {
      Exponents exps(names.size(), 0);
      for (const Json& ve : t.at(0)) {
        const std::size_t v = lookup(names, ve.at(0).get<std::string>());
        exps[v] = static_cast<std::uint16_t>(exps[v] + ve.at(1).get<unsigned>());
      }
      terms.push_back({std::move(exps), parse_rational(t.at(1).get<std::string>())});
    }
    return Polynomial::from_terms(names.size(), std::move(terms));
  });
}

RationalFunction rational_function_from_json(const Json& j, const std::vector<std::string>& names) {
  Polynomial num = polynomial_from_json(j.at("num"), names);
  Polynomial den = polynomial_from_json(j.at("den"), names);
  if (den.is_zero()) throw ParseError("zero denominator");
  return RationalFunction(std::move(num), std::move(den));
}

GradedSeries series_from_json(const Json& j, const Algebra& algebra) {
  return guarded("series", [&] {
    if (j.at("trunc").get<unsigned>() != algebra.truncation()) throw ParseError("series truncation order mismatch");
    const GeneratorTable& table = *algebra.table();
    std::vector<GradedSeries::Term> terms;
    for (const Json& t : j.at("terms")) {
      std::vector<std::uint8_t> exps(table.graded_count(), 0);
      for (const Json& ge : t.at("mono")) {
        const auto g = table.find(ge.at(0).get<std::string>());
        if (!g || table.is_central(*g)) throw ParseError("unknown graded generator in series");
        exps[table.slot(*g)] = static_cast<std::uint8_t>(exps[table.slot(*g)] + ge.at(1).get<unsigned>());
      }
      terms.emplace_back(GradedMonomial(std::move(exps)), rational_function_from_json(t.at("coeff"), table.central_names()));
    }
    return GradedSeries::from_terms(algebra, std::move(terms));
  });
}

SuperMatrix matrix_from_json(const Json& j, const Algebra& algebra) {
  return guarded("matrix", [&] {
    SuperMatrix out(algebra, BlockDims(j.at("rowDims").get<std::vector<int>>()),
                    BlockDims(j.at("colDims").get<std::vector<int>>()));
    const Json& entries = j.at("entries");
    if (entries.size() != out.rows()) throw ParseError("matrix row count mismatch");
    for (std::size_t r = 0; r < out.rows(); ++r) {
      if (entries[r].size() != out.cols()) throw ParseError("matrix column count mismatch");
      for (std::size_t c = 0; c < out.cols(); ++c) out.set(r, c, series_from_json(entries[r][c], algebra));
    }
    return out;
  });
}

}  // namespace zgr
