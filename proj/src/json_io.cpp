#include "fuzzopt/json_io.hpp"

#include <sstream>

namespace fuzzopt {

namespace {

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  return j.get<double>();
}

std::vector<double> numbers_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(number_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

FuzzyNumber fuzzy_number_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected a fuzzy number object");
  try {
    if (j.contains("tri")) {
      const auto v = numbers_at(j["tri"], path + ".tri");
      if (v.size() != 3) throw SchemaError(path + ".tri", "expected [a,b,c]");
      return FuzzyNumber::triangular(v[0], v[1], v[2]);
    }
    if (j.contains("trap")) {
      const auto v = numbers_at(j["trap"], path + ".trap");
      if (v.size() != 4) throw SchemaError(path + ".trap", "expected [a,b,c,d]");
      return FuzzyNumber::trapezoidal(v[0], v[1], v[2], v[3]);
    }
    if (j.contains("sampled")) {
      const json& s = j["sampled"];
      const std::string spath = path + ".sampled";
      if (!s.is_object() || !s.contains("levels") || !s.contains("cuts"))
        throw SchemaError(spath, "expected {levels, cuts}");
      const auto levels = numbers_at(s["levels"], spath + ".levels");
      if (!s["cuts"].is_array() || s["cuts"].size() != levels.size())
        throw SchemaError(spath + ".cuts", "expected one [lo,hi] pair per level");
      std::vector<Interval> cuts;
      for (std::size_t i = 0; i < s["cuts"].size(); ++i) {
        const auto pair =
            numbers_at(s["cuts"][i], spath + ".cuts[" + std::to_string(i) + "]");
        if (pair.size() != 2)
          throw SchemaError(spath + ".cuts[" + std::to_string(i) + "]",
                            "expected [lo,hi]");
        cuts.emplace_back(pair[0], pair[1]);
      }
      return FuzzyNumber::sampled(LevelGrid(levels), std::move(cuts));
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
  throw SchemaError(path, "expected one of tri/trap/sampled");
}

FuzzyVector fuzzy_vector_from_json(const json& j, const std::string& path) {
  const json& arr = j.is_object() && j.contains("vector") ? j["vector"] : j;
  const std::string apath = j.is_object() && j.contains("vector") ? path + ".vector" : path;
  if (!arr.is_array() || arr.empty())
    throw SchemaError(apath, "expected a nonempty array of fuzzy numbers");
  std::vector<FuzzyNumber> comps;
  for (std::size_t i = 0; i < arr.size(); ++i)
    comps.push_back(fuzzy_number_from_json(arr[i], apath + "[" + std::to_string(i) + "]"));
  return FuzzyVector(std::move(comps));
}

FuzzyMatrix fuzzy_matrix_from_json(const json& j, const std::string& path) {
  const json& arr = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
  const std::string apath = j.is_object() && j.contains("matrix") ? path + ".matrix" : path;
  if (!arr.is_array() || arr.empty())
    throw SchemaError(apath, "expected a nonempty array of rows");
  std::vector<std::vector<FuzzyNumber>> rows;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string rpath = apath + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].empty())
      throw SchemaError(rpath, "expected a nonempty row of fuzzy numbers");
    std::vector<FuzzyNumber> row;
    for (std::size_t k = 0; k < arr[i].size(); ++k)
      row.push_back(fuzzy_number_from_json(arr[i][k], rpath + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  try {
    return FuzzyMatrix::from_rows(rows);
  } catch (const Error& e) {
    throw SchemaError(apath, e.what());
  }
}

FuzzyExpr expr_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
    throw SchemaError(path, "expected {dim, terms, gh_const?}");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
    throw SchemaError(path + ".dim", "expected a positive integer");
  const std::size_t dim = j["dim"].get<std::size_t>();
  if (!j["terms"].is_array()) throw SchemaError(path + ".terms", "expected an array");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < j["terms"].size(); ++i) {
    const json& t = j["terms"][i];
    const std::string tpath = path + ".terms[" + std::to_string(i) + "]";
    if (!t.is_object() || !t.contains("coef") || !t.contains("exp"))
      throw SchemaError(tpath, "expected {coef, exp, shift?}");
    Monomial mono;
    if (!t["exp"].is_array()) throw SchemaError(tpath + ".exp", "expected an array");
    for (std::size_t k = 0; k < t["exp"].size(); ++k) {
      const json& e = t["exp"][k];
      if (!e.is_number_integer() || e.get<long long>() < 0)
        throw SchemaError(tpath + ".exp[" + std::to_string(k) + "]",
                          "expected a nonnegative integer");
      mono.exponents.push_back(e.get<unsigned>());
    }
    if (t.contains("shift")) mono.shift = numbers_at(t["shift"], tpath + ".shift");
    terms.push_back(Term{fuzzy_number_from_json(t["coef"], tpath + ".coef"),
                         std::move(mono)});
  }
  std::optional<FuzzyNumber> gh;
  if (j.contains("gh_const") && !j["gh_const"].is_null())
    gh = fuzzy_number_from_json(j["gh_const"], path + ".gh_const");
  try {
    return FuzzyExpr(dim, std::move(terms), std::move(gh));
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

FuzzyProblem problem_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("objective"))
    throw SchemaError(path, "expected {objective, constraints?}");
  FuzzyExpr obj = expr_from_json(j["objective"], path + ".objective");
  std::vector<FuzzyExpr> cons;
  if (j.contains("constraints")) {
    if (!j["constraints"].is_array())
      throw SchemaError(path + ".constraints", "expected an array");
    for (std::size_t i = 0; i < j["constraints"].size(); ++i)
      cons.push_back(expr_from_json(j["constraints"][i],
                                    path + ".constraints[" + std::to_string(i) + "]"));
  }
  try {
    return FuzzyProblem(std::move(obj), std::move(cons));
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

FuzzyDataset dataset_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("points"))
    throw SchemaError(path, "expected {points}");
  if (!j["points"].is_array() || j["points"].empty())
    throw SchemaError(path + ".points", "expected a nonempty array");
  std::vector<FuzzyVector> pts;
  std::vector<int> labels;
  for (std::size_t i = 0; i < j["points"].size(); ++i) {
    const json& p = j["points"][i];
    const std::string ppath = path + ".points[" + std::to_string(i) + "]";
    if (!p.is_object() || !p.contains("coords") || !p.contains("label"))
      throw SchemaError(ppath, "expected {coords, label}");
    pts.push_back(fuzzy_vector_from_json(p["coords"], ppath + ".coords"));
    if (!p["label"].is_number_integer())
      throw SchemaError(ppath + ".label", "expected -1 or 1");
    labels.push_back(p["label"].get<int>());
  }
  try {
    return FuzzyDataset(std::move(pts), std::move(labels));
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

Box box_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
    throw SchemaError(path, "expected {lo, hi}");
  Box b{numbers_at(j["lo"], path + ".lo"), numbers_at(j["hi"], path + ".hi")};
  if (b.lo.size() != b.hi.size())
    throw SchemaError(path, "lo and hi must have equal length");
  for (std::size_t i = 0; i < b.lo.size(); ++i)
    if (!(b.lo[i] <= b.hi[i]))
      throw SchemaError(path + ".lo[" + std::to_string(i) + "]",
                        "lower bound exceeds upper bound");
  return b;
}

std::vector<double> point_from_json(const json& j, const std::string& path,
                                    std::size_t expected_arity) {
  const auto v = numbers_at(j, path);
  if (v.size() != expected_arity)
    throw SchemaError(path, "expected " + std::to_string(expected_arity) + " coordinates");
  return v;
}

json to_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

json to_json(const FuzzyNumber& m) {
  return std::visit(
      [](const auto& s) -> json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Triangular>) {
          return json{{"tri", {s.a, s.b, s.c}}};
        } else if constexpr (std::is_same_v<S, Trapezoidal>) {
          return json{{"trap", {s.a, s.b, s.c, s.d}}};
        } else {
          json cuts = json::array();
          for (const Interval& iv : s.cuts) cuts.push_back(to_json(iv));
          return json{{"sampled", {{"levels", s.grid.levels()}, {"cuts", cuts}}}};
        }
      },
      m.shape());
}

json to_json(const CutFamily& f) {
  json cuts = json::array();
  for (const Interval& iv : f.cuts()) cuts.push_back(to_json(iv));
  return json{{"levels", f.grid().levels()}, {"cuts", cuts}};
}

json to_json(const OrderResult& r) {
  return json{{"weak_all", r.weak_all},
              {"strict_some", r.strict_some},
              {"strict_all", r.strict_all}};
}

json to_json(const GordanVerdict& v) {
  json out;
  switch (v.which) {
    case GordanVerdict::Which::AlternativeI:
      out["which"] = "alternative_i";
      out["witness_y"] = v.witness_y;
      break;
    case GordanVerdict::Which::AlternativeII: {
      out["which"] = "alternative_ii";
      json ev = json::array();
      for (const auto& e : v.evidence)
        ev.push_back(json{{"level", e.level}, {"mixture", e.mixture}});
      out["evidence"] = ev;
      break;
    }
    case GordanVerdict::Which::NeitherDetected:
      out["which"] = "neither_detected";
      out["witness_epigraph"] = v.witness_epigraph;
      if (v.failing_component >= 0) {
        out["failing_component"] = v.failing_component;
        out["failing_level"] = v.failing_level;
      }
      break;
  }
  return out;
}

json to_json(const MultiplierCertificate& c) {
  json residuals = json::array();
  for (const CutFamily& f : c.residuals) residuals.push_back(to_json(f));
  return json{{"kappa0", c.kappa0},
              {"kappas", c.kappas},
              {"active_set", c.active},
              {"residuals", residuals}};
}

json to_json(const MultiplierReport& r) {
  json residuals = json::array();
  for (const CutFamily& f : r.residuals) residuals.push_back(to_json(f));
  return json{{"pass", r.pass()},
              {"stationarity", {{"ok", r.stationarity.ok}, {"worst", r.stationarity.worst}}},
              {"complementary", {{"ok", r.complementary.ok}, {"worst", r.complementary.worst}}},
              {"nonneg", r.nonneg},
              {"not_all_zero", r.not_all_zero},
              {"residuals", residuals}};
}

json to_json(const ConeSampleReport& r) {
  json out{{"empty_suspected", r.empty_suspected}, {"trials", r.trials}};
  if (r.counterexample) out["counterexample"] = *r.counterexample;
  return out;
}

json to_json(const BiasSet& b) {
  json table = json::array();
  for (std::size_t l = 0; l < b.intervals.size(); ++l) {
    if (!b.intervals[l]) continue;
    table.push_back(json{{"rho", b.grid[l]},
                         {"lo", b.intervals[l]->lo},
                         {"hi", b.intervals[l]->hi}});
  }
  return json{{"levels", table}, {"rho_max", b.rho_max}};
}

json to_json(const MarginReport& r) {
  json sigma = json::array();
  for (const auto& s : r.satisfaction_level) {
    if (s)
      sigma.push_back(*s);
    else
      sigma.push_back(nullptr);
  }
  return json{{"core_margins", r.core_margins}, {"satisfaction_levels", sigma}};
}

json to_json(const SvmSolution& s) {
  return json{{"lambda", s.lambda},
              {"kappas", s.kappas},
              {"support", s.support},
              {"bias", to_json(s.bias)},
              {"ell_star", s.ell_star},
              {"objective", s.objective},
              {"margins", to_json(s.margins)}};
}

std::string cut_table_csv(const CutFamily& f) {
  std::ostringstream os;
  os << "rho,lo,hi\n";
  os.precision(17);
  for (std::size_t l = 0; l < f.size(); ++l)
    os << f.level(l) << "," << f.at(l).lo << "," << f.at(l).hi << "\n";
  return os.str();
}

std::string bias_table_csv(const BiasSet& b) {
  std::ostringstream os;
  os << "rho,lo,hi\n";
  os.precision(17);
  for (std::size_t l = 0; l < b.intervals.size(); ++l) {
    if (!b.intervals[l]) continue;
    os << b.grid[l] << "," << b.intervals[l]->lo << "," << b.intervals[l]->hi << "\n";
  }
  return os.str();
}

}  // namespace fuzzopt
