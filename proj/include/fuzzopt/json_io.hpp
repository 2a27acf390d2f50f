#pragma once

#include <string>

#include <json.hpp>

#include "fuzzopt/cones.hpp"
#include "fuzzopt/expr.hpp"
#include "fuzzopt/gordan.hpp"
#include "fuzzopt/optimality.hpp"
#include "fuzzopt/svm.hpp"

namespace fuzzopt {

using json = nlohmann::json;

// Decoders take the JSON-pointer-ish `path` of the value being decoded so
// schema errors can name the offending field.
FuzzyNumber fuzzy_number_from_json(const json& j, const std::string& path);
FuzzyVector fuzzy_vector_from_json(const json& j, const std::string& path);
FuzzyMatrix fuzzy_matrix_from_json(const json& j, const std::string& path);
FuzzyExpr expr_from_json(const json& j, const std::string& path);
FuzzyProblem problem_from_json(const json& j, const std::string& path);
FuzzyDataset dataset_from_json(const json& j, const std::string& path);
Box box_from_json(const json& j, const std::string& path);
std::vector<double> point_from_json(const json& j, const std::string& path,
                                    std::size_t expected_arity);

json to_json(const Interval& iv);
json to_json(const FuzzyNumber& m);
json to_json(const CutFamily& f);
json to_json(const OrderResult& r);
json to_json(const GordanVerdict& v);
json to_json(const MultiplierCertificate& c);
json to_json(const MultiplierReport& r);
json to_json(const ConeSampleReport& r);
json to_json(const BiasSet& b);
json to_json(const MarginReport& r);
json to_json(const SvmSolution& s);

/// "rho,lo,hi" rows, one per level.
std::string cut_table_csv(const CutFamily& f);
std::string bias_table_csv(const BiasSet& b);

}  // namespace fuzzopt
