#pragma once

#include <json.hpp>

#include "orliczkit/duality.hpp"
#include "orliczkit/norms.hpp"
#include "orliczkit/orlicz_fn.hpp"
#include "orliczkit/prob_core.hpp"
#include "orliczkit/rn_module.hpp"

// JSON wire formats. All indices are zero-based; +inf is spelled "inf".
//   space          {"outcomes":[...], "weights":[...]}
//   partition      {"blocks":[[indices],...]}
//   random scalar  {"values":[numbers or "inf"]}
//   orlicz fn      {"family":"power","p":2,"c":1} | {"family":"exp_minus_one"}
//                  | {"family":"entropy_conj"}
//                  | {"family":"piecewise","breakpoints":[...],"slopes":[...],"jump_at":t}
//                  | {"family":"indicator_ball","r":1}
//   random orlicz  {"partition":{...},"per_block":[fn,...]}
//   element        {"dim":d,"vectors":[[...],...]}
//   functional     {"covectors":[[...],...]}

namespace orlicz::io {

/// Schema violation; what() names the offending field.
class SchemaError : public std::runtime_error {
  public:
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

SpacePtr space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const FiniteProbSpace& space);

AtomPartition partition_from_json(const nlohmann::json& j, SpacePtr space);
nlohmann::json partition_to_json(const AtomPartition& partition);

RandomScalar random_scalar_from_json(const nlohmann::json& j, SpacePtr space);
nlohmann::json random_scalar_to_json(const RandomScalar& zeta);

OrliczFunction orlicz_fn_from_json(const nlohmann::json& j);
nlohmann::json orlicz_fn_to_json(const OrliczFunction& phi);

RandomOrliczFunction random_orlicz_from_json(const nlohmann::json& j, SpacePtr space);
nlohmann::json random_orlicz_to_json(const RandomOrliczFunction& Phi);

ModuleElement element_from_json(const nlohmann::json& j, SpacePtr space);
nlohmann::json element_to_json(const ModuleElement& x);

RandomFunctional functional_from_json(const nlohmann::json& j, SpacePtr space);
nlohmann::json functional_to_json(const RandomFunctional& f);

nlohmann::json norm_report_to_json(const NormReport& report);
nlohmann::json cond_norm_report_to_json(const CondNormReport& report);

nlohmann::json load_file(const std::string& path);
void save_file(const std::string& path, const nlohmann::json& j);

/// Extended-real encode/decode helpers ("inf" <-> +infinity).
double number_from_json(const nlohmann::json& j, const std::string& field);
nlohmann::json number_to_json(double v);

}  // namespace orlicz::io
