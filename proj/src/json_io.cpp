#include "orliczkit/json_io.hpp"

#include <fstream>

namespace orlicz::io {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const std::string& field) {
    if (!j.is_object() || !j.contains(field)) {
        throw SchemaError("missing field \"" + field + "\"");
    }
    return j.at(field);
}

std::vector<double> number_array(const json& j, const std::string& field) {
    const json& arr = require_field(j, field);
    if (!arr.is_array()) throw SchemaError("field \"" + field + "\" must be an array");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_number()) throw SchemaError("field \"" + field + "\" must hold numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<std::vector<double>> matrix(const json& j, const std::string& field) {
    const json& arr = require_field(j, field);
    if (!arr.is_array() || arr.empty()) {
        throw SchemaError("field \"" + field + "\" must be a nonempty array of arrays");
    }
    std::vector<std::vector<double>> out;
    for (const auto& row : arr) {
        if (!row.is_array()) throw SchemaError("field \"" + field + "\" must hold arrays");
        std::vector<double> r;
        for (const auto& e : row) {
            if (!e.is_number()) throw SchemaError("field \"" + field + "\" must hold numbers");
            r.push_back(e.get<double>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

double number_from_json(const json& j, const std::string& field) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInf;
        throw SchemaError("field \"" + field + "\": only the string \"inf\" is accepted");
    }
    if (!j.is_number()) throw SchemaError("field \"" + field + "\" must be a number or \"inf\"");
    return j.get<double>();
}

json number_to_json(double v) {
    if (v == kInf) return json("inf");
    return json(v);
}

SpacePtr space_from_json(const json& j) {
    const json& outcomes = require_field(j, "outcomes");
    if (!outcomes.is_array()) throw SchemaError("field \"outcomes\" must be an array");
    std::vector<std::string> labels;
    for (const auto& e : outcomes) {
        if (!e.is_string()) throw SchemaError("field \"outcomes\" must hold strings");
        labels.push_back(e.get<std::string>());
    }
    try {
        return FiniteProbSpace::make(std::move(labels), number_array(j, "weights"));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json space_to_json(const FiniteProbSpace& space) {
    return json{{"outcomes", space.labels()}, {"weights", space.weights()}};
}

AtomPartition partition_from_json(const json& j, SpacePtr space) {
    const json& blocks = require_field(j, "blocks");
    if (!blocks.is_array()) throw SchemaError("field \"blocks\" must be an array");
    std::vector<std::vector<std::size_t>> out;
    for (const auto& blk : blocks) {
        if (!blk.is_array()) throw SchemaError("field \"blocks\" must hold index arrays");
        std::vector<std::size_t> b;
        for (const auto& e : blk) {
            if (!e.is_number_unsigned()) {
                throw SchemaError("field \"blocks\" must hold nonnegative indices");
            }
            b.push_back(e.get<std::size_t>());
        }
        out.push_back(std::move(b));
    }
    try {
        return AtomPartition(std::move(space), std::move(out));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json partition_to_json(const AtomPartition& partition) {
    return json{{"blocks", partition.blocks()}};
}

RandomScalar random_scalar_from_json(const json& j, SpacePtr space) {
    const json& arr = require_field(j, "values");
    if (!arr.is_array()) throw SchemaError("field \"values\" must be an array");
    std::vector<double> values;
    for (const auto& e : arr) values.push_back(number_from_json(e, "values"));
    try {
        return RandomScalar(std::move(space), std::move(values));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json random_scalar_to_json(const RandomScalar& zeta) {
    json values = json::array();
    for (double v : zeta.values()) values.push_back(number_to_json(v));
    return json{{"values", std::move(values)}};
}

OrliczFunction orlicz_fn_from_json(const json& j) {
    const json& fam = require_field(j, "family");
    if (!fam.is_string()) throw SchemaError("field \"family\" must be a string");
    std::string name = fam.get<std::string>();
    try {
        if (name == "power") {
            return OrliczFunction::power(number_from_json(require_field(j, "p"), "p"),
                                         j.contains("c") ? number_from_json(j.at("c"), "c") : 1.0);
        }
        if (name == "exp_minus_one") return OrliczFunction::exp_minus_one();
        if (name == "entropy_conj") return OrliczFunction::entropy_conj();
        if (name == "piecewise") {
            std::optional<double> jump;
            if (j.contains("jump_at") && !j.at("jump_at").is_null()) {
                jump = number_from_json(j.at("jump_at"), "jump_at");
            }
            return OrliczFunction::piecewise(number_array(j, "breakpoints"),
                                             number_array(j, "slopes"), jump);
        }
        if (name == "indicator_ball") {
            return OrliczFunction::indicator_ball(number_from_json(require_field(j, "r"), "r"));
        }
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    throw SchemaError("field \"family\": unknown family \"" + name + "\"");
}

json orlicz_fn_to_json(const OrliczFunction& phi) {
    return std::visit(
        [](const auto& f) -> json {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Power>) {
                return json{{"family", "power"}, {"p", f.p}, {"c", f.c}};
            } else if constexpr (std::is_same_v<T, ExpMinusOne>) {
                return json{{"family", "exp_minus_one"}};
            } else if constexpr (std::is_same_v<T, EntropyConj>) {
                return json{{"family", "entropy_conj"}};
            } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
                json out{{"family", "piecewise"},
                         {"breakpoints", f.breakpoints},
                         {"slopes", f.slopes}};
                if (f.jump_at) out["jump_at"] = *f.jump_at;
                return out;
            } else {
                return json{{"family", "indicator_ball"}, {"r", f.r}};
            }
        },
        phi.family());
}

RandomOrliczFunction random_orlicz_from_json(const json& j, SpacePtr space) {
    AtomPartition partition = partition_from_json(require_field(j, "partition"), std::move(space));
    const json& arr = require_field(j, "per_block");
    if (!arr.is_array()) throw SchemaError("field \"per_block\" must be an array");
    std::vector<OrliczFunction> fns;
    for (const auto& e : arr) fns.push_back(orlicz_fn_from_json(e));
    try {
        return RandomOrliczFunction(std::move(partition), std::move(fns));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json random_orlicz_to_json(const RandomOrliczFunction& Phi) {
    json fns = json::array();
    for (const auto& f : Phi.per_block()) fns.push_back(orlicz_fn_to_json(f));
    return json{{"partition", partition_to_json(Phi.partition())}, {"per_block", std::move(fns)}};
}

ModuleElement element_from_json(const json& j, SpacePtr space) {
    auto vectors = matrix(j, "vectors");
    if (j.contains("dim")) {
        std::size_t dim = require_field(j, "dim").get<std::size_t>();
        if (!vectors.empty() && vectors.front().size() != dim) {
            throw SchemaError("field \"dim\" disagrees with \"vectors\"");
        }
    }
    try {
        return ModuleElement(std::move(space), std::move(vectors));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json element_to_json(const ModuleElement& x) {
    return json{{"dim", x.dim()}, {"vectors", x.vectors()}};
}

RandomFunctional functional_from_json(const json& j, SpacePtr space) {
    try {
        return RandomFunctional(std::move(space), matrix(j, "covectors"));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json functional_to_json(const RandomFunctional& f) {
    return json{{"covectors", f.covectors()}};
}

json norm_report_to_json(const NormReport& report) {
    return json{{"value", number_to_json(report.value)},
                {"method", to_string(report.method)},
                {"iterations", report.iterations},
                {"residual", report.residual}};
}

json cond_norm_report_to_json(const CondNormReport& report) {
    return json{{"value", random_scalar_to_json(report.value)},
                {"method", to_string(report.method)},
                {"iterations", report.iterations},
                {"residual", report.residual}};
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open \"" + path + "\"");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("malformed JSON in \"" + path + "\": " + e.what());
    }
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot open \"" + path + "\" for writing");
    out << j.dump(2) << "\n";
}

}  // namespace orlicz::io
