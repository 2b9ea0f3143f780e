#include "qdef_cli/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qdef_cli {

using nlohmann::json;
using qdef::Rational;

const std::vector<std::string>& coupling_keys(Model m) {
    static const std::vector<std::string> binary = {"lambda_40", "lambda_31", "lambda_22",
                                                    "lambda_13", "lambda_04"};
    static const std::vector<std::string> ternary = {"lambda_40",  "lambda_31",  "lambda_22",
                                                     "lambda_13",  "lambda_04",  "lambda_H",
                                                     "lambda_H20", "lambda_H11", "lambda_H02"};
    return m == Model::BinaryQuartic ? binary : ternary;
}

std::string model_name(Model m) {
    return m == Model::BinaryQuartic ? "binary_quartic" : "two_singlets_higgs";
}

std::variant<PotentialSpec, SpecError> parse_potential_spec(const std::string& text,
                                                            std::optional<Arith> forced) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        return SpecError{std::string("malformed JSON: ") + err.what()};
    }
    if (!doc.is_object()) return SpecError{"spec must be a JSON object"};

    for (const auto& [key, _] : doc.items()) {
        if (key != "model" && key != "couplings" && key != "arithmetic")
            return SpecError{"unknown top-level key: " + key};
    }
    if (!doc.contains("model") || !doc["model"].is_string())
        return SpecError{"missing or non-string \"model\""};

    PotentialSpec spec;
    const std::string model = doc["model"].get<std::string>();
    if (model == "binary_quartic") spec.model = Model::BinaryQuartic;
    else if (model == "two_singlets_higgs") spec.model = Model::TwoSingletsHiggs;
    else return SpecError{"unknown model: " + model + " (expected binary_quartic or two_singlets_higgs)"};

    if (!doc.contains("couplings") || !doc["couplings"].is_object())
        return SpecError{"missing or non-object \"couplings\""};

    std::optional<Arith> file_arith;
    if (doc.contains("arithmetic")) {
        if (!doc["arithmetic"].is_string())
            return SpecError{"\"arithmetic\" must be \"float\" or \"rational\""};
        const std::string a = doc["arithmetic"].get<std::string>();
        if (a == "float") file_arith = Arith::Float;
        else if (a == "rational") file_arith = Arith::Rational;
        else return SpecError{"\"arithmetic\" must be \"float\" or \"rational\""};
    }

    const auto& keys = coupling_keys(spec.model);
    bool saw_ratio_string = false;
    std::string unknown, missing;
    for (const auto& [key, value] : doc["couplings"].items()) {
        bool known = false;
        for (const auto& k : keys)
            if (k == key) { known = true; break; }
        if (!known) {
            if (!unknown.empty()) unknown += ", ";
            unknown += key;
            continue;
        }
        if (value.is_number()) {
            const double v = value.get<double>();
            if (!qdef::is_finite(v)) return SpecError{"non-finite value for " + key};
            spec.couplings.emplace(key, Rational(v));
        } else if (value.is_string()) {
            const auto r = qdef::parse_rational(value.get<std::string>());
            if (!r) return SpecError{"value for " + key + " is not a p/q rational: " +
                                     value.get<std::string>()};
            spec.couplings.emplace(key, *r);
            saw_ratio_string = true;
        } else {
            return SpecError{"value for " + key + " must be a number or a \"p/q\" string"};
        }
    }
    if (!unknown.empty()) return SpecError{"unknown coupling keys: " + unknown};
    for (const auto& k : keys) {
        if (!spec.couplings.count(k)) {
            if (!missing.empty()) missing += ", ";
            missing += k;
        }
    }
    if (!missing.empty()) return SpecError{"missing coupling keys: " + missing};

    if (forced) spec.arithmetic = *forced;
    else if (file_arith) spec.arithmetic = *file_arith;
    else spec.arithmetic = saw_ratio_string ? Arith::Rational : Arith::Float;
    return spec;
}

std::variant<PotentialSpec, SpecError> load_potential_spec(const std::string& path,
                                                           std::optional<Arith> forced) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return SpecError{"cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_potential_spec(buf.str(), forced);
}

namespace {
Rational get(const PotentialSpec& s, const char* key) { return s.couplings.at(key); }
} // namespace

qdef::Couplings2<qdef::Rational> couplings2_q(const PotentialSpec& s) {
    return {get(s, "lambda_40"), get(s, "lambda_31"), get(s, "lambda_22"), get(s, "lambda_13"),
            get(s, "lambda_04")};
}

qdef::Couplings2<double> couplings2_f(const PotentialSpec& s) {
    return qdef::to_double_couplings(couplings2_q(s));
}

qdef::Couplings3<qdef::Rational> couplings3_q(const PotentialSpec& s) {
    return {get(s, "lambda_H"), get(s, "lambda_H20"), get(s, "lambda_H11"), get(s, "lambda_H02"),
            couplings2_q(s)};
}

qdef::Couplings3<double> couplings3_f(const PotentialSpec& s) {
    return qdef::to_double_couplings(couplings3_q(s));
}

} // namespace qdef_cli
