#include "qdef_cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>
#include <qdef/qdef.hpp>

namespace qdef_cli {

using nlohmann::json;
using namespace qdef;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

int verdict3_exit(Verdict3Class c) {
    switch (c) {
    case Verdict3Class::PositiveDefinite: return 0;
    case Verdict3Class::PositiveSemidefiniteOnly: return 1;
    case Verdict3Class::Indefinite: return 2;
    case Verdict3Class::AnalyticInconclusive: return 3;
    }
    return 3;
}

std::string verdict3_name(Verdict3Class c) {
    switch (c) {
    case Verdict3Class::PositiveDefinite: return "PositiveDefinite";
    case Verdict3Class::PositiveSemidefiniteOnly: return "PositiveSemidefiniteOnly";
    case Verdict3Class::Indefinite: return "Indefinite";
    case Verdict3Class::AnalyticInconclusive: return "AnalyticInconclusive";
    }
    return "AnalyticInconclusive";
}

Verdict3Class lift2(Verdict2Class c) {
    switch (c) {
    case Verdict2Class::PositiveDefinite: return Verdict3Class::PositiveDefinite;
    case Verdict2Class::PositiveSemidefiniteOnly: return Verdict3Class::PositiveSemidefiniteOnly;
    case Verdict2Class::Indefinite: return Verdict3Class::Indefinite;
    }
    return Verdict3Class::AnalyticInconclusive;
}

// Common shape for the two models so the reporting code is shared.
struct CheckReport {
    Verdict3Class cls;
    std::string certificate;
    std::string confidence;
    bool boundary = false;
    std::vector<double> witness; // empty, 2, or 3 components
    json invariants = json::object();
};

template <class R>
void put_value(json& inv, const std::string& key, const R& v) {
    inv[key] = to_double(v);
    if constexpr (std::is_same_v<R, Rational>) inv[key + "_exact"] = rational_to_string(v);
}

template <class R>
CheckReport check_binary(const Couplings2<R>& c, const Tolerance& tol) {
    const Verdict2 v = classify_couplings2(c, tol);
    CheckReport r;
    r.cls = lift2(v.cls);
    r.certificate = v.certificate;
    r.confidence = "Analytic";
    r.boundary = v.boundary;
    if (v.witness) r.witness = {(*v.witness)[0], (*v.witness)[1]};
    const auto rep = discriminant_report(couplings2_to_tensor(c));
    put_value(r.invariants, "delta", rep.delta);
    put_value(r.invariants, "I", rep.I);
    put_value(r.invariants, "J", rep.J);
    return r;
}

template <class R>
CheckReport check_ternary(const Couplings3<R>& c, const Tolerance& tol) {
    const Verdict3 v = classify_couplings3(c, tol);
    CheckReport r;
    r.cls = v.cls;
    r.certificate = v.certificate;
    r.confidence = v.confidence == Confidence::Analytic ? "Analytic" : "NumericOracle";
    r.boundary = v.boundary;
    if (v.witness) r.witness = {(*v.witness)[0], (*v.witness)[1], (*v.witness)[2]};

    const auto rep = discriminant_report(couplings2_to_tensor(c.quartic2));
    const auto pr = primed_couplings(c);
    r.invariants["m_class"] = m_form_class_name(v.m_class);
    put_value(r.invariants, "delta", rep.delta);
    put_value(r.invariants, "I", rep.I);
    put_value(r.invariants, "J", rep.J);
    put_value(r.invariants, "lambda_40_prime", pr.l40p);
    put_value(r.invariants, "lambda_31_prime", pr.l31p);
    put_value(r.invariants, "lambda_22_prime", pr.l22p);
    put_value(r.invariants, "lambda_13_prime", pr.l13p);
    put_value(r.invariants, "lambda_04_prime", pr.l04p);
    put_value(r.invariants, "delta_prime", pr.delta_p);
    return r;
}

CheckReport run_check_report(const PotentialSpec& spec, const Tolerance& tol) {
    if (spec.model == Model::BinaryQuartic) {
        if (spec.arithmetic == Arith::Rational) return check_binary(couplings2_q(spec), tol);
        return check_binary(couplings2_f(spec), tol);
    }
    if (spec.arithmetic == Arith::Rational) return check_ternary(couplings3_q(spec), tol);
    return check_ternary(couplings3_f(spec), tol);
}

json couplings_json(const PotentialSpec& spec) {
    json j = json::object();
    for (const auto& [key, value] : spec.couplings) {
        if (spec.arithmetic == Arith::Rational) j[key] = rational_to_string(value);
        else j[key] = to_double(value);
    }
    return j;
}

std::string witness_text(const std::vector<double>& w) {
    if (w.empty()) return "none";
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += format_double(w[i]);
    }
    return s + ")";
}

} // namespace

std::optional<ScanAxis> parse_axis(const std::string& text) {
    ScanAxis axis;
    size_t start = 0;
    std::vector<std::string> parts;
    while (true) {
        const size_t colon = text.find(':', start);
        if (colon == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, colon - start));
        start = colon + 1;
    }
    if (parts.size() != 4 || parts[0].empty()) return std::nullopt;
    axis.name = parts[0];
    try {
        size_t pos = 0;
        axis.lo = std::stod(parts[1], &pos);
        if (pos != parts[1].size()) return std::nullopt;
        axis.hi = std::stod(parts[2], &pos);
        if (pos != parts[2].size()) return std::nullopt;
        axis.steps = std::stoi(parts[3], &pos);
        if (pos != parts[3].size()) return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi)) return std::nullopt;
    return axis;
}

CommandResult run_check(const PotentialSpec& spec, const CheckOptions& opt) {
    const Tolerance tol{opt.tolerance};
    const CheckReport r = run_check_report(spec, tol);
    const int code = verdict3_exit(r.cls);

    std::ostringstream out;
    if (opt.json) {
        json j;
        j["model"] = model_name(spec.model);
        j["arithmetic"] = spec.arithmetic == Arith::Rational ? "rational" : "float";
        j["couplings"] = couplings_json(spec);
        j["verdict"] = verdict3_name(r.cls);
        j["certificate"] = r.certificate;
        j["confidence"] = r.confidence;
        j["boundary"] = r.boundary;
        j["witness"] = r.witness.empty() ? json(nullptr) : json(r.witness);
        j["invariants"] = r.invariants;
        j["exit_code"] = code;
        out << j.dump(2) << "\n";
    } else {
        out << "model: " << model_name(spec.model) << "\n";
        out << "arithmetic: " << (spec.arithmetic == Arith::Rational ? "rational" : "float")
            << "\n";
        out << "verdict: " << verdict3_name(r.cls) << "\n";
        out << "certificate: " << r.certificate << (r.boundary ? " [boundary]" : "") << "\n";
        out << "confidence: " << r.confidence << "\n";
        out << "witness: " << witness_text(r.witness) << "\n";
        out << "invariants:\n";
        for (const auto& [key, value] : r.invariants.items()) {
            out << "  " << key << " = ";
            if (value.is_string()) out << value.get<std::string>();
            else out << format_double(value.get<double>());
            out << "\n";
        }
    }
    return {code, out.str()};
}

CommandResult run_oracle(const PotentialSpec& spec, const OracleOptions& opt) {
    MinResult mr{0.0, {}, MinMethod::GridRefine};
    double scale = 0.0;
    for (const auto& [key, value] : spec.couplings)
        scale = std::max(scale, std::fabs(to_double(value)));

    if (spec.model == Model::BinaryQuartic) {
        mr = min_form2_on_sphere(couplings2_to_tensor(couplings2_f(spec)));
    } else {
        SphereScanOptions so;
        so.outer_samples = opt.grid;
        mr = min_potential3(couplings3_f(spec), so);
    }

    const double band = opt.tolerance * scale;
    int code;
    if (mr.min_value > band) code = 0;
    else if (mr.min_value < -band) code = 2;
    else code = 1;

    std::ostringstream out;
    const char* method =
        mr.method == MinMethod::ExactCriticalPoints ? "ExactCriticalPoints" : "GridRefine";
    if (opt.json) {
        json j;
        j["model"] = model_name(spec.model);
        j["min_value"] = mr.min_value;
        j["argmin"] = mr.argmin;
        j["method"] = method;
        j["exit_code"] = code;
        out << j.dump(2) << "\n";
    } else {
        out << "min_value: " << format_double(mr.min_value) << "\n";
        out << "argmin: " << witness_text(mr.argmin) << "\n";
        out << "method: " << method << "\n";
    }
    return {code, out.str()};
}

CommandResult run_scan(const PotentialSpec& base, const ScanOptions& opt) {
    const auto& keys = coupling_keys(base.model);
    auto valid = [&](const std::string& name) {
        for (const auto& k : keys)
            if (k == name) return true;
        return false;
    };
    if (!valid(opt.axis1.name) || !valid(opt.axis2.name))
        return {kExitSpecError, "invalid axis coupling name for model " + model_name(base.model)};
    if (opt.axis1.name == opt.axis2.name) return {kExitSpecError, "axis names must be distinct"};
    if (opt.axis1.steps < 2 || opt.axis2.steps < 2) return {kExitSpecError, "steps must be >= 2"};

    const Tolerance tol{opt.tolerance};
    const int n1 = opt.axis1.steps, n2 = opt.axis2.steps;
    auto axis_value = [](const ScanAxis& a, int i) {
        return a.lo + (a.hi - a.lo) * static_cast<double>(i) / (a.steps - 1);
    };

    struct Cell {
        std::string row;
    };
    std::vector<Cell> cells(static_cast<size_t>(n1) * static_cast<size_t>(n2));

    auto classify_cell = [&](int i1, int i2) {
        const double v1 = axis_value(opt.axis1, i1);
        const double v2 = axis_value(opt.axis2, i2);
        PotentialSpec spec = base;
        spec.couplings[opt.axis1.name] = Rational(v1);
        spec.couplings[opt.axis2.name] = Rational(v2);
        const CheckReport r = run_check_report(spec, tol);
        std::string row = format_double(v1);
        row += ',';
        row += format_double(v2);
        row += ',';
        row += std::to_string(verdict3_exit(r.cls));
        row += ',';
        row += r.certificate;
        row += ',';
        row += r.confidence;
        row += '\n';
        cells[static_cast<size_t>(i1) * n2 + i2].row = std::move(row);
    };

    const int workers = std::clamp(opt.workers, 1, 64);
    const long total = static_cast<long>(n1) * n2;
    if (workers == 1) {
        for (int i1 = 0; i1 < n1; ++i1)
            for (int i2 = 0; i2 < n2; ++i2) classify_cell(i1, i2);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (long idx = w; idx < total; idx += workers)
                    classify_cell(static_cast<int>(idx / n2), static_cast<int>(idx % n2));
            });
        }
        for (auto& t : pool) t.join();
    }

    std::ofstream out(opt.output_path, std::ios::binary);
    if (!out) return {kExitCannotWrite, "cannot write " + opt.output_path};
    out << "axis1,axis2,verdict,certificate,confidence\n";
    for (const auto& cell : cells) out << cell.row;
    out.close();
    if (!out) return {kExitCannotWrite, "write failed: " + opt.output_path};

    return {0, "wrote " + std::to_string(total) + " rows to " + opt.output_path + "\n"};
}

} // namespace qdef_cli
