#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <qdef/scalar.hpp>
#include <qdef/tensors.hpp>

namespace qdef_cli {

enum class Model { BinaryQuartic, TwoSingletsHiggs };
enum class Arith { Float, Rational };

/// Parsed potential specification. Values are stored exactly; the float
/// realization converts on use.
struct PotentialSpec {
    Model model;
    Arith arithmetic;
    std::map<std::string, qdef::Rational> couplings;
};

struct SpecError {
    std::string message;
};

const std::vector<std::string>& coupling_keys(Model m);
std::string model_name(Model m);

/// Parses and validates a spec document. `forced` overrides both the file's
/// arithmetic field and the p/q auto-detection.
std::variant<PotentialSpec, SpecError> parse_potential_spec(const std::string& text,
                                                            std::optional<Arith> forced = {});
std::variant<PotentialSpec, SpecError> load_potential_spec(const std::string& path,
                                                           std::optional<Arith> forced = {});

qdef::Couplings2<double> couplings2_f(const PotentialSpec& s);
qdef::Couplings2<qdef::Rational> couplings2_q(const PotentialSpec& s);
qdef::Couplings3<double> couplings3_f(const PotentialSpec& s);
qdef::Couplings3<qdef::Rational> couplings3_q(const PotentialSpec& s);

} // namespace qdef_cli
