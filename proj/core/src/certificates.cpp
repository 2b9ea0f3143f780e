#include "qdef/definiteness2.hpp"
#include "qdef/definiteness3.hpp"

namespace qdef {

std::string tensor2_certificate(DecisionBranch b) {
    switch (b) {
    case DecisionBranch::ZeroForm: return "zero-form";
    case DecisionBranch::NegLeading: return "neg-entry-v1111";
    case DecisionBranch::NegTrailing: return "neg-entry-v2222";
    case DecisionBranch::PdCase1: return "Lemma2.3-PD-case(1)";
    case DecisionBranch::PdCase2i: return "Lemma2.3-PD-case(2)(i)";
    case DecisionBranch::PdCase2ii: return "Lemma2.3-PD-case(2)(ii)";
    case DecisionBranch::PsdBranchI: return "Lemma2.3-PSD-(i)";
    case DecisionBranch::PsdBranchII: return "Lemma2.3-PSD-(ii)";
    case DecisionBranch::LemmaViolated: return "Lemma2.3-violated";
    case DecisionBranch::EdgeLeadOdd: return "edge-v1111-zero-odd";
    case DecisionBranch::EdgeTrailOdd: return "edge-v2222-zero-odd";
    case DecisionBranch::EdgeLeadQuadPsd: return "edge-v1111-zero-quad-psd";
    case DecisionBranch::EdgeTrailQuadPsd: return "edge-v2222-zero-quad-psd";
    case DecisionBranch::EdgeLeadQuadIndef: return "edge-v1111-zero-quad-indef";
    case DecisionBranch::EdgeTrailQuadIndef: return "edge-v2222-zero-quad-indef";
    }
    return "unknown";
}

std::string couplings2_certificate(DecisionBranch b) {
    switch (b) {
    case DecisionBranch::ZeroForm: return "zero-form";
    case DecisionBranch::NegLeading: return "neg-lambda40";
    case DecisionBranch::NegTrailing: return "neg-lambda04";
    case DecisionBranch::PdCase1: return "Thm3.3-(1)";
    case DecisionBranch::PdCase2i: return "Thm3.3-(2)(i)";
    case DecisionBranch::PdCase2ii: return "Thm3.3-(2)(ii)";
    case DecisionBranch::PsdBranchI: return "Thm3.3-PSD-(i)";
    case DecisionBranch::PsdBranchII: return "Thm3.3-PSD-(ii)";
    case DecisionBranch::LemmaViolated: return "Thm3.3-violated";
    case DecisionBranch::EdgeLeadOdd: return "edge-lambda40-zero-odd";
    case DecisionBranch::EdgeTrailOdd: return "edge-lambda04-zero-odd";
    case DecisionBranch::EdgeLeadQuadPsd: return "edge-lambda40-zero-quad-psd";
    case DecisionBranch::EdgeTrailQuadPsd: return "edge-lambda04-zero-quad-psd";
    case DecisionBranch::EdgeLeadQuadIndef: return "edge-lambda40-zero-quad-indef";
    case DecisionBranch::EdgeTrailQuadIndef: return "edge-lambda04-zero-quad-indef";
    }
    return "unknown";
}

std::string lift3_certificate(bool primed_route, DecisionBranch b) {
    switch (b) {
    case DecisionBranch::PdCase1: return primed_route ? "Thm3.6-(2)-③" : "Thm3.6-(1)-①";
    case DecisionBranch::PdCase2i: return primed_route ? "Thm3.6-(2)-④(i)" : "Thm3.6-(1)-②(i)";
    case DecisionBranch::PdCase2ii: return primed_route ? "Thm3.6-(2)-④(ii)" : "Thm3.6-(1)-②(ii)";
    case DecisionBranch::PsdBranchI: return primed_route ? "Thm3.7-(2)-(i)" : "Thm3.7-(1)-(i)";
    case DecisionBranch::PsdBranchII: return primed_route ? "Thm3.7-(2)-(ii)" : "Thm3.7-(1)-(ii)";
    default: return primed_route ? "Thm3.7-(2)-edge" : "Thm3.7-(1)-edge";
    }
}

std::string m_form_class_name(MFormClass m) {
    switch (m) {
    case MFormClass::Zero: return "Zero";
    case MFormClass::PositiveDefinite: return "PositiveDefinite";
    case MFormClass::PositiveSemidefinite: return "PositiveSemidefinite";
    case MFormClass::NegativeDefinite: return "NegativeDefinite";
    case MFormClass::NegativeSemidefinite: return "NegativeSemidefinite";
    case MFormClass::Indefinite: return "Indefinite";
    }
    return "unknown";
}

} // namespace qdef
