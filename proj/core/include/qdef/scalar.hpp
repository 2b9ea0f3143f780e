#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "qdef/errors.hpp"

namespace qdef {

/// Exact arithmetic realization of the scalar abstraction. Every finite
/// double converts losslessly, so instances given as integer ratios can be
/// decided with zero tolerance.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Rational&) { return true; }

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return static_cast<double>(v); }

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }
inline int sign_of(const Rational& v) { return v.sign(); }

inline double abs_of(double v) { return std::fabs(v); }
inline Rational abs_of(const Rational& v) { return abs(v); }

template <class R>
R scalar_from_double(double v);

template <>
inline double scalar_from_double<double>(double v) { return v; }

template <>
inline Rational scalar_from_double<Rational>(double v) { return Rational(v); } // exact

template <class R>
const R& require_finite(const R& v, const char* where) {
    if (!is_finite(v)) throw NonFiniteValue(std::string(where) + ": value must be finite");
    return v;
}

/// Parses "p", "-p" or "p/q" with integer p, q (q > 0 after normalization).
inline std::optional<Rational> parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(boost::multiprecision::cpp_int(std::string(text)));
        }
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        boost::multiprecision::cpp_int p{std::string(num)}, q{std::string(den)};
        if (q == 0) return std::nullopt;
        return Rational(p, q);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline std::string rational_to_string(const Rational& v) { return v.str(); }

} // namespace qdef
