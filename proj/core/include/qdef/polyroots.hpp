#pragma once

namespace qdef::roots {

/// All real roots of a x^2 + b x + c, ascending. Returns the count (0..2).
/// Degenerate leading coefficients fall through to lower degrees.
int real_roots_quadratic(double a, double b, double c, double out[2]);

/// All distinct real roots of a x^3 + b x^2 + c x + d, ascending, Newton
/// polished against the input polynomial. Near-multiple roots are merged.
int real_roots_cubic(double a, double b, double c, double d, double out[3]);

/// All distinct real roots of a x^4 + b x^3 + c x^2 + d x + e, ascending.
int real_roots_quartic(double a, double b, double c, double d, double e, double out[4]);

} // namespace qdef::roots
