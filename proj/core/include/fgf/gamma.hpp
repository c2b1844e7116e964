#pragma once

namespace fgf {

/// log|Gamma(x)| together with the sign of Gamma(x).
/// Sign tracking matters: several kernel constants change sign across
/// parameter regimes and a silent sign error is unrecoverable downstream.
struct SignedLogGamma {
    double log_abs;
    int sign; // +1 or -1
};

/// x must not be a nonpositive integer (pole).
SignedLogGamma log_gamma_signed(double x);

/// Gamma(x) via exp(log_gamma_signed); overflows to +-inf for large x.
double gamma_fn(double x);

/// Surface area of the unit sphere S^{d-1} in R^d.
double sphere_surface_area(int d);

/// True when x is within tol of an integer.
bool near_integer(double x, double tol = 1e-12);

/// Nearest integer to x (as double round).
long long nearest_integer(double x);

} // namespace fgf
