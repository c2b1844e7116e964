#include "fgf/gamma.hpp"
#include "fgf/errors.hpp"

#include <cmath>
#include <numbers>

namespace fgf {

bool near_integer(double x, double tol) {
    return std::abs(x - std::round(x)) <= tol;
}

long long nearest_integer(double x) {
    return static_cast<long long>(std::llround(x));
}

SignedLogGamma log_gamma_signed(double x) {
    if (x > 0.0) {
        return {std::lgamma(x), +1};
    }
    if (near_integer(x, 1e-13) && x <= 0.0) {
        throw PoleError("Gamma pole at nonpositive integer x=" + std::to_string(x));
    }
    // Gamma alternates sign on the negative axis: negative on (-1,0),
    // positive on (-2,-1), ...  sign = (-1)^{ceil(-x)}.
    const long long c = static_cast<long long>(std::ceil(-x));
    const int sign = (c % 2 == 0) ? +1 : -1;
    return {std::lgamma(x), sign};
}

double gamma_fn(double x) {
    const auto g = log_gamma_signed(x);
    return g.sign * std::exp(g.log_abs);
}

double sphere_surface_area(int d) {
    if (d < 1) throw DomainError("sphere_surface_area requires d >= 1");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / gamma_fn(0.5 * d);
}

} // namespace fgf
