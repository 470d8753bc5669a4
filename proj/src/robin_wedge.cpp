#include "magwedge/robin_wedge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace magwedge {

RobinQuartic::RobinQuartic(double phi_, double beta_, double theta_)
    : phi(phi_), beta(beta_), theta(theta_) {
    if (!(phi > 0.0) || !(phi < M_PI))
        throw std::invalid_argument("RobinQuartic: phi must lie in (0, pi)");
    if (!std::isfinite(beta) || !std::isfinite(theta))
        throw std::invalid_argument("RobinQuartic: beta, theta must be finite");
}

double RobinQuartic::c4() const { return 2.0 * phi - M_PI * std::tanh(0.5 * phi); }
double RobinQuartic::c2() const { return -8.0 * theta * phi; }
double RobinQuartic::c1() const { return -16.0 * beta * std::sqrt(M_PI); }
double RobinQuartic::c0() const { return 8.0 * phi; }

double RobinQuartic::operator()(double x) const {
    return ((c4() * x * x + c2()) * x + c1()) * x + c0();
}

namespace {

// Real roots of x^3 + p x + q = 0 (trigonometric / Cardano form).
int cubic_roots(double p, double q, double roots[3]) {
    const double disc = 0.25 * q * q + p * p * p / 27.0;
    if (disc > 0.0) {
        const double sd = std::sqrt(disc);
        roots[0] = std::cbrt(-0.5 * q + sd) + std::cbrt(-0.5 * q - sd);
        return 1;
    }
    if (p == 0.0) {  // disc <= 0 with p = 0 forces q = 0: triple root
        roots[0] = 0.0;
        return 1;
    }
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
    const double ang = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
        roots[k] = r * std::cos(ang - 2.0 * M_PI * k / 3.0);
    return 3;
}

}  // namespace

QuarticMin quartic_min(const RobinQuartic& q) {
    const double c4 = q.c4(), c2 = q.c2(), c1 = q.c1(), c0 = q.c0();
    // derivative cubic 4 c4 x^3 + 2 c2 x + c1 = 0, normalized
    const double p = c2 / (2.0 * c4);
    const double qq = c1 / (4.0 * c4);

    double roots[3];
    const int n = cubic_roots(p, qq, roots);

    QuarticMin out;
    out.x_star = 0.0;
    out.p_min = c0;  // infimum at the x -> 0+ boundary unless beaten below
    for (int i = 0; i < n; ++i) {
        double x = roots[i];
        // Newton polish on g(x) = x^3 + p x + q
        for (int it = 0; it < 3; ++it) {
            const double g = (x * x + p) * x + qq;
            const double dg = 3.0 * x * x + p;
            if (dg == 0.0) break;
            x -= g / dg;
        }
        if (x > 0.0) {
            const double val = q(x);
            if (val < out.p_min) {
                out.p_min = val;
                out.x_star = x;
            }
        }
    }
    return out;
}

double robin_certificate_margin(double phi) { return 1e-9 * std::max(1.0, 8.0 * phi); }

RobinVerdict robin_exists(double phi, double beta, double theta) {
    const RobinQuartic q(phi, beta, theta);
    const QuarticMin m = quartic_min(q);
    RobinVerdict v;
    v.exists = m.p_min < -robin_certificate_margin(phi);
    v.p_min = m.p_min;
    v.x_star = m.x_star;
    return v;
}

double large_beta_witness(double phi, double beta, double theta) {
    if (!(beta > 0.0))
        throw std::invalid_argument("large_beta_witness: beta must be > 0");
    return RobinQuartic(phi, beta, theta)(1.0 / beta);
}

}  // namespace magwedge
