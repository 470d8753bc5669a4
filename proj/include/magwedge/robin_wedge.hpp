#pragma once

namespace magwedge {

// Quartic certificate polynomial for the Robin wedge,
//   P(x) = c4 x^4 + c2 x^2 + c1 x + c0,
// with c4 = 2 phi - pi tanh(phi/2), c2 = -8 theta phi, c1 = -16 beta sqrt(pi),
// c0 = 8 phi. A negative minimum over x > 0 certifies a bound state below the
// essential spectrum threshold theta.
struct RobinQuartic {
    double phi = 0.0;    // aperture, radians in (0, pi)
    double beta = 0.0;   // boundary coupling
    double theta = 0.0;  // essential spectrum threshold for this beta

    RobinQuartic(double phi_, double beta_, double theta_);

    double c4() const;
    double c2() const;
    double c1() const;
    double c0() const;
    double operator()(double x) const;
};

struct QuarticMin {
    double x_star = 0.0;  // 0 when the infimum is only approached at x -> 0+
    double p_min = 0.0;
};

/// Global minimum of P over x in (0, inf): closed-form roots of the derivative
/// cubic with a Newton polish, falling back to the boundary value P(0+) = c0
/// when no positive critical point improves on it.
QuarticMin quartic_min(const RobinQuartic& q);

struct RobinVerdict {
    bool exists = false;  // one-sided: false means "not certified"
    double p_min = 0.0;
    double x_star = 0.0;
};

/// Certificate margin guarding against declaring existence on rounding noise.
double robin_certificate_margin(double phi);

/// Existence certificate: true iff min P < -margin.
RobinVerdict robin_exists(double phi, double beta, double theta);

/// P evaluated at x = 1/beta, the large-coupling witness point; negative for
/// phi < sqrt(pi) and beta large whenever -beta^2 <= theta <= 0.
double large_beta_witness(double phi, double beta, double theta);

}  // namespace magwedge
