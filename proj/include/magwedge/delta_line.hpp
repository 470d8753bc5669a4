#pragma once

namespace magwedge {

/// Certificate function for the broken-line delta interaction,
///   F(x, y) = 1 + x^4/4 - x^2 theta
///             - beta x pi^{-1/2} exp(-y^2 tan^2(phi/2)) (1 + erf(y)),
/// evaluated for x, y > 0, phi in (0, pi), beta > 0.
double f_value(double phi, double beta, double theta, double x, double y);

/// The same quantity computed from the pre-substitution trial-function
/// parameters: Gaussian width a and shift c, with x = 1/sqrt(a) and
/// y = sqrt(2 a c^2) cos(phi/2). Serves as an independent route for
/// consistency checks.
double f_value_gauss(double phi, double beta, double theta, double a, double c);

struct FInfOptions {
    int nx = 128;
    int ny = 128;
    double lo = 1e-2;
    double hi = 20.0;
    int nm_max_iter = 400;
};

struct FInfResult {
    double f_min = 0.0;
    double x_star = 0.0;
    double y_star = 0.0;
};

/// Infimum of F over (0, inf)^2: log-spaced coarse grid then Nelder-Mead
/// refinement in log coordinates; the refinement never worsens the incumbent
/// grid minimum.
FInfResult f_inf(double phi, double beta, double theta, const FInfOptions& opt = {});

struct DeltaVerdict {
    bool exists = false;  // one-sided: false means "not certified"
    double f_min = 0.0;
    double x_star = 0.0;
    double y_star = 0.0;
};

/// Existence certificate: true iff inf F < -1e-9.
DeltaVerdict delta_exists(double phi, double beta, double theta,
                          const FInfOptions& opt = {});

constexpr double kSmallBetaY = 0.7361215932167728;  // 17 sqrt(3) / 40
constexpr double kLargeBetaY = 1.3;

/// sqrt(2) - exp(-y^2 tan^2(phi/2)) (1 + erf(y)); a negative value certifies
/// existence for all small enough beta > 0 (valid certificate for phi <= pi/3
/// by monotonicity in phi).
double small_beta_certificate(double phi, double y = kSmallBetaY);

/// 1 - g_phi(y)^2 / 4 with g_phi(y) = 2 pi^{-1/2} exp(-y^2 tan^2(phi/2))
/// (1 + erf(y)); negative certifies existence for all large enough beta > 0
/// (valid for phi <= pi/8).
double large_beta_certificate(double phi, double y = kLargeBetaY);

}  // namespace magwedge
