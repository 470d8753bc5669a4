#pragma once

#include <Eigen/Dense>
#include <vector>

namespace magwedge {

// Closed-form constants of the order-2 Ansatz condition (Neumann case).
struct N2Constants {
    double s;             // sqrt(9 - 2 pi)
    double mu1, mu2;      // (s +- 1) / sqrt(4 - pi)
    double nu1, nu2;      // sqrt(4-pi) (3 - pi +- s) / (2 (1 +- s))
    double lambda1, lambda2;  // (10 - 2 pi +- 2 s) / (4 - pi)
    double c1, c2;        // (-3 +- s) / sqrt(pi)
    double r1, r2;        // (s -+ 1) / (2 (3 - pi +- s))
    double delta1, delta2;    // (-1 +- s) / 4

    static N2Constants make();
};

/// Left-hand side of the order-2 existence condition; existence is certified
/// when it exceeds 1. Cross-asserted against the functional value.
double n2_condition_lhs(double phi, double theta);

/// Optimal order-2 functional value as a closed form in phi; negative iff the
/// condition LHS exceeds 1.
double n2_functional_value(double phi, double theta);

/// Radial-only part of the reduced functional,
/// J(a) = phi (4a^2 + 1 - 4 a theta) / (8 a^2).
double j_of_a(double phi, double theta, double a);

// Constant-coefficient ODE system L b'' = R b obeyed by the optimal angular
// coefficients: L_{mk} = E_{m+k-1}(a), R_{mk} = m k E_{m+k-1}(a) (1-based).
struct OdeSystem {
    Eigen::MatrixXd left;
    Eigen::MatrixXd right;
};

/// Builds the order-N system; requires 1 <= N <= 8, a > 0. The left matrix is
/// a positive-definite Hankel moment matrix (checked).
OdeSystem build_ode_system(int N, double a);

struct DirectMin {
    double value = 0.0;            // stationary functional value
    std::vector<double> b;         // minimizer samples, component-major: b[k*(M+1)+i]
    int grid_size = 0;             // M (number of cells; M+1 nodes)
    double residual = 0.0;         // relative stationarity residual
};

/// Minimizes the reduced functional over P1 finite-element samples of the
/// angular coefficients on a uniform grid of M cells over [0, phi]. Conforming
/// discretization: the value decreases monotonically under grid refinement and
/// bounds the true Ansatz minimum from above.
DirectMin minimize_direct(int N, double phi, double theta, double a, int M);

struct SpectralMin {
    double value = 0.0;
    std::vector<double> mu;       // exponential rates, descending
    std::vector<double> alpha;    // coefficients, ordered a_1^+, a_1^-, a_2^+, ...
    Eigen::MatrixXd vectors;      // eigenvectors of L^{-1} R, last component 1
};

/// Same minimization through the analytic route: diagonalize L^{-1} R,
/// expand in exponential solutions, solve the stationarity system for the 2N
/// boundary coefficients. Throws SpectrumError if the pencil spectrum is not
/// real positive (callers then fall back to minimize_direct).
SpectralMin minimize_spectral(int N, double phi, double theta, double a);

struct AnsatzMin {
    double value = 0.0;
    double a_star = 0.0;
};

/// min over the Gaussian parameter a in [0.05, 5] of minimize_direct, coarse
/// pre-scan (seeded at a = theta) followed by golden section.
AnsatzMin min_over_a(int N, double phi, double theta, int M);

/// Largest aperture phi certified by the order-N Ansatz: bisection of the sign
/// of min_a I over (0.3 pi, 0.8 pi) down to width tol_phi. Requires
/// 1 <= N <= 6 and tol_phi >= 1e-4 pi.
double critical_aperture(int N, double theta, double tol_phi, int M = 160);

}  // namespace magwedge
