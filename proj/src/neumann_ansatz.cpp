#include "magwedge/neumann_ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "magwedge/errors.hpp"
#include "magwedge/numerics.hpp"

namespace magwedge {

N2Constants N2Constants::make() {
    N2Constants k{};
    k.s = std::sqrt(9.0 - 2.0 * M_PI);
    const double sq = std::sqrt(4.0 - M_PI);
    k.mu1 = (k.s + 1.0) / sq;
    k.mu2 = (k.s - 1.0) / sq;
    k.nu1 = sq * (3.0 - M_PI + k.s) / (2.0 * (1.0 + k.s));
    k.nu2 = sq * (3.0 - M_PI - k.s) / (2.0 * (1.0 - k.s));
    k.lambda1 = (10.0 - 2.0 * M_PI + 2.0 * k.s) / (4.0 - M_PI);
    k.lambda2 = (10.0 - 2.0 * M_PI - 2.0 * k.s) / (4.0 - M_PI);
    k.c1 = (-3.0 + k.s) / std::sqrt(M_PI);
    k.c2 = (-3.0 - k.s) / std::sqrt(M_PI);
    k.r1 = (k.s - 1.0) / (2.0 * (3.0 - M_PI + k.s));
    k.r2 = (k.s + 1.0) / (2.0 * (3.0 - M_PI - k.s));
    k.delta1 = (-1.0 + k.s) / 4.0;
    k.delta2 = (-1.0 - k.s) / 4.0;
    return k;
}

namespace {

double n2_bracket(double phi) {
    const N2Constants k = N2Constants::make();
    const double m2 = k.mu1 * k.mu1 * k.mu2 * k.mu2;
    return 2.0 * phi * k.s -
           m2 * (k.nu1 * std::tanh(0.5 * k.mu1 * phi) +
                 k.nu2 * std::tanh(0.5 * k.mu2 * phi));
}

void check_phi(double phi, const char* who) {
    if (!(phi > 0.0) || !(phi < M_PI))
        throw std::invalid_argument(std::string(who) + ": phi must lie in (0, pi)");
}

}  // namespace

double n2_condition_lhs(double phi, double theta) {
    check_phi(phi, "n2_condition_lhs");
    const double s = N2Constants::make().s;
    const double br = n2_bracket(phi);
    const double lhs = 2.0 * phi * s * theta * theta / br;
    // the functional value must tell the same story: I = (phi/2)(1 - LHS)
    const double value = n2_functional_value(phi, theta);
    if (std::abs(value - 0.5 * phi * (1.0 - lhs)) >
        1e-12 * std::max(1.0, std::abs(value)))
        throw NumericalError("n2_condition_lhs: condition and functional value disagree");
    return lhs;
}

double n2_functional_value(double phi, double theta) {
    check_phi(phi, "n2_functional_value");
    const double s = N2Constants::make().s;
    return 0.5 * phi - phi * phi * s * theta * theta / n2_bracket(phi);
}

double j_of_a(double phi, double theta, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("j_of_a: a must be > 0");
    return phi * (4.0 * a * a + 1.0 - 4.0 * a * theta) / (8.0 * a * a);
}

OdeSystem build_ode_system(int N, double a) {
    if (N < 1 || N > 8)
        throw std::invalid_argument("build_ode_system: N must lie in 1..8");
    if (!(a > 0.0)) throw std::invalid_argument("build_ode_system: a must be > 0");
    OdeSystem sys;
    sys.left.resize(N, N);
    sys.right.resize(N, N);
    for (int m = 1; m <= N; ++m)
        for (int k = 1; k <= N; ++k) {
            const double e = gaussian_moment(m + k - 1, a);
            sys.left(m - 1, k - 1) = e;
            sys.right(m - 1, k - 1) = m * k * e;
        }
    if (Eigen::LLT<Eigen::MatrixXd>(sys.left).info() != Eigen::Success)
        throw NumericalError("build_ode_system: moment matrix is not positive definite");
    return sys;
}

namespace {

// Symmetric positive-definite band matrix, lower storage:
// band[r * n + i] = A(i + r, i) for r = 0..w. In-place Cholesky + solve.
class BandedSpd {
public:
    BandedSpd(int n, int w) : n_(n), w_(w), band_((w + 1) * n, 0.0) {}

    double& at(int i, int j) {  // requires i >= j, i - j <= w
        return band_[(i - j) * n_ + j];
    }

    void factor() {
        for (int j = 0; j < n_; ++j) {
            double d = at(j, j);
            for (int k = std::max(0, j - w_); k < j; ++k) {
                const double l = at(j, k);
                d -= l * l;
            }
            if (!(d > 0.0))
                throw NumericalError("minimize_direct: discretized system lost "
                                     "positive definiteness (invalid discretization)");
            d = std::sqrt(d);
            at(j, j) = d;
            for (int i = j + 1; i <= std::min(n_ - 1, j + w_); ++i) {
                double v = at(i, j);
                for (int k = std::max(0, i - w_); k < j; ++k)
                    v -= at(i, k) * at(j, k);
                at(i, j) = v / d;
            }
        }
    }

    // solve L L^T x = b in place
    void solve(std::vector<double>& b) const {
        for (int i = 0; i < n_; ++i) {
            double v = b[i];
            for (int k = std::max(0, i - w_); k < i; ++k)
                v -= band_[(i - k) * n_ + k] * b[k];
            b[i] = v / band_[i];
        }
        for (int i = n_ - 1; i >= 0; --i) {
            double v = b[i];
            for (int k = i + 1; k <= std::min(n_ - 1, i + w_); ++k)
                v -= band_[(k - i) * n_ + i] * b[k];
            b[i] = v / band_[i];
        }
    }

private:
    int n_, w_;
    std::vector<double> band_;
};

}  // namespace

DirectMin minimize_direct(int N, double phi, double theta, double a, int M) {
    check_phi(phi, "minimize_direct");
    if (N < 1 || N > 8)
        throw std::invalid_argument("minimize_direct: N must lie in 1..8");
    if (!(a > 0.0)) throw std::invalid_argument("minimize_direct: a must be > 0");
    if (M < 64) throw std::invalid_argument("minimize_direct: grid size M must be >= 64");

    const int nodes = M + 1;
    const int n = N * nodes;  // unknown (node i, component j) at index i*N + j
    const int w = 2 * N - 1;
    const double h = phi / M;

    // moment coefficients E_{j+k+1}(a) for 0-based components
    std::vector<double> em(N * N);
    std::vector<double> eb(N);
    for (int j = 0; j < N; ++j) {
        for (int k = 0; k < N; ++k) em[j * N + k] = gaussian_moment(j + k + 1, a);
        eb[j] = gaussian_moment(j + 2, a);
    }

    // Quadratic part K (exact P1 element matrices: mass h/3, h/6; stiffness
    // +-1/h) and the boundary linear functional w.
    BandedSpd K(n, w);
    std::vector<double> rhs(n, 0.0);
    for (int c = 0; c < M; ++c) {
        for (int lj = 0; lj < 2; ++lj)
            for (int lk = 0; lk < 2; ++lk) {
                const double mass = (lj == lk) ? h / 3.0 : h / 6.0;
                const double stiff = (lj == lk) ? 1.0 / h : -1.0 / h;
                for (int j = 0; j < N; ++j)
                    for (int k = 0; k < N; ++k) {
                        const int row = (c + lj) * N + j;
                        const int col = (c + lk) * N + k;
                        if (row < col) continue;  // symmetric: keep lower triangle
                        K.at(row, col) +=
                            em[j * N + k] * ((j + 1) * (k + 1) * mass + stiff);
                    }
            }
    }
    for (int j = 0; j < N; ++j) {
        rhs[M * N + j] += eb[j];
        rhs[j] -= eb[j];
    }

    // I(b) = b^T K b - w^T b + J(a); stationary point solves 2 K b = w.
    std::vector<double> sol = rhs;
    K.factor();
    K.solve(sol);  // sol = K^{-1} w = 2 b*

    double wk = 0.0, ww = 0.0;
    for (int i = 0; i < n; ++i) {
        wk += rhs[i] * sol[i];
        ww += rhs[i] * rhs[i];
    }

    DirectMin out;
    out.grid_size = M;
    out.value = j_of_a(phi, theta, a) - 0.25 * wk;
    out.b.resize(n);
    // component-major output: b[k*(M+1) + i]
    for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < N; ++j) out.b[j * nodes + i] = 0.5 * sol[i * N + j];

    // relative stationarity residual ||2 K b - w|| / ||w||; reuse the factored
    // K is not possible for a multiply, so rebuild the product cell-wise
    std::vector<double> prod(n, 0.0);
    for (int c = 0; c < M; ++c)
        for (int lj = 0; lj < 2; ++lj)
            for (int lk = 0; lk < 2; ++lk) {
                const double mass = (lj == lk) ? h / 3.0 : h / 6.0;
                const double stiff = (lj == lk) ? 1.0 / h : -1.0 / h;
                for (int j = 0; j < N; ++j)
                    for (int k = 0; k < N; ++k)
                        prod[(c + lj) * N + j] +=
                            em[j * N + k] * ((j + 1) * (k + 1) * mass + stiff) *
                            sol[(c + lk) * N + k];
            }
    double rr = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = prod[i] - rhs[i];
        rr += r * r;
    }
    out.residual = std::sqrt(rr) / std::max(std::sqrt(ww), 1e-300);
    return out;
}

SpectralMin minimize_spectral(int N, double phi, double theta, double a) {
    check_phi(phi, "minimize_spectral");
    const OdeSystem sys = build_ode_system(N, a);

    // L^{-1} R is similar to C^{-1} R C^{-T} with L = C C^T, which is
    // symmetric positive definite because R = D L D with D = diag(1..N);
    // its spectrum is therefore real and positive.
    Eigen::LLT<Eigen::MatrixXd> llt(sys.left);
    if (llt.info() != Eigen::Success)
        throw SpectrumError("minimize_spectral: Cholesky of the moment matrix failed");
    const Eigen::MatrixXd cinv_r = llt.matrixL().solve(sys.right);
    const Eigen::MatrixXd sym = llt.matrixL().solve(cinv_r.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    if (es.info() != Eigen::Success)
        throw SpectrumError("minimize_spectral: eigen decomposition failed");

    SpectralMin out;
    out.mu.resize(N);
    out.vectors.resize(N, N);
    for (int j = 0; j < N; ++j) {
        const double lam = es.eigenvalues()(N - 1 - j);  // descending
        if (!(lam > 0.0))
            throw SpectrumError("minimize_spectral: non-real or non-positive spectrum");
        out.mu[j] = std::sqrt(lam);
        Eigen::VectorXd v =
            llt.matrixU().solve(es.eigenvectors().col(N - 1 - j));
        if (v(N - 1) == 0.0)
            throw SpectrumError("minimize_spectral: degenerate eigenvector scaling");
        out.vectors.col(j) = v / v(N - 1);
    }

    std::vector<double> eb(N);
    for (int j = 0; j < N; ++j) eb[j] = gaussian_moment(j + 2, a);

    // quadratic form in the 2N coefficients alpha_{j,+-} of
    // chi_j = a_j^+ e^{mu_j th} + a_j^- e^{-mu_j th}
    const int nb = 2 * N;
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(nb, nb);
    Eigen::VectorXd wv = Eigen::VectorXd::Zero(nb);
    auto rate = [&](int p) { return (p % 2 == 0 ? 1.0 : -1.0) * out.mu[p / 2]; };
    auto int_exp = [&](double r) {  // integral_0^phi e^{r th} d th
        return std::abs(r) < 1e-14 ? phi : std::expm1(r * phi) / r;
    };
    for (int p = 0; p < nb; ++p) {
        const int jp = p / 2;
        for (int q = 0; q < nb; ++q) {
            const int jq = q / 2;
            double coef = 0.0;
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k)
                    coef += gaussian_moment(j + k + 1, a) * out.vectors(j, jp) *
                            out.vectors(k, jq) *
                            ((j + 1) * (k + 1) + rate(p) * rate(q));
            Q(p, q) += coef * int_exp(rate(p) + rate(q));
        }
        double b = 0.0;
        for (int k = 0; k < N; ++k)
            b += eb[k] * out.vectors(k, jp) * std::expm1(rate(p) * phi);
        wv(p) = b;
    }
    Q = 0.5 * (Q + Q.transpose()).eval();

    const Eigen::VectorXd alpha = (2.0 * Q).ldlt().solve(wv);
    out.value = j_of_a(phi, theta, a) - 0.5 * wv.dot(alpha);
    out.alpha.assign(alpha.data(), alpha.data() + nb);
    return out;
}

AnsatzMin min_over_a(int N, double phi, double theta, int M) {
    constexpr double a_lo = 0.05, a_hi = 5.0;
    auto value = [&](double a) { return minimize_direct(N, phi, theta, a, M).value; };

    // coarse geometric pre-scan, seeded at a = theta when inside the bracket
    std::vector<double> grid;
    const int n_scan = 24;
    for (int i = 0; i < n_scan; ++i)
        grid.push_back(a_lo * std::pow(a_hi / a_lo, i / double(n_scan - 1)));
    if (theta > a_lo && theta < a_hi) grid.push_back(theta);
    std::sort(grid.begin(), grid.end());

    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(grid.size()); ++i) {
        const double v = value(grid[i]);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double lo = grid[std::max(0, best - 1)];
    const double hi = grid[std::min<int>(grid.size() - 1, best + 1)];
    const ScalarMin refined = golden_min(value, lo, hi, 1e-5);

    AnsatzMin out;
    if (refined.min < best_val) {
        out.value = refined.min;
        out.a_star = refined.argmin;
    } else {
        out.value = best_val;
        out.a_star = grid[best];
    }
    return out;
}

double critical_aperture(int N, double theta, double tol_phi, int M) {
    if (N < 1 || N > 6)
        throw std::invalid_argument("critical_aperture: N must lie in 1..6");
    if (!(tol_phi >= 1e-4 * M_PI))
        throw std::invalid_argument("critical_aperture: tol_phi must be >= 1e-4*pi");

    double lo = 0.3 * M_PI, hi = 0.8 * M_PI;
    if (!(min_over_a(N, lo, theta, M).value < 0.0) ||
        !(min_over_a(N, hi, theta, M).value > 0.0))
        throw BracketError("critical_aperture: no sign change in (0.3 pi, 0.8 pi)");
    while (hi - lo > tol_phi) {
        const double mid = 0.5 * (lo + hi);
        if (min_over_a(N, mid, theta, M).value < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;  // largest aperture certified at this resolution
}

}  // namespace magwedge
