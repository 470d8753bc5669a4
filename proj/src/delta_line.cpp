#include "magwedge/delta_line.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "magwedge/numerics.hpp"

namespace magwedge {

namespace {

void check_inputs(double phi, double beta, const char* who) {
    if (!(phi > 0.0) || !(phi < M_PI))
        throw std::invalid_argument(std::string(who) + ": phi must lie in (0, pi)");
    if (!(beta > 0.0))
        throw std::invalid_argument(std::string(who) + ": beta must be > 0");
}

}  // namespace

double f_value(double phi, double beta, double theta, double x, double y) {
    check_inputs(phi, beta, "f_value");
    if (!(x > 0.0) || !(y > 0.0))
        throw std::invalid_argument("f_value: x, y must be > 0");
    const double t = std::tan(0.5 * phi);
    const double coupling = beta * x / std::sqrt(M_PI) * std::exp(-y * y * t * t) *
                            (1.0 + magwedge::erf(y));
    return 1.0 + 0.25 * x * x * x * x - x * x * theta - coupling;
}

double f_value_gauss(double phi, double beta, double theta, double a, double c) {
    check_inputs(phi, beta, "f_value_gauss");
    if (!(a > 0.0) || !(c > 0.0))
        throw std::invalid_argument("f_value_gauss: a, c must be > 0");
    const double s = std::sin(0.5 * phi);
    const double x = 1.0 / std::sqrt(a);
    const double y = std::sqrt(2.0 * a * c * c) * std::cos(0.5 * phi);
    const double coupling = beta * x / std::sqrt(M_PI) *
                            std::exp(-2.0 * a * c * c * s * s) *
                            (1.0 + magwedge::erf(y));
    return 1.0 + 0.25 / (a * a) - theta / a - coupling;
}

FInfResult f_inf(double phi, double beta, double theta, const FInfOptions& opt) {
    check_inputs(phi, beta, "f_inf");
    if (opt.nx < 2 || opt.ny < 2 || !(opt.lo > 0.0) || !(opt.lo < opt.hi))
        throw std::invalid_argument("f_inf: invalid grid options");

    const double t = std::tan(0.5 * phi);
    const double erf_scale = 1.0 / std::sqrt(M_PI);
    auto f = [&](double x, double y) {
        return 1.0 + 0.25 * x * x * x * x - x * x * theta -
               beta * x * erf_scale * std::exp(-y * y * t * t) * (1.0 + std::erf(y));
    };

    // coarse log-spaced grid
    const double llo = std::log(opt.lo), lhi = std::log(opt.hi);
    FInfResult best;
    best.f_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < opt.nx; ++i) {
        const double x = std::exp(llo + (lhi - llo) * i / (opt.nx - 1));
        for (int j = 0; j < opt.ny; ++j) {
            const double y = std::exp(llo + (lhi - llo) * j / (opt.ny - 1));
            const double v = f(x, y);
            if (v < best.f_min) best = {v, x, y};
        }
    }

    // Nelder-Mead in log coordinates from the best cell; the incumbent is only
    // ever replaced by a strictly better point.
    using Pt = std::array<double, 2>;
    auto eval = [&](const Pt& z) { return f(std::exp(z[0]), std::exp(z[1])); };
    const double step = (lhi - llo) / (std::max(opt.nx, opt.ny) - 1);
    Pt z0{std::log(best.x_star), std::log(best.y_star)};
    std::array<Pt, 3> simplex{z0, Pt{z0[0] + step, z0[1]}, Pt{z0[0], z0[1] + step}};
    std::array<double, 3> fv{eval(simplex[0]), eval(simplex[1]), eval(simplex[2])};

    for (int it = 0; it < opt.nm_max_iter; ++it) {
        // order ascending
        std::array<int, 3> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        std::array<Pt, 3> sx{simplex[idx[0]], simplex[idx[1]], simplex[idx[2]]};
        std::array<double, 3> sf{fv[idx[0]], fv[idx[1]], fv[idx[2]]};
        simplex = sx;
        fv = sf;
        if (fv[2] - fv[0] < 1e-13 * (std::abs(fv[0]) + 1e-13)) break;

        const Pt centroid{0.5 * (simplex[0][0] + simplex[1][0]),
                          0.5 * (simplex[0][1] + simplex[1][1])};
        auto blend = [&](double coef) {
            return Pt{centroid[0] + coef * (centroid[0] - simplex[2][0]),
                      centroid[1] + coef * (centroid[1] - simplex[2][1])};
        };
        const Pt xr = blend(1.0);
        const double fr = eval(xr);
        if (fr < fv[0]) {
            const Pt xe = blend(2.0);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[2] = xe;
                fv[2] = fe;
            } else {
                simplex[2] = xr;
                fv[2] = fr;
            }
        } else if (fr < fv[1]) {
            simplex[2] = xr;
            fv[2] = fr;
        } else {
            const Pt xc = blend(fr < fv[2] ? 0.5 : -0.5);
            const double fc = eval(xc);
            if (fc < std::min(fr, fv[2])) {
                simplex[2] = xc;
                fv[2] = fc;
            } else {  // shrink toward the best vertex
                for (int k = 1; k < 3; ++k) {
                    simplex[k] = Pt{0.5 * (simplex[k][0] + simplex[0][0]),
                                    0.5 * (simplex[k][1] + simplex[0][1])};
                    fv[k] = eval(simplex[k]);
                }
            }
        }
        for (int k = 0; k < 3; ++k)
            if (fv[k] < best.f_min)
                best = {fv[k], std::exp(simplex[k][0]), std::exp(simplex[k][1])};
    }
    return best;
}

DeltaVerdict delta_exists(double phi, double beta, double theta,
                          const FInfOptions& opt) {
    const FInfResult r = f_inf(phi, beta, theta, opt);
    DeltaVerdict v;
    v.exists = r.f_min < -1e-9;
    v.f_min = r.f_min;
    v.x_star = r.x_star;
    v.y_star = r.y_star;
    return v;
}

double small_beta_certificate(double phi, double y) {
    if (!(phi > 0.0) || !(phi < M_PI))
        throw std::invalid_argument("small_beta_certificate: phi must lie in (0, pi)");
    const double t = std::tan(0.5 * phi);
    return std::sqrt(2.0) - std::exp(-y * y * t * t) * (1.0 + magwedge::erf(y));
}

double large_beta_certificate(double phi, double y) {
    if (!(phi > 0.0) || !(phi < M_PI))
        throw std::invalid_argument("large_beta_certificate: phi must lie in (0, pi)");
    const double t = std::tan(0.5 * phi);
    const double g =
        2.0 / std::sqrt(M_PI) * std::exp(-y * y * t * t) * (1.0 + magwedge::erf(y));
    return 1.0 - 0.25 * g * g;
}

}  // namespace magwedge
