#include "magwedge/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "magwedge/errors.hpp"
#include "magwedge/numerics.hpp"

namespace magwedge {

void FiberConfig::validate() const {
    if (!(h > 0.0) || h > 1e-2)
        throw std::invalid_argument("FiberConfig: h must be in (0, 1e-2]");
    if (L < 8.0) throw std::invalid_argument("FiberConfig: L must be >= 8");
    if (!(p_min < p_max)) throw std::invalid_argument("FiberConfig: empty p bracket");
    if (!(p_step > 0.0)) throw std::invalid_argument("FiberConfig: p_step must be > 0");
    if (!(golden_tol > 0.0))
        throw std::invalid_argument("FiberConfig: golden_tol must be > 0");
}

namespace {

// Robin fiber on [p, p + max(L, |p|+L)]: potential t^2, boundary condition
// f'(p) = -beta f(p) by the centered ghost point, Dirichlet at the far end.
// The ghost row is symmetrized by scaling the boundary unknown, which leaves
// the spectrum intact and puts sqrt(2) on the first off-diagonal.
double robin_band(double p, double beta, const FiberConfig& cfg) {
    const double right = p + std::max(cfg.L, std::abs(p) + cfg.L);
    const int m = static_cast<int>(std::ceil((right - p) / cfg.h));
    const double h = cfg.h;
    const double ih2 = 1.0 / (h * h);

    Tridiag t;
    t.diag.resize(m);
    t.off.assign(m - 1, -ih2);
    for (int i = 0; i < m; ++i) {
        const double ti = p + i * h;
        t.diag[i] = 2.0 * ih2 + ti * ti;
    }
    t.diag[0] -= 2.0 * beta / h;
    t.off[0] = -std::sqrt(2.0) * ih2;
    return smallest_eig(t);
}

// Delta fiber on [p - nl*h, p + nr*h] covering [min(0,p)-L, max(0,p)+L],
// Dirichlet ends; the grid is anchored at p so a node lands exactly on the
// interaction point, where beta/h is subtracted from the diagonal.
double delta_band(double p, double beta, const FiberConfig& cfg) {
    const double left = std::min(0.0, p) - cfg.L;
    const double right = std::max(0.0, p) + cfg.L;
    const double h = cfg.h;
    const int nl = static_cast<int>(std::ceil((p - left) / h));
    const int nr = static_cast<int>(std::ceil((right - p) / h));
    const int m = nl + nr - 1;  // interior nodes
    const double ih2 = 1.0 / (h * h);

    Tridiag t;
    t.diag.resize(m);
    t.off.assign(m - 1, -ih2);
    const double t0 = p - nl * h;
    for (int i = 0; i < m; ++i) {
        const double ti = t0 + (i + 1) * h;
        t.diag[i] = 2.0 * ih2 + ti * ti;
    }
    t.diag[nl - 1] -= beta / h;
    return smallest_eig(t);
}

}  // namespace

double band_value(const FiberModel& model, double p, const FiberConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(p)) throw std::invalid_argument("band_value: p must be finite");
    return model.kind == FiberKind::RobinHalfLine ? robin_band(p, model.beta, cfg)
                                                  : delta_band(p, model.beta, cfg);
}

ThresholdResult delta_threshold_origin(double beta, const FiberConfig& cfg) {
    cfg.validate();
    ThresholdResult out;
    out.model = FiberModel{FiberKind::DeltaFullLine, beta};
    out.config = cfg;
    if (beta <= 0.0) {
        out.theta = 1.0;
        out.argmin_p = std::numeric_limits<double>::quiet_NaN();
    } else {
        out.theta = delta_band(0.0, beta, cfg);
        out.argmin_p = 0.0;
    }
    return out;
}

ThresholdResult threshold(const FiberModel& model, const FiberConfig& cfg) {
    cfg.validate();
    if (model.kind == FiberKind::DeltaFullLine && model.beta <= 0.0)
        return delta_threshold_origin(model.beta, cfg);

    auto band = [&](double p) { return band_value(model, p, cfg); };

    // coarse scan
    int best = -1;
    double best_val = std::numeric_limits<double>::infinity();
    std::vector<double> ps;
    for (double p = cfg.p_min; p <= cfg.p_max + 1e-12; p += cfg.p_step)
        ps.push_back(p);
    for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
        const double v = band(ps[i]);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    if (best == 0 || best == static_cast<int>(ps.size()) - 1)
        throw BracketError("threshold: band minimum at the p-scan boundary p=" +
                           std::to_string(ps[best]) + "; widen the bracket");

    const ScalarMin refined =
        golden_min(band, ps[best - 1], ps[best + 1], cfg.golden_tol);
    double theta = std::min(refined.min, best_val);
    double argmin_p = refined.min <= best_val ? refined.argmin : ps[best];

    ThresholdResult out;
    out.model = model;
    out.config = cfg;
    if (model.kind == FiberKind::DeltaFullLine) {
        // Theta_delta = theta_delta(0) for beta > 0; the scan only verifies it.
        const double at_origin = delta_band(0.0, model.beta, cfg);
        if (std::abs(at_origin - theta) > 1e-7)
            throw NumericalError(
                "threshold: delta band scan disagrees with the p=0 fiber value");
        out.theta = at_origin;
        out.argmin_p = 0.0;
    } else {
        out.theta = theta;
        out.argmin_p = argmin_p;
    }
    return out;
}

double expansion_slope_check(const std::vector<double>& betas, const FiberConfig& cfg) {
    if (betas.size() < 3)
        throw std::invalid_argument("expansion_slope_check: need at least 3 betas");
    for (double b : betas)
        if (!(b > 0.0) || b > 0.2)
            throw std::invalid_argument("expansion_slope_check: betas must lie in (0, 0.2]");
    const double b0 = betas.front();
    bool distinct = false;
    for (double b : betas)
        if (std::abs(b - b0) > 1e-15) distinct = true;
    if (!distinct)
        throw std::invalid_argument(
            "expansion_slope_check: degenerate fit, betas must not all coincide");

    // slope of the through-origin fit of (theta - 1) against beta
    double num = 0.0, den = 0.0;
    for (double b : betas) {
        const double th = delta_threshold_origin(b, cfg).theta;
        num += b * (th - 1.0);
        den += b * b;
    }
    return num / den;
}

}  // namespace magwedge
