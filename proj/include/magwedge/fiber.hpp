#pragma once

#include <vector>

namespace magwedge {

// Which 1D fiber family is being solved:
//   RobinHalfLine - harmonic oscillator on [p, inf) with f'(p) = -beta f(p),
//   DeltaFullLine - oscillator on R with an attractive delta of strength beta
//                   at t = p.
enum class FiberKind { RobinHalfLine, DeltaFullLine };

struct FiberModel {
    FiberKind kind = FiberKind::RobinHalfLine;
    double beta = 0.0;
};

// Discretization / scan parameters for the fiber solver.
struct FiberConfig {
    double h = 2e-3;        // grid step (<= 1e-2)
    double L = 12.0;        // truncation margin (>= 8)
    double p_min = -10.0;   // coarse scan bracket for the band minimum
    double p_max = 10.0;
    double p_step = 0.25;
    double golden_tol = 1e-7;

    void validate() const;
};

struct ThresholdResult {
    double theta = 0.0;     // inf_p of the band function
    double argmin_p = 0.0;  // NaN when the infimum is not attained (delta, beta <= 0)
    FiberModel model;
    FiberConfig config;
};

/// Lowest eigenvalue of the fiber operator at momentum p (the band function).
double band_value(const FiberModel& model, double p, const FiberConfig& cfg = {});

/// Bottom of the essential spectrum: coarse p-scan plus golden-section
/// refinement. For the delta model this returns exactly 1 when beta <= 0 and
/// the p = 0 fiber value when beta > 0 (cross-checked against the scan).
ThresholdResult threshold(const FiberModel& model, const FiberConfig& cfg = {});

/// Single fiber solve giving the delta-line threshold: theta_delta(0) for
/// beta > 0, exactly 1 otherwise. Cheap path used by region scans.
ThresholdResult delta_threshold_origin(double beta, const FiberConfig& cfg = {});

/// Least-squares slope through (0, 1) of the delta threshold versus beta.
/// Diagnostic for the weak-coupling expansion; needs >= 3 points in (0, 0.2]
/// with at least two distinct values.
double expansion_slope_check(const std::vector<double>& betas,
                             const FiberConfig& cfg = {});

}  // namespace magwedge
