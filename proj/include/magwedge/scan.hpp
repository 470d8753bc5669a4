#pragma once

#include <string>

#include "magwedge/cache.hpp"
#include "magwedge/fiber.hpp"

namespace magwedge {

// Inclusive axis: count values from lo to hi (a single value when count == 1).
struct AxisSpec {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;

    double value(int i) const;
    void validate(const char* name) const;
};

// Parameter-plane lattice; phi is specified in multiples of pi.
struct RegionSpec {
    AxisSpec phi_over_pi;
    AxisSpec beta;
};

/// Robin-wedge existence scan. Columns:
/// phi_over_pi,beta,theta,exists,p_min_value,argmin_x. One threshold solve per
/// beta column through the cache; cells evaluate in parallel over `jobs`
/// workers with deterministic output.
std::string robin_region_csv(const RegionSpec& spec, const FiberConfig& cfg,
                             ThresholdCache& cache, int jobs = 1);

/// Delta-line existence scan (requires beta > 0 across the grid). Columns:
/// phi_over_pi,beta,theta,exists,f_min,x_star,y_star.
std::string delta_region_csv(const RegionSpec& spec, const FiberConfig& cfg,
                             ThresholdCache& cache, int jobs = 1);

/// Order-2 functional value versus aperture. Columns: phi_over_pi,I_value.
std::string neumann_curve_csv(const AxisSpec& phi_over_pi, const FiberConfig& cfg,
                              ThresholdCache& cache);

}  // namespace magwedge
