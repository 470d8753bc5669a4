#pragma once

#include <functional>
#include <vector>

namespace magwedge {

/// Gauss error function erf(x) = 2/sqrt(pi) * int_0^x exp(-t^2) dt.
/// Odd, monotone increasing, |erf(x)| < 1 for finite x.
double erf(double x);

/// Gaussian moment E_n(a) = int_0^inf r^n exp(-a*r^2) dr in closed form,
/// E_n(a) = Gamma((n+1)/2) / (2 a^((n+1)/2)). Requires n >= 0 and a > 0.
double gaussian_moment(int n, double a);

// Symmetric tridiagonal matrix of order M >= 2: diag has M entries,
// off has M-1 entries.
struct Tridiag {
    std::vector<double> diag;
    std::vector<double> off;

    int size() const { return static_cast<int>(diag.size()); }
    void validate() const;
};

/// k-th smallest eigenvalue (k = 0 for the ground state) via Sturm-sequence
/// bisection, absolute tolerance 1e-10.
double eigenvalue(const Tridiag& t, int k);

/// Smallest eigenvalue of a symmetric tridiagonal matrix.
double smallest_eig(const Tridiag& t);

struct ScalarMin {
    double argmin = 0.0;
    double min = 0.0;
};

/// Golden-section search on [lo, hi] down to interval width tol. The function
/// is assumed unimodal on the bracket; callers coarse-scan first.
ScalarMin golden_min(const std::function<double(double)>& f, double lo, double hi,
                     double tol);

}  // namespace magwedge
