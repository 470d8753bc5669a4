#include "magwedge/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "magwedge/errors.hpp"

namespace magwedge {

double erf(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("erf: x must be finite");
    // std::erf is correctly rounded to well below the 1e-12 contract; the
    // series oracle in the test suite revalidates it.
    return std::erf(x);
}

double gaussian_moment(int n, double a) {
    if (n < 0) throw std::invalid_argument("gaussian_moment: n must be >= 0");
    if (!(a > 0.0)) throw std::invalid_argument("gaussian_moment: a must be > 0");
    // E_0 = sqrt(pi)/(2 sqrt(a)), E_1 = 1/(2a), E_n = (n-1)/(2a) * E_{n-2}.
    double value = (n % 2 == 0) ? std::sqrt(M_PI / a) / 2.0 : 1.0 / (2.0 * a);
    for (int m = n % 2; m < n; m += 2) value *= (m + 1) / (2.0 * a);
    return value;
}

void Tridiag::validate() const {
    if (size() < 2) throw std::invalid_argument("Tridiag: order must be >= 2");
    if (off.size() + 1 != diag.size())
        throw std::invalid_argument("Tridiag: off-diagonal must have M-1 entries");
}

namespace {

// Number of eigenvalues of t strictly below x, by counting negative pivots of
// the LDL^T recurrence (Sturm sequence). Zero pivots are nudged to -pivmin,
// which counts an eigenvalue hit exactly, matching the LAPACK convention.
int count_below(const Tridiag& t, double x, double pivmin) {
    int count = 0;
    double q = 1.0;
    const int m = t.size();
    for (int i = 0; i < m; ++i) {
        double d = t.diag[i] - x;
        if (i > 0) d -= t.off[i - 1] * t.off[i - 1] / q;
        if (std::abs(d) < pivmin) d = -pivmin;
        if (d < 0.0) ++count;
        q = d;
    }
    return count;
}

}  // namespace

double eigenvalue(const Tridiag& t, int k) {
    t.validate();
    const int m = t.size();
    if (k < 0 || k >= m) throw std::invalid_argument("eigenvalue: index out of range");

    // Gershgorin bounds
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double bmax = 0.0;
    for (int i = 0; i < m; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.off[i - 1]);
        if (i < m - 1) r += std::abs(t.off[i]);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
        if (i < m - 1) bmax = std::max(bmax, std::abs(t.off[i]));
    }
    const double pivmin =
        std::numeric_limits<double>::min() * std::max(1.0, bmax * bmax);

    const double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double tol =
            std::max(1e-10, 2.0 * eps * std::max(std::abs(lo), std::abs(hi)));
        if (hi - lo <= tol || mid == lo || mid == hi) break;
        if (count_below(t, mid, pivmin) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double smallest_eig(const Tridiag& t) { return eigenvalue(t, 0); }

ScalarMin golden_min(const std::function<double(double)>& f, double lo, double hi,
                     double tol) {
    if (!(lo < hi)) throw std::invalid_argument("golden_min: requires lo < hi");
    if (!(tol > 0.0)) throw std::invalid_argument("golden_min: requires tol > 0");

    constexpr double invphi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
        if (c >= d) break;  // interval exhausted at double precision
    }
    ScalarMin out;
    out.argmin = (fc < fd) ? c : d;
    out.min = std::min(fc, fd);
    return out;
}

}  // namespace magwedge
