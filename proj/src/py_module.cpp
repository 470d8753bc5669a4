#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "magwedge/delta_line.hpp"
#include "magwedge/fiber.hpp"
#include "magwedge/neumann_ansatz.hpp"
#include "magwedge/numerics.hpp"
#include "magwedge/robin_wedge.hpp"

namespace py = pybind11;
using namespace magwedge;

namespace {

FiberModel make_model(const std::string& kind, double beta) {
    if (kind == "robin") return {FiberKind::RobinHalfLine, beta};
    if (kind == "delta") return {FiberKind::DeltaFullLine, beta};
    throw std::invalid_argument("model must be 'robin' or 'delta'");
}

FiberConfig make_config(double h, double L) {
    FiberConfig cfg;
    cfg.h = h;
    cfg.L = L;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bound-state certificates for magnetic Laplacians on wedges";

    m.def("erf", &magwedge::erf, py::arg("x"));
    m.def("gaussian_moment", &gaussian_moment, py::arg("n"), py::arg("a"),
          "E_n(a) = integral_0^inf r^n exp(-a r^2) dr");
    m.def(
        "smallest_eig",
        [](const std::vector<double>& diag, const std::vector<double>& off) {
            return smallest_eig(Tridiag{diag, off});
        },
        py::arg("diag"), py::arg("off"),
        "Smallest eigenvalue of a symmetric tridiagonal matrix");
    m.def(
        "golden_min",
        [](const std::function<double(double)>& f, double lo, double hi, double tol) {
            const ScalarMin r = golden_min(f, lo, hi, tol);
            return py::make_tuple(r.argmin, r.min);
        },
        py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-8);

    m.def(
        "band_value",
        [](const std::string& model, double beta, double p, double h, double L) {
            return band_value(make_model(model, beta), p, make_config(h, L));
        },
        py::arg("model"), py::arg("beta"), py::arg("p"), py::arg("h") = 2e-3,
        py::arg("L") = 12.0, "Fiber band function value at momentum p");
    m.def(
        "threshold",
        [](const std::string& model, double beta, double h, double L) {
            const ThresholdResult r = threshold(make_model(model, beta), make_config(h, L));
            py::dict d;
            d["model"] = model;
            d["beta"] = beta;
            d["theta"] = r.theta;
            if (std::isnan(r.argmin_p))
                d["argmin_p"] = py::none();
            else
                d["argmin_p"] = r.argmin_p;
            d["h"] = h;
            d["L"] = L;
            return d;
        },
        py::arg("model"), py::arg("beta"), py::arg("h") = 2e-3, py::arg("L") = 12.0,
        "Essential-spectrum threshold inf_p of the band function");
    m.def(
        "expansion_slope_check",
        [](const std::vector<double>& betas, double h, double L) {
            return expansion_slope_check(betas, make_config(h, L));
        },
        py::arg("betas"), py::arg("h") = 2e-3, py::arg("L") = 12.0);

    m.def(
        "quartic_min",
        [](double phi, double beta, double theta) {
            const QuarticMin r = quartic_min(RobinQuartic(phi, beta, theta));
            return py::make_tuple(r.x_star, r.p_min);
        },
        py::arg("phi"), py::arg("beta"), py::arg("theta"),
        "(argmin, min) of the Robin certificate quartic over x > 0");
    m.def(
        "robin_exists",
        [](double phi, double beta, double theta) {
            const RobinVerdict v = robin_exists(phi, beta, theta);
            py::dict d;
            d["exists"] = v.exists;
            d["p_min"] = v.p_min;
            d["x_star"] = v.x_star;
            return d;
        },
        py::arg("phi"), py::arg("beta"), py::arg("theta"));
    m.def("large_beta_witness", &large_beta_witness, py::arg("phi"), py::arg("beta"),
          py::arg("theta"));

    m.def("n2_condition_lhs", &n2_condition_lhs, py::arg("phi"), py::arg("theta"));
    m.def("n2_functional_value", &n2_functional_value, py::arg("phi"), py::arg("theta"));
    m.def("j_of_a", &j_of_a, py::arg("phi"), py::arg("theta"), py::arg("a"));
    m.def(
        "build_ode_system",
        [](int N, double a) {
            const OdeSystem s = build_ode_system(N, a);
            return py::make_tuple(s.left, s.right);
        },
        py::arg("N"), py::arg("a"), "(L, R) of the angular ODE system L b'' = R b");
    m.def(
        "minimize_direct",
        [](int N, double phi, double theta, double a, int M) {
            const DirectMin r = minimize_direct(N, phi, theta, a, M);
            py::dict d;
            d["value"] = r.value;
            d["b"] = r.b;
            d["grid_size"] = r.grid_size;
            d["residual"] = r.residual;
            return d;
        },
        py::arg("N"), py::arg("phi"), py::arg("theta"), py::arg("a"),
        py::arg("M") = 192);
    m.def(
        "minimize_spectral",
        [](int N, double phi, double theta, double a) {
            const SpectralMin r = minimize_spectral(N, phi, theta, a);
            py::dict d;
            d["value"] = r.value;
            d["mu"] = r.mu;
            d["alpha"] = r.alpha;
            d["vectors"] = r.vectors;
            return d;
        },
        py::arg("N"), py::arg("phi"), py::arg("theta"), py::arg("a"));
    m.def(
        "min_over_a",
        [](int N, double phi, double theta, int M) {
            const AnsatzMin r = min_over_a(N, phi, theta, M);
            return py::make_tuple(r.value, r.a_star);
        },
        py::arg("N"), py::arg("phi"), py::arg("theta"), py::arg("M") = 192);
    m.def("critical_aperture", &critical_aperture, py::arg("N"), py::arg("theta"),
          py::arg("tol_phi"), py::arg("M") = 160);

    m.def("f_value", &f_value, py::arg("phi"), py::arg("beta"), py::arg("theta"),
          py::arg("x"), py::arg("y"));
    m.def(
        "f_inf",
        [](double phi, double beta, double theta) {
            const FInfResult r = f_inf(phi, beta, theta);
            return py::make_tuple(r.f_min, r.x_star, r.y_star);
        },
        py::arg("phi"), py::arg("beta"), py::arg("theta"));
    m.def(
        "delta_exists",
        [](double phi, double beta, double theta) {
            const DeltaVerdict v = delta_exists(phi, beta, theta);
            py::dict d;
            d["exists"] = v.exists;
            d["f_min"] = v.f_min;
            d["x_star"] = v.x_star;
            d["y_star"] = v.y_star;
            return d;
        },
        py::arg("phi"), py::arg("beta"), py::arg("theta"));
    m.def("small_beta_certificate", &small_beta_certificate, py::arg("phi"),
          py::arg("y") = kSmallBetaY);
    m.def("large_beta_certificate", &large_beta_certificate, py::arg("phi"),
          py::arg("y") = kLargeBetaY);
}
