#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phasecat/cat.hpp"
#include "phasecat/gaussian.hpp"
#include "phasecat/kerr.hpp"
#include "phasecat/lindblad.hpp"
#include "phasecat/oracle.hpp"
#include "phasecat/semiclassical.hpp"
#include "phasecat/symplectic.hpp"
#include "phasecat/verify.hpp"

namespace py = pybind11;
using namespace phasecat;

namespace {

GaussianSumState make_cat(Complex a, const Mat& u, const Vec& uc, Complex b, const Mat& v,
                          const Vec& vc, double hbar) {
    PureCat cat{a, b, make_gaussian_pure(u, uc, hbar), make_gaussian_pure(v, vc, hbar)};
    return cat_wigner(cat);
}

py::dict normal_form_dict(const Mat& u, const Mat& v) {
    const NormalForm nf = normal_form(u, v);
    py::dict out;
    out["thetas"] = nf.thetas;
    out["transform"] = nf.transform;
    out["base_change"] = nf.base_change;
    out["residual"] = nf.residual;
    out["classification"] =
        classify_fringes(nf) == FringeClass::Linear ? "Linear" : "Hyperbolic";
    return out;
}

}  // namespace

PYBIND11_MODULE(_phasecat, m) {
    m.doc() = "Phase-space machinery for generalized Gaussian cat states";

    py::register_exception<Error>(m, "PhasecatError");

    py::class_<ComplexGaussianTerm>(m, "ComplexGaussianTerm")
        .def_readonly("amplitude", &ComplexGaussianTerm::amplitude)
        .def_readonly("matrix", &ComplexGaussianTerm::matrix)
        .def_readonly("center", &ComplexGaussianTerm::center)
        .def_readonly("hbar", &ComplexGaussianTerm::hbar);

    py::class_<GaussianSumState>(m, "GaussianSumState")
        .def_readonly("terms", &GaussianSumState::terms)
        .def_readonly("n", &GaussianSumState::n)
        .def_readonly("hbar", &GaussianSumState::hbar)
        .def("__call__",
             [](const GaussianSumState& st, const Vec& x) { return eval_state(st, x); })
        .def("integral", [](const GaussianSumState& st) { return state_integral(st); })
        .def("purity", [](const GaussianSumState& st) { return state_purity(st); });

    m.def("symplectic_form", &symplectic_form, py::arg("n"));
    m.def("wedge", &wedge, py::arg("a"), py::arg("b"));
    m.def("is_symplectic", &is_symplectic, py::arg("m"), py::arg("tol") = kSymplecticTol);
    m.def("cayley", &cayley, py::arg("s"));
    m.def("euler_decompose", [](const Mat& s) {
        const EulerDecomposition eu = euler_decompose(s);
        return py::make_tuple(eu.o, eu.lambda, eu.o_prime);
    });
    m.def("signature", [](const Mat& m_in, double tol) {
        const Signature sig = signature(m_in, tol);
        return py::make_tuple(sig.n_plus, sig.n_minus, sig.n_zero);
    }, py::arg("m"), py::arg("zero_tol") = -1.0);

    m.def("gauss_eval", &gauss_eval, py::arg("m"), py::arg("center"), py::arg("x"),
          py::arg("hbar"));
    m.def("cat_wigner", &make_cat, py::arg("a"), py::arg("U"), py::arg("u"), py::arg("b"),
          py::arg("V"), py::arg("v"), py::arg("hbar") = 1.0);
    m.def("interference_matrices", [](const Mat& u, const Mat& v) {
        const auto [k, g] = interference_matrices(u, v);
        return py::make_tuple(k, g);
    });
    m.def("normal_form", &normal_form_dict, py::arg("U"), py::arg("V"));

    m.def("evolve_damped_cat",
          [](const GaussianSumState& st, const Mat& b, const CMat& lambdas, double t) {
              LindbladChannel ch;
              ch.b = b;
              ch.hbar = st.hbar;
              for (int c = 0; c < lambdas.cols(); ++c) ch.lambdas.push_back(lambdas.col(c));
              return evolve_state(st, ch, t);
          },
          py::arg("state"), py::arg("B"), py::arg("lambdas"), py::arg("t"),
          "Evolve under the Lindblad channel; lambdas holds one complex vector per column");

    m.def("kerr_coefficients", [](int mu, int nu) {
        const KerrCoefficients kc = kerr_coefficients(mu, nu);
        py::dict out;
        out["period"] = kc.period;
        out["coeffs"] = kc.coeffs;
        out["component_count"] = kc.component_count;
        return out;
    });
    m.def("kerr_cat",
          [](double nbar, const Vec& displacement, int mu, int nu, double hbar) {
              return kerr_cat(ThermalState{nbar, displacement, hbar}, mu, nu);
          },
          py::arg("nbar"), py::arg("displacement"), py::arg("mu"), py::arg("nu"),
          py::arg("hbar") = 1.0);
    m.def("binary_kerr_wigner",
          [](double nbar, const Vec& eta, const Vec& x, double hbar) {
              return binary_kerr_wigner(ThermalState{nbar, eta, hbar}, x);
          },
          py::arg("nbar"), py::arg("eta"), py::arg("x"), py::arg("hbar") = 1.0);

    m.def("fock_wigner",
          [](const CVec& psi, const Vec& x, double hbar) {
              return oracle::fock_wigner(psi, x, hbar);
          },
          py::arg("psi"), py::arg("x"), py::arg("hbar") = 1.0);
    m.def("fock_gaussian",
          [](const Mat& s, const Vec& center, double hbar) {
              return oracle::fock_gaussian(make_gaussian_pure(s, center, hbar));
          },
          py::arg("S"), py::arg("center"), py::arg("hbar") = 1.0);

    m.def("run_verify", [](std::uint64_t seed) {
        py::list out;
        for (const auto& r : verify::run_all(seed)) {
            py::dict d;
            d["id"] = r.id;
            d["passed"] = r.passed;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    }, py::arg("seed") = 20240001ULL);

    m.attr("__version__") = "0.1.0";
}
