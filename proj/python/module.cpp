// Python bindings for the main operations. Values cross the boundary as
// doubles (plus full-precision strings where it matters); the extended
// precision stays inside the C++ core.

#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <complex>

#include "za/contour_zeta.hpp"
#include "za/expansions.hpp"
#include "za/oracle.hpp"
#include "za/phi.hpp"
#include "za/special.hpp"
#include "za/sums.hpp"
#include "za/tables.hpp"

namespace py = pybind11;
using namespace za;

namespace {

Config make_cfg(long prec, double tol, double delta) {
    Config c;
    c.prec = std::max<long>(64, prec);
    c.tol = tol;
    c.delta_guard = delta;
    return c;
}

std::complex<double> to_std(const Complex& z) {
    return {z.re().to_double(), z.im().to_double()};
}

py::dict eval_result_dict(const EvalResult& r) {
    py::dict d;
    d["value"] = to_std(r.value);
    d["value_re_str"] = r.value.re().str(40);
    d["value_im_str"] = r.value.im().str(40);
    d["predicted_error_mag"] = r.predicted_error_mag.to_double();
    py::list terms;
    for (const auto& [label, term] : r.terms) {
        py::dict t;
        t["label"] = label;
        t["value"] = to_std(term);
        terms.append(t);
    }
    d["terms"] = terms;
    return d;
}

StripPoint sp(double sigma, double t, long prec) { return StripPoint::of(sigma, t, prec); }

}  // namespace

PYBIND11_MODULE(_zeta_asym, m) {
    m.doc() = "extended-precision zeta evaluation in the critical strip";

    py::register_exception<RegimeViolation>(m, "RegimeViolation");
    py::register_exception<TooCloseToLatticePoint>(m, "TooCloseToLatticePoint");
    py::register_exception<NearSingularU>(m, "NearSingularU");

    m.def("zeta_reference",
          [](double sigma, double t, int digits, long prec) {
              return to_std(zeta_reference(Complex::of(sigma, t, prec), digits));
          },
          py::arg("sigma"), py::arg("t"), py::arg("digits") = 40, py::arg("prec") = 256);

    m.def("zeta_exact",
          [](double sigma, double t, double eta, double tol, long prec) {
              Config cfg = make_cfg(prec, tol, 1e-3);
              ZetaExactResult r = zeta_exact(Complex::of(sigma, t, prec), Real::of(eta, prec), cfg);
              py::dict d;
              d["zeta"] = to_std(r.zeta_s);
              d["zeta_one_minus_s"] = to_std(r.zeta_one_minus_s);
              return d;
          },
          py::arg("sigma"), py::arg("t"), py::arg("eta"), py::arg("tol") = 1e-30,
          py::arg("prec") = 256);

    m.def("chi",
          [](double sigma, double t, long prec) { return to_std(chi(Complex::of(sigma, t, prec))); },
          py::arg("sigma"), py::arg("t"), py::arg("prec") = 256);

    m.def("gamma",
          [](double re, double im, long prec) {
              return to_std(gamma_fn(Complex::of(re, im, prec)));
          },
          py::arg("re"), py::arg("im") = 0.0, py::arg("prec") = 256);

    m.def("polylog_unit",
          [](int mth, double eta, long prec) {
              return to_std(polylog_unit(mth, Real::of(eta, prec)));
          },
          py::arg("m"), py::arg("eta"), py::arg("prec") = 256);

    m.def("phi_rational",
          [](long p, long q, std::complex<double> u, long prec) {
              return to_std(phi_rational(p, q, Complex::of(u.real(), u.imag(), prec)));
          },
          py::arg("p"), py::arg("q"), py::arg("u"), py::arg("prec") = 256);

    m.def("phi_quadrature",
          [](double tau, std::complex<double> u, double crossing, double tol, long prec) {
              Config cfg = make_cfg(prec, tol, 1e-3);
              PhiArg arg(Real::of(tau, prec), Complex::of(u.real(), u.imag(), prec));
              return to_std(phi_quadrature(arg, crossing, cfg));
          },
          py::arg("tau"), py::arg("u"), py::arg("crossing") = 0.5, py::arg("tol") = 1e-30,
          py::arg("prec") = 256);

    m.def("siegel_psi",
          [](std::complex<double> a, long prec) {
              return to_std(siegel_psi(Complex::of(a.real(), a.imag(), prec)));
          },
          py::arg("a"), py::arg("prec") = 256);

    const auto evaluator = [](const char* name) {
        return [name](double sigma, double t, double eta, int N, bool strict, long prec) {
            Config cfg = make_cfg(prec, 1e-40, 1e-3);
            cfg.strict_regimes = strict;
            StripPoint s = sp(sigma, t, prec);
            Real e = Real::of(eta, prec);
            std::string n(name);
            EvalResult r(prec);
            if (n == "region1") r = zeta_region1(s, e, N, cfg);
            else if (n == "confluent") r = zeta_confluent(s, N, cfg);
            else if (n == "small_eta") r = zeta_small_eta(s, e, N, cfg);
            else if (n == "large_eta_mirror") r = zeta_large_eta_mirror(s, e, N, cfg);
            else if (n == "sqrt_region") r = zeta_sqrt_region(s, e, N, cfg);
            else if (n == "sqrt_mirror") r = zeta_sqrt_mirror(s, e, N, cfg);
            return eval_result_dict(r);
        };
    };
    m.def("zeta_region1", evaluator("region1"), py::arg("sigma"), py::arg("t"), py::arg("eta"),
          py::arg("N") = 3, py::arg("strict") = true, py::arg("prec") = 256);
    m.def("zeta_confluent", evaluator("confluent"), py::arg("sigma"), py::arg("t"),
          py::arg("eta") = 0.0, py::arg("N") = 3, py::arg("strict") = true, py::arg("prec") = 256);
    m.def("zeta_small_eta", evaluator("small_eta"), py::arg("sigma"), py::arg("t"), py::arg("eta"),
          py::arg("N") = 3, py::arg("strict") = true, py::arg("prec") = 256);
    m.def("zeta_large_eta_mirror", evaluator("large_eta_mirror"), py::arg("sigma"), py::arg("t"),
          py::arg("eta"), py::arg("N") = 2, py::arg("strict") = true, py::arg("prec") = 256);
    m.def("zeta_sqrt_region", evaluator("sqrt_region"), py::arg("sigma"), py::arg("t"),
          py::arg("eta"), py::arg("N") = 3, py::arg("strict") = true, py::arg("prec") = 256);
    m.def("zeta_sqrt_mirror", evaluator("sqrt_mirror"), py::arg("sigma"), py::arg("t"),
          py::arg("eta"), py::arg("N") = 3, py::arg("strict") = true, py::arg("prec") = 256);

    m.def("sum_direct",
          [](long a, long b, double sigma, double t, bool s_minus_1, long prec) {
              SumRange r(a, b, s_minus_1 ? SumRange::Exponent::s_minus_1
                                         : SumRange::Exponent::minus_s);
              return to_std(sum_direct(r, Complex::of(sigma, t, prec)));
          },
          py::arg("a"), py::arg("b"), py::arg("sigma"), py::arg("t"),
          py::arg("s_minus_1") = false, py::arg("prec") = 256);

    m.def("sum_th51",
          [](double sigma, double t, double eta1, double eta2, int N, long prec) {
              Config cfg = make_cfg(prec, 1e-40, 1e-3);
              return eval_result_dict(
                  sum_th51(sp(sigma, t, prec), Real::of(eta1, prec), Real::of(eta2, prec), N, cfg));
          },
          py::arg("sigma"), py::arg("t"), py::arg("eta1"), py::arg("eta2"), py::arg("N") = 3,
          py::arg("prec") = 256);
    m.def("sum_th52",
          [](double sigma, double t, double eta, int N, long prec) {
              Config cfg = make_cfg(prec, 1e-40, 1e-3);
              return eval_result_dict(sum_th52(sp(sigma, t, prec), Real::of(eta, prec), N, cfg));
          },
          py::arg("sigma"), py::arg("t"), py::arg("eta"), py::arg("N") = 3, py::arg("prec") = 256);
    m.def("sum_th53",
          [](double sigma, double t, double eta1, double eta2, int N, long prec) {
              Config cfg = make_cfg(prec, 1e-40, 1e-3);
              return eval_result_dict(
                  sum_th53(sp(sigma, t, prec), Real::of(eta1, prec), Real::of(eta2, prec), N, cfg));
          },
          py::arg("sigma"), py::arg("t"), py::arg("eta1"), py::arg("eta2"), py::arg("N") = 3,
          py::arg("prec") = 256);

    m.def("run_table",
          [](const std::string& table_id, long prec) {
              auto id = parse_table_id(table_id);
              if (!id) throw py::value_error("unknown table id: " + table_id);
              Config cfg = make_cfg(prec, 1e-40, 1e-3);
              std::vector<TableCell> cells = run_table(builtin_table(*id), cfg);
              py::list out;
              for (const auto& c : cells) {
                  py::dict d;
                  d["sigma"] = c.params.sigma;
                  d["t"] = c.params.t;
                  d["eta_rule"] = eta_rule_name(c.params.eta_rule);
                  d["N"] = c.params.N;
                  d["computed_error"] = to_std(c.computed_error);
                  if (c.paper_error) d["paper_error"] = to_std(*c.paper_error);
                  d["rel_mismatch"] = c.rel_mismatch.to_double();
                  if (!c.regime_note.empty()) d["regime_note"] = c.regime_note;
                  out.append(d);
              }
              return out;
          },
          py::arg("table_id"), py::arg("prec") = 256);

    m.def("table_ids", []() {
        py::list out;
        for (TableId id : all_table_ids()) out.append(table_id_name(id));
        return out;
    });
}
