#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetaverify/bernoulli.hpp"
#include "zetaverify/hadamard.hpp"
#include "zetaverify/identity.hpp"
#include "zetaverify/laurent.hpp"
#include "zetaverify/zeta_even.hpp"

namespace py = pybind11;
using namespace zetaverify;

namespace {

std::vector<std::string> table_strings(const BernoulliTable &t) {
    std::vector<std::string> out;
    out.reserve(t.values.size());
    for (const Rational &b : t.values) out.push_back(b.str());
    return out;
}

py::dict report_dict(const VerificationReport &r) {
    py::dict d;
    d["identity"] = r.identity == Identity::theorem ? "theorem" : "corollary";
    d["input"] = r.input;
    d["terms"] = r.terms;
    d["lhs"] = r.lhs;
    d["rhs_partial"] = r.rhs_partial;
    d["tail_estimate"] = r.tail_estimate;
    d["remainder_bound"] = r.remainder_bound;
    d["discrepancy"] = r.discrepancy;
    d["evaluation_epsilon"] = r.evaluation_epsilon;
    d["pass"] = r.pass;
    return d;
}

Identity identity_from_name(const std::string &name) {
    if (name == "theorem") return Identity::theorem;
    if (name == "corollary") return Identity::corollary;
    throw std::invalid_argument("identity must be 'theorem' or 'corollary'");
}

} // namespace

PYBIND11_MODULE(_zetaverify, m) {
    m.doc() = "Exact Bernoulli/zeta(2m) computations and numerical identity checks "
              "around the factorization of e^z - w";

    m.def("factorial", [](unsigned long n) { return factorial(n).get_str(); }, py::arg("n"));
    m.def("binomial",
          [](unsigned long n, unsigned long k) { return binomial(n, k).get_str(); },
          py::arg("n"), py::arg("k"));

    m.def("bernoulli",
          [](std::size_t n, const std::string &method) {
              if (method == "recurrence") return table_strings(bernoulli_recurrence(n));
              if (method == "series_division") return table_strings(bernoulli_series_division(n));
              throw std::invalid_argument("method must be 'recurrence' or 'series_division'");
          },
          py::arg("n"), py::arg("method") = "recurrence",
          "Exact B_0..B_n as fraction strings (B_1 = -1/2 convention).");

    m.def("f_series_coeffs",
          [](int order) {
              const LaurentSeries f = f_series(order);
              std::vector<std::string> out;
              for (int k = 0; k <= order; ++k) out.push_back(f.coeff(k).str());
              return out;
          },
          py::arg("order"),
          "Taylor coefficients of e^u/(e^u-1)^2 - 1/u^2 as fraction strings.");

    m.def("zeta_even_exact",
          [](unsigned m_) {
              const ZetaEvenValue v = zeta_even_exact(m_);
              return py::make_tuple(v.m, v.q.str());
          },
          py::arg("m"), "Returns (m, q) with zeta(2m) = q * pi^(2m) exactly.");

    m.def("zeta_via_derivative_route",
          [](unsigned m_) {
              const ZetaEvenValue v = zeta_via_derivative_route(m_);
              return py::make_tuple(v.m, v.q.str());
          },
          py::arg("m"), "Returns (m+1, q) read off the series coefficients.");

    m.def("zeta_even_value",
          [](unsigned m_) { return zeta_even_to_double(zeta_even_exact(m_)); }, py::arg("m"),
          "Floating value of zeta(2m).");

    m.def("zeta_even_partial_sum",
          [](unsigned m_, std::size_t terms) {
              const NumericBracket b = zeta_even_partial_sum(m_, terms);
              return py::make_tuple(b.lower, b.upper);
          },
          py::arg("m"), py::arg("terms"),
          "Integral-test bracket around zeta(2m) from a compensated partial sum.");

    m.def("lhs_theorem", &lhs_theorem, py::arg("w"));
    m.def("lhs_corollary", &lhs_corollary, py::arg("x"));
    m.def("rhs_theorem",
          [](const std::complex<double> &w, std::size_t terms) {
              const RhsEvaluation e = rhs_theorem(w, terms);
              return py::make_tuple(e.partial, e.tail_estimate, e.remainder_bound);
          },
          py::arg("w"), py::arg("terms"));
    m.def("rhs_corollary",
          [](const std::complex<double> &x, std::size_t terms) {
              const RhsEvaluation e = rhs_corollary(x, terms);
              return py::make_tuple(e.partial, e.tail_estimate, e.remainder_bound);
          },
          py::arg("x"), py::arg("terms"));

    m.def("verify",
          [](const std::string &identity, const std::complex<double> &input, std::size_t terms,
             double tol) { return report_dict(verify(identity_from_name(identity), input, terms, tol)); },
          py::arg("identity"), py::arg("input"), py::arg("terms") = 100000,
          py::arg("tol") = 1e-12);

    m.def("zero_point",
          [](const std::complex<double> &w, long n) { return zeros(w, 1).zero(n); },
          py::arg("w"), py::arg("n"), "z_n = log(w) + 2 pi i n.");
    m.def("s1_partial", &s1_partial, py::arg("w"), py::arg("half_count"));
    m.def("truncated_product",
          [](const std::complex<double> &w, const std::complex<double> &z, std::size_t half_count,
             const std::string &order) {
              const ProductOrder po = order == "flat" ? ProductOrder::flat : ProductOrder::paired;
              return truncated_product(w, z, half_count, po);
          },
          py::arg("w"), py::arg("z"), py::arg("half_count"), py::arg("order") = "paired");
    m.def("factorization_report",
          [](const std::complex<double> &w, const std::complex<double> &z,
             const std::vector<std::size_t> &levels) {
              std::vector<std::pair<std::size_t, double>> out;
              for (const auto &e : factorization_report(w, z, levels))
                  out.emplace_back(e.half_count, e.abs_error);
              return out;
          },
          py::arg("w"), py::arg("z"), py::arg("levels"));
}
