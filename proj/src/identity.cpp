#include "zetaverify/identity.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <quadmath.h>

#include "zetaverify/laurent.hpp"
#include "zetaverify/summation.hpp"

namespace zetaverify {

namespace {

using cdouble = std::complex<double>;

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;

__complex128 make_quad(const cdouble &z) {
    __complex128 q;
    __real__ q = static_cast<__float128>(z.real());
    __imag__ q = static_cast<__float128>(z.imag());
    return q;
}

cdouble make_double(const __complex128 &q) {
    return {static_cast<double>(crealq(q)), static_cast<double>(cimagq(q))};
}

// Even Taylor coefficients of e^u/(e^u - 1)^2 - 1/u^2 (odd ones vanish with
// the odd Bernoulli numbers). Order 16 leaves the truncation error far
// below double rounding for every |u| the series route ever sees.
constexpr int series_route_order = 16;

const std::vector<double> &f_even_coeffs() {
    static const std::vector<double> table = [] {
        const LaurentSeries f = f_series(series_route_order);
        std::vector<double> c;
        for (int k = 0; k <= series_route_order; k += 2)
            c.push_back(f.coeff(k).to_double());
        return c;
    }();
    return table;
}

// f evaluated as a polynomial in u^2; exactly even in u by construction.
cdouble eval_f_series(const cdouble &u) {
    const std::vector<double> &c = f_even_coeffs();
    const cdouble v = u * u;
    cdouble acc(c.back(), 0.0);
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * v + c[i];
    return acc;
}

// e^u/(1 - e^u)^2 - 1/u^2 in quad precision. For Re u > 0 the algebraically
// equal form e^(-u)/(1 - e^(-u))^2 keeps the exponential from overflowing.
__complex128 f_closed_form_quad(const __complex128 &u) {
    const __complex128 e = (crealq(u) > 0) ? cexpq(-u) : cexpq(u);
    const __complex128 one_minus = static_cast<__float128>(1) - e;
    return e / (one_minus * one_minus) - static_cast<__float128>(1) / (u * u);
}

void require_theorem_domain(const cdouble &w) {
    require_off_branch_cut(w, "theorem");
}

void require_corollary_domain(const cdouble &x) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        throw domain_error("corollary: input must be finite");
    if (x.real() == 0.0 && x.imag() != 0.0 && std::nearbyint(x.imag()) == x.imag())
        throw domain_error("corollary: x = i*n with nonzero integer n is a pole");
}

// Midpoint and half-width of the integral-test bracket for sum_{n>N} 1/n^2.
struct ZetaTwoTail {
    double midpoint;
    double half_width;
};

ZetaTwoTail zeta_two_tail(std::size_t terms) {
    const double nd = static_cast<double>(terms);
    const double lo = 1.0 / (nd + 1.0);
    const double hi = 1.0 / nd;
    return {0.5 * (lo + hi), 0.5 * (hi - lo)};
}

} // namespace

cdouble lhs_theorem_closed_form(const cdouble &w) {
    require_theorem_domain(w);
    if (w == cdouble(1.0, 0.0))
        throw domain_error("theorem: w = 1 is the removable point; use the series route");
    const __complex128 wq = make_quad(w);
    const __complex128 lq = clogq(wq);
    const __complex128 one_minus = static_cast<__float128>(1) - wq;
    return make_double(wq / (one_minus * one_minus) -
                       static_cast<__float128>(1) / (lq * lq));
}

cdouble lhs_theorem_series(const cdouble &w) {
    require_theorem_domain(w);
    // With u = log w the closed form is e^u/(e^u - 1)^2 - 1/u^2.
    return eval_f_series(std::log(w));
}

cdouble lhs_theorem(const cdouble &w) {
    require_theorem_domain(w);
    if (w == cdouble(1.0, 0.0)) return lhs_theorem_series(w);
    const cdouble log_w = std::log(w);
    return std::abs(log_w) < theorem_series_switch ? eval_f_series(log_w)
                                                   : lhs_theorem_closed_form(w);
}

cdouble lhs_corollary_closed_form(const cdouble &x) {
    require_corollary_domain(x);
    if (x == cdouble(0.0, 0.0))
        throw domain_error("corollary: x = 0 is the removable point; use the series route");
    const __complex128 u = (static_cast<__float128>(2) * M_PIq) * make_quad(x);
    return make_double(f_closed_form_quad(u));
}

cdouble lhs_corollary_series(const cdouble &x) {
    require_corollary_domain(x);
    return eval_f_series(two_pi * x);
}

cdouble lhs_corollary(const cdouble &x) {
    require_corollary_domain(x);
    return std::abs(x) < corollary_series_switch ? lhs_corollary_series(x)
                                                 : lhs_corollary_closed_form(x);
}

RhsEvaluation rhs_theorem(const cdouble &w, std::size_t terms) {
    require_theorem_domain(w);
    if (terms == 0) throw std::invalid_argument("rhs_theorem: terms must be >= 1");
    const cdouble log_w = std::log(w);
    const cdouble L2 = log_w * log_w;
    ComplexCompensatedSum sum;
    for (std::size_t n = 1; n <= terms; ++n) {
        const double tpn = two_pi * static_cast<double>(n);
        const cdouble den = L2 + tpn * tpn;
        sum.add(2.0 * (L2 - tpn * tpn) / (den * den));
    }
    const ZetaTwoTail tail = zeta_two_tail(terms);
    const cdouble tail_estimate = cdouble(-tail.midpoint / (2.0 * pi * pi), 0.0);

    // Residual after compensation, per term:
    //   (L^4 + 12 pi^2 n^2 L^2) / (2 pi^2 n^2 (L^2 + 4 pi^2 n^2)^2).
    // The principal branch gives |Im log w| <= pi, so
    // |L^2 + 4 pi^2 n^2| >= 4 pi^2 n^2 - pi^2 >= 3 pi^2 n^2, and the
    // integral test over n > N yields an O(1/N^3) majorant.
    const double la = std::abs(log_w);
    const double nd = static_cast<double>(terms);
    const double pi4 = pi * pi * pi * pi;
    const double majorant = std::pow(la, 4) / (90.0 * pi4 * pi * pi * std::pow(nd, 5)) +
                            2.0 * la * la / (9.0 * pi4 * nd * nd * nd);
    const double remainder_bound = majorant + tail.half_width / (2.0 * pi * pi);
    return {sum.value(), tail_estimate, remainder_bound};
}

RhsEvaluation rhs_corollary(const cdouble &x, std::size_t terms) {
    require_corollary_domain(x);
    if (terms == 0) throw std::invalid_argument("rhs_corollary: terms must be >= 1");
    const cdouble x2 = x * x;
    ComplexCompensatedSum sum;
    for (std::size_t n = 1; n <= terms; ++n) {
        const double n2 = static_cast<double>(n) * static_cast<double>(n);
        const cdouble den = x2 + n2;
        sum.add((x2 - n2) / (den * den));
    }
    const cdouble partial = sum.value() / (2.0 * pi * pi);
    const ZetaTwoTail tail = zeta_two_tail(terms);
    const cdouble tail_estimate = cdouble(-tail.midpoint / (2.0 * pi * pi), 0.0);

    // Residual per term: (x^4 + 3 n^2 x^2) / (2 pi^2 n^2 (x^2 + n^2)^2).
    // |x^2 + n^2| >= n^2/2 only once n^2 >= 2 |Im x|^2; the finitely many
    // tail terms below that threshold are added at their exact magnitude.
    const double xa = std::abs(x);
    const std::size_t n_safe = std::max(
        terms, static_cast<std::size_t>(std::ceil(std::numbers::sqrt2 * std::abs(x.imag()))));
    double explicit_part = 0.0;
    for (std::size_t n = terms + 1; n <= n_safe; ++n) {
        const double n2 = static_cast<double>(n) * static_cast<double>(n);
        const cdouble den = x2 + n2;
        explicit_part += std::abs((x2 * x2 + 3.0 * n2 * x2) /
                                  (2.0 * pi * pi * n2 * (den * den)));
    }
    const double md = static_cast<double>(n_safe);
    const double majorant = 2.0 * std::pow(xa, 4) / (5.0 * pi * pi * std::pow(md, 5)) +
                            2.0 * xa * xa / (pi * pi * md * md * md);
    const double remainder_bound =
        explicit_part + majorant + tail.half_width / (2.0 * pi * pi);
    return {partial, tail_estimate, remainder_bound};
}

VerificationReport verify(Identity identity, const cdouble &input, std::size_t terms,
                          double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("verify: tol must be >= 0");
    VerificationReport report;
    report.identity = identity;
    report.input = input;
    report.terms = terms;
    if (identity == Identity::theorem) {
        report.lhs = lhs_theorem(input);
        const RhsEvaluation rhs = rhs_theorem(input, terms);
        report.rhs_partial = rhs.partial;
        report.tail_estimate = rhs.tail_estimate;
        report.remainder_bound = rhs.remainder_bound;
    } else {
        report.lhs = lhs_corollary(input);
        const RhsEvaluation rhs = rhs_corollary(input, terms);
        report.rhs_partial = rhs.partial;
        report.tail_estimate = rhs.tail_estimate;
        report.remainder_bound = rhs.remainder_bound;
    }
    report.discrepancy = std::abs(report.lhs - report.rhs_partial - report.tail_estimate);
    report.evaluation_epsilon = tol * std::max(1.0, std::abs(report.lhs));
    report.pass = report.discrepancy <= report.remainder_bound + report.evaluation_epsilon;
    return report;
}

} // namespace zetaverify
