#include "zetaverify/zeta_even.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

#include <quadmath.h>

#include "zetaverify/bernoulli.hpp"
#include "zetaverify/detail/float128.hpp"
#include "zetaverify/laurent.hpp"
#include "zetaverify/summation.hpp"

namespace zetaverify {

namespace detail {

__float128 to_float128(const Rational &r) {
    __float128 acc = 0;
    mpq_class rest = r.raw();
    for (int i = 0; i < 3; ++i) {
        const double d = mpq_get_d(rest.get_mpq_t());
        acc += static_cast<__float128>(d);
        rest -= mpq_class(d); // exact: doubles are dyadic rationals
        if (d == 0.0) break;
    }
    return acc;
}

__float128 zeta_even_value_f128(const Rational &q, unsigned m) {
    return to_float128(q) * powq(M_PIq, static_cast<__float128>(2 * m));
}

} // namespace detail

ZetaEvenValue zeta_even_exact(unsigned m) {
    if (m == 0) throw std::invalid_argument("zeta_even_exact: m must be >= 1");
    const BernoulliTable table = bernoulli_recurrence(2 * m);
    const Rational b2m = table.at(2 * m);
    const int sign = (m % 2 == 0) ? -1 : 1; // (-1)^(m+1)
    Integer pow4;                           // 2^(2m)
    mpz_ui_pow_ui(pow4.get_mpz_t(), 2, 2 * m);
    Rational q = Rational(sign) * b2m * Rational(pow4) / (Rational(2) * Rational(factorial(2 * m)));
    return {m, std::move(q)};
}

NumericBracket zeta_even_partial_sum(unsigned m, std::size_t terms) {
    if (m == 0) throw std::invalid_argument("zeta_even_partial_sum: m must be >= 1");
    if (terms == 0) throw std::invalid_argument("zeta_even_partial_sum: terms must be >= 1");
    CompensatedSum s;
    for (std::size_t n = 1; n <= terms; ++n)
        s.add(std::pow(static_cast<double>(n), -2.0 * m));
    const double sum = s.value();
    const double nd = static_cast<double>(terms);
    const double p = 2.0 * m - 1.0;
    const double tail_lo = std::pow(nd + 1.0, -p) / p; // int_{N+1}^inf
    const double tail_hi = std::pow(nd, -p) / p;       // int_N^inf
    // Round-off allowance: compensated summation plus the endpoint
    // arithmetic stay well under 8 ulps of the sum.
    const double slack = 8.0 * DBL_EPSILON * (std::abs(sum) + 1.0);
    return {sum + tail_lo - slack, sum + tail_hi + slack};
}

ZetaEvenValue zeta_via_derivative_route(unsigned m) {
    const LaurentSeries f = f_series(static_cast<int>(2 * m));
    const Rational c = f.coeff(static_cast<int>(2 * m));
    const int sign = (m % 2 == 0) ? -1 : 1; // (-1)^(m+1)
    Integer pw;                             // 2^(2m+1)
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, 2 * m + 1);
    Rational q = Rational(sign) * Rational(pw) * c / Rational(2L * m + 1);
    return {m + 1, std::move(q)};
}

double zeta_even_to_double(const ZetaEvenValue &v) {
    return static_cast<double>(detail::zeta_even_value_f128(v.q, v.m));
}

} // namespace zetaverify
