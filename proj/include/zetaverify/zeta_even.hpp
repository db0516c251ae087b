#ifndef ZETAVERIFY_ZETA_EVEN_HPP
#define ZETAVERIFY_ZETA_EVEN_HPP

#include <cstddef>

#include "zetaverify/rational.hpp"

namespace zetaverify {

/// The assertion zeta(2m) = q * pi^(2m) with q exact.
struct ZetaEvenValue {
    unsigned m;
    Rational q;

    friend bool operator==(const ZetaEvenValue &a, const ZetaEvenValue &b) {
        return a.m == b.m && a.q == b.q;
    }
};

/// A floating enclosure [lower, upper] known to contain a target value.
struct NumericBracket {
    double lower;
    double upper;

    bool contains(double x) const { return lower <= x && x <= upper; }
    bool strictly_contains(double x) const { return lower < x && x < upper; }
    double width() const { return upper - lower; }
};

/// zeta(2m) = (-1)^(m+1) B_{2m} 2^(2m) / (2 (2m)!) * pi^(2m), exactly.
/// Throws std::invalid_argument for m = 0.
ZetaEvenValue zeta_even_exact(unsigned m);

/// Direct summation of sum 1/n^(2m) over the first `terms` terms
/// (compensated, ascending n), bracketed by the integral test:
///   S_N + int_{N+1}^inf t^(-2m) dt  <=  zeta(2m)  <=  S_N + int_N^inf t^(-2m) dt.
/// Endpoints are padded by a small summation round-off allowance so the
/// enclosure stays rigorous in floating point.
NumericBracket zeta_even_partial_sum(unsigned m, std::size_t terms);

/// zeta(2(m+1)) recovered from the u^(2m) coefficient c of f_series:
///   q = (-1)^(m+1) * 2^(2m+1) * c / (2m+1),
/// with every power of pi tracked symbolically. Must equal
/// zeta_even_exact(m+1) by exact rational equality.
ZetaEvenValue zeta_via_derivative_route(unsigned m);

/// Floating rendering of q * pi^(2m) (computed in extended precision,
/// rounded once to double).
double zeta_even_to_double(const ZetaEvenValue &v);

} // namespace zetaverify

#endif
