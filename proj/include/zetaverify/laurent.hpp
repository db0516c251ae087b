#ifndef ZETAVERIFY_LAURENT_HPP
#define ZETAVERIFY_LAURENT_HPP

#include <limits>
#include <vector>

#include "zetaverify/rational.hpp"

namespace zetaverify {

/// Truncated Laurent series in the scaled variable u = 2*pi*z, with exact
/// rational coefficients. Working in u keeps every coefficient rational;
/// powers of 2*pi are reattached only when a series is evaluated in
/// floating point.
///
/// A series carries a validity order: it is exact modulo u^(order+1).
/// Every operation propagates validity conservatively (min rule; one less
/// per derivative), so chained identities never over-claim precision.
/// Polynomials built from exact data carry the `exact_order` sentinel.
class LaurentSeries {
  public:
    static constexpr int exact_order = std::numeric_limits<int>::max();

    /// The canonical zero series: empty coefficients, lowest exponent 0.
    LaurentSeries() : lowest_(0), order_(exact_order) {}

    /// c * u^exponent, exact unless a finite order is given.
    static LaurentSeries monomial(const Rational &c, int exponent, int order = exact_order);

    /// Builds a series from coefficients of u^(lowest), u^(lowest+1), ...
    /// Leading/trailing zero coefficients are stripped to keep the
    /// representation canonical.
    LaurentSeries(int lowest, std::vector<Rational> coeffs, int order = exact_order);

    bool is_zero() const { return coeffs_.empty(); }
    int lowest_exponent() const { return lowest_; }
    int highest_stored_exponent() const { return lowest_ + static_cast<int>(coeffs_.size()) - 1; }
    int order() const { return order_; }

    /// Coefficient of u^exponent (zero off the stored range).
    const Rational &coeff(int exponent) const;

    /// Mathematical equality of the stored coefficients; the validity
    /// order is metadata and does not participate.
    friend bool operator==(const LaurentSeries &a, const LaurentSeries &b) {
        return a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
    }

    /// True when a and b have the same coefficients for every exponent
    /// <= through_order.
    static bool agree_through(const LaurentSeries &a, const LaurentSeries &b, int through_order);

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b);
    friend LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b);
    friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b);

    /// Long division after factoring u^(b.lowest) out of b.
    /// Throws std::domain_error on division by the zero series.
    friend LaurentSeries operator/(const LaurentSeries &a, const LaurentSeries &b);

    /// Term-wise d/du. The validity order drops by one. The d/dz = 2*pi*d/du
    /// factor is the caller's bookkeeping.
    LaurentSeries derivative() const;

  private:
    void normalize();

    int lowest_;
    std::vector<Rational> coeffs_; // coeff of u^(lowest_ + i) at position i
    int order_;
};

/// e^u - 1 = sum_{k>=1} u^k / k!, truncated at u^order.
/// Requires order >= 1.
LaurentSeries exp_minus_one_series(int order);

/// The Taylor expansion of e^u/(e^u - 1)^2 - 1/u^2, valid through u^order.
///
/// Built constructively as -d/du[ (u/(e^u-1)) / u ] - 1/u^2; the two 1/u^2
/// poles cancel coefficient-exactly, so the result has no negative
/// exponents. Its coefficients are -B_{k+2} / (k! * (k+2)).
LaurentSeries f_series(int order);

} // namespace zetaverify

#endif
