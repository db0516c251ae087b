#include "zetaverify/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace zetaverify {

namespace {

const Rational kZero{};

// Saturating add for validity orders; exact_order is absorbing.
int sat_add(int a, int b) {
    if (a == LaurentSeries::exact_order || b == LaurentSeries::exact_order)
        return LaurentSeries::exact_order;
    const long long s = static_cast<long long>(a) + b;
    if (s >= LaurentSeries::exact_order) return LaurentSeries::exact_order;
    return static_cast<int>(s);
}

int sat_sub(int a, int b) {
    if (a == LaurentSeries::exact_order) return LaurentSeries::exact_order;
    return a - b;
}

} // namespace

LaurentSeries::LaurentSeries(int lowest, std::vector<Rational> coeffs, int order)
    : lowest_(lowest), coeffs_(std::move(coeffs)), order_(order) {
    normalize();
}

LaurentSeries LaurentSeries::monomial(const Rational &c, int exponent, int order) {
    return LaurentSeries(exponent, {c}, order);
}

void LaurentSeries::normalize() {
    // Drop stored coefficients beyond the validity order.
    if (order_ != exact_order) {
        const long long keep = static_cast<long long>(order_) - lowest_ + 1;
        if (keep < static_cast<long long>(coeffs_.size()))
            coeffs_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
    }
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        lowest_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (last > first && coeffs_[last - 1].is_zero()) --last;
    if (first > 0 || last < coeffs_.size()) {
        coeffs_ = std::vector<Rational>(coeffs_.begin() + first, coeffs_.begin() + last);
        lowest_ += static_cast<int>(first);
    }
}

const Rational &LaurentSeries::coeff(int exponent) const {
    const long long i = static_cast<long long>(exponent) - lowest_;
    if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool LaurentSeries::agree_through(const LaurentSeries &a, const LaurentSeries &b, int through_order) {
    int lo = std::min(a.lowest_, b.lowest_);
    int hi = std::min(through_order, std::max(a.highest_stored_exponent(), b.highest_stored_exponent()));
    for (int k = lo; k <= hi; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

LaurentSeries LaurentSeries::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return LaurentSeries(lowest_, std::move(c), order_);
}

LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b) {
    const int order = std::min(a.order_, b.order_);
    if (a.is_zero()) return LaurentSeries(b.lowest_, b.coeffs_, order);
    if (b.is_zero()) return LaurentSeries(a.lowest_, a.coeffs_, order);
    const int lo = std::min(a.lowest_, b.lowest_);
    const int hi = std::max(a.highest_stored_exponent(), b.highest_stored_exponent());
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
    for (int k = lo; k <= hi; ++k) c[static_cast<std::size_t>(k - lo)] = a.coeff(k) + b.coeff(k);
    return LaurentSeries(lo, std::move(c), order);
}

LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b) {
    // Unknown terms of a (exponent > a.order) meet terms of b at exponents
    // >= b.lowest, so the product is trustworthy through
    // min(a.order + b.lowest, b.order + a.lowest).
    if (a.is_zero() || b.is_zero())
        return LaurentSeries(0, {}, std::min(sat_add(a.order_, b.lowest_), sat_add(b.order_, a.lowest_)));
    const int order = std::min(sat_add(a.order_, b.lowest_), sat_add(b.order_, a.lowest_));
    const int lo = a.lowest_ + b.lowest_;
    const std::size_t n = a.coeffs_.size(), m = b.coeffs_.size();
    std::vector<Rational> c(n + m - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentSeries(lo, std::move(c), order);
}

LaurentSeries operator/(const LaurentSeries &a, const LaurentSeries &b) {
    if (b.is_zero()) throw std::domain_error("LaurentSeries: division by the zero series");
    const int eb = b.lowest_;
    // Validity of the quotient: min(a.order, b.order + a.lowest - eb) - eb.
    const int order = sat_sub(std::min(a.order_, sat_add(b.order_, a.lowest_ - eb)), eb);
    if (order == LaurentSeries::exact_order && b.coeffs_.size() > 1)
        throw std::invalid_argument(
            "LaurentSeries: quotient of exact series by a multi-term exact series "
            "is an infinite series; truncate an operand's order first");
    if (a.is_zero()) return LaurentSeries(0, {}, order);

    const int lo = a.lowest_ - eb;
    // Number of quotient coefficients needed to reach the validity order.
    const long long count =
        order == LaurentSeries::exact_order
            ? static_cast<long long>(a.coeffs_.size()) // b is a monomial here
            : static_cast<long long>(order) - lo + 1;
    if (count <= 0) return LaurentSeries(0, {}, order);

    std::vector<Rational> q(static_cast<std::size_t>(count));
    const Rational &b0 = b.coeffs_.front();
    for (std::size_t k = 0; k < q.size(); ++k) {
        Rational acc = a.coeff(a.lowest_ + static_cast<int>(k));
        const std::size_t jmax = std::min(k, b.coeffs_.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) acc -= b.coeffs_[j] * q[k - j];
        q[k] = acc / b0;
    }
    return LaurentSeries(lo, std::move(q), order);
}

LaurentSeries LaurentSeries::derivative() const {
    const int order = sat_sub(order_, 1);
    if (is_zero()) return LaurentSeries(0, {}, order);
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const int k = lowest_ + static_cast<int>(i);
        c[i] = coeffs_[i] * Rational(k);
    }
    return LaurentSeries(lowest_ - 1, std::move(c), order);
}

LaurentSeries exp_minus_one_series(int order) {
    if (order < 1) throw std::invalid_argument("exp_minus_one_series: order must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(order));
    Integer kfac = 1;
    for (int k = 1; k <= order; ++k) {
        kfac *= k;
        c[static_cast<std::size_t>(k - 1)] = Rational(Integer(1), kfac);
    }
    return LaurentSeries(1, std::move(c), order);
}

LaurentSeries f_series(int order) {
    if (order < 0) throw std::invalid_argument("f_series: order must be >= 0");
    // g = u/(e^u - 1) through u^(order+2), so that d/du[g/u] is valid
    // through u^order.
    const LaurentSeries u = LaurentSeries::monomial(Rational(1), 1);
    const LaurentSeries g = u / exp_minus_one_series(order + 3);
    const LaurentSeries h = g / u; // 1/(e^u - 1), pole of order one
    LaurentSeries f = -h.derivative() + LaurentSeries::monomial(Rational(-1), -2);
    // The 1/u^2 terms cancel exactly; anything left below u^0 would be a bug.
    if (!f.is_zero() && f.lowest_exponent() < 0)
        throw std::logic_error("f_series: pole terms failed to cancel");
    return f;
}

} // namespace zetaverify
