#include "zetaverify/bernoulli.hpp"

#include "zetaverify/laurent.hpp"

namespace zetaverify {

BernoulliTable bernoulli_recurrence(std::size_t n) {
    std::vector<Rational> b(n + 1);
    b[0] = Rational(1);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc;
        for (std::size_t j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
        b[m] = -acc / Rational(static_cast<long>(m) + 1);
    }
    return {std::move(b), BernoulliMethod::recurrence};
}

BernoulliTable bernoulli_series_division(std::size_t n) {
    const int order = static_cast<int>(n);
    const LaurentSeries u = LaurentSeries::monomial(Rational(1), 1);
    // Denominator through u^(n+1) makes the quotient valid through u^n.
    const LaurentSeries q = u / exp_minus_one_series(order + 1);
    std::vector<Rational> b(n + 1);
    Integer kfac = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) kfac *= k;
        b[k] = Rational(kfac) * q.coeff(static_cast<int>(k));
    }
    return {std::move(b), BernoulliMethod::series_division};
}

} // namespace zetaverify
