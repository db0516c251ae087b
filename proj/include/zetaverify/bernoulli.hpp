#ifndef ZETAVERIFY_BERNOULLI_HPP
#define ZETAVERIFY_BERNOULLI_HPP

#include <cstddef>
#include <vector>

#include "zetaverify/rational.hpp"

namespace zetaverify {

enum class BernoulliMethod { recurrence, series_division };

/// Exact Bernoulli numbers B_0..B_n in the z/(e^z - 1) convention
/// (B_1 = -1/2), together with which algorithm produced them.
struct BernoulliTable {
    std::vector<Rational> values;
    BernoulliMethod method;

    const Rational &at(std::size_t k) const { return values.at(k); }
    std::size_t max_index() const { return values.size() - 1; }
};

/// B_0..B_n via the upper-triangular recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_0 = 1.
BernoulliTable bernoulli_recurrence(std::size_t n);

/// B_0..B_n read off the literal series quotient u/(e^u - 1):
/// B_k = k! * [u^k] (u / (e^u - 1)).
/// Independent of the recurrence; the two tables must agree exactly.
BernoulliTable bernoulli_series_division(std::size_t n);

} // namespace zetaverify

#endif
