#include <doctest.h>

#include <random>
#include <vector>

#include "test_util.hpp"
#include "zetaverify/bernoulli.hpp"
#include "zetaverify/laurent.hpp"
#include "zetaverify/rational.hpp"

using zetaverify::LaurentSeries;
using zetaverify::Rational;

namespace {

LaurentSeries u_monomial() { return LaurentSeries::monomial(Rational(1), 1); }

// Random small series with a finite validity order; leading coefficient
// nonzero by construction.
LaurentSeries random_series(std::mt19937_64 &gen) {
    std::uniform_int_distribution<int> low(-3, 2);
    std::uniform_int_distribution<int> len(1, 5);
    std::uniform_int_distribution<long> numer(-5, 5);
    std::uniform_int_distribution<long> denom(1, 4);
    std::uniform_int_distribution<int> slack(0, 3);
    const int lo = low(gen);
    const int n = len(gen);
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (auto &x : c) x = Rational(numer(gen), denom(gen));
    if (c[0].is_zero()) c[0] = Rational(1);
    return LaurentSeries(lo, std::move(c), lo + n - 1 + slack(gen));
}

} // namespace

TEST_CASE("exp_minus_one_series produces factorial reciprocals") {
    const LaurentSeries s1 = zetaverify::exp_minus_one_series(1);
    CHECK(s1 == u_monomial());

    const LaurentSeries s3 = zetaverify::exp_minus_one_series(3);
    CHECK(s3.lowest_exponent() == 1);
    CHECK(s3.coeff(1) == Rational(1));
    CHECK(s3.coeff(2) == Rational(1, 2));
    CHECK(s3.coeff(3) == Rational(1, 6));
    CHECK(s3.order() == 3);

    CHECK(zetaverify::exp_minus_one_series(5).coeff(5) == Rational(1, 120));
    CHECK_THROWS_AS(zetaverify::exp_minus_one_series(0), std::invalid_argument);
}

TEST_CASE("addition aligns exponents and strips cancelled leads") {
    const LaurentSeries a(0, {Rational(2), Rational(0), Rational(1)});
    CHECK(a + LaurentSeries() == a);

    const LaurentSeries cancel = u_monomial() + (-u_monomial());
    CHECK(cancel.is_zero());
    CHECK(cancel.lowest_exponent() == 0); // canonical zero

    const LaurentSeries aligned = LaurentSeries::monomial(Rational(1), -1) + u_monomial();
    CHECK(aligned.lowest_exponent() == -1);
    CHECK(aligned.coeff(-1) == Rational(1));
    CHECK(aligned.coeff(0) == Rational(0));
    CHECK(aligned.coeff(1) == Rational(1));
}

TEST_CASE("multiplication truncates to the propagated order") {
    const LaurentSeries a(0, {Rational(3), Rational(-1)});
    CHECK(a * LaurentSeries::monomial(Rational(1), 0) == a);
    CHECK(u_monomial() * u_monomial() == LaurentSeries::monomial(Rational(1), 2));

    const LaurentSeries one_plus(0, {Rational(1), Rational(1)});
    const LaurentSeries one_minus(0, {Rational(1), Rational(-1)});
    const LaurentSeries prod = one_plus * one_minus;
    CHECK(prod == LaurentSeries(0, {Rational(1), Rational(0), Rational(-1)}));

    // min-rule: a known through u^2 times b known through u^5 with lowest 1.
    const LaurentSeries ta(0, {Rational(1)}, 2);
    const LaurentSeries tb(1, {Rational(1)}, 5);
    CHECK((ta * tb).order() == 3); // min(2 + 1, 5 + 0)
}

TEST_CASE("division: u/(e^u - 1) reproduces the hand long-division") {
    const LaurentSeries q = u_monomial() / zetaverify::exp_minus_one_series(3);
    CHECK(q.order() == 2);
    CHECK(q.coeff(0) == Rational(1));
    CHECK(q.coeff(1) == Rational(-1, 2));
    CHECK(q.coeff(2) == Rational(1, 12));

    const LaurentSeries a(0, {Rational(5), Rational(7)});
    CHECK(a / LaurentSeries::monomial(Rational(1), 0) == a);
    CHECK(LaurentSeries::monomial(Rational(1), 2) / u_monomial() == u_monomial());
    CHECK_THROWS_AS(a / LaurentSeries(), std::domain_error);
}

TEST_CASE("derivative acts term-wise and lowers the order by one") {
    CHECK(LaurentSeries::monomial(Rational(4), 0).derivative().is_zero());
    CHECK(LaurentSeries::monomial(Rational(1), 2).derivative() ==
          LaurentSeries::monomial(Rational(2), 1));
    CHECK(LaurentSeries::monomial(Rational(1), -1).derivative() ==
          LaurentSeries::monomial(Rational(-1), -2));

    const LaurentSeries t(0, {Rational(1), Rational(1)}, 6);
    CHECK(t.derivative().order() == 5);
}

TEST_CASE("f_series: no pole terms and Bernoulli coefficients") {
    const LaurentSeries f = zetaverify::f_series(40);
    CHECK(f.lowest_exponent() == 0); // the 1/u^2 poles cancelled exactly
    CHECK(f.coeff(0) == Rational(-1, 12));
    CHECK(f.coeff(1) == Rational(0));
    CHECK(f.coeff(2) == Rational(1, 240));

    const zetaverify::BernoulliTable b = zetaverify::bernoulli_recurrence(42);
    for (int k = 0; k <= 40; ++k) {
        const Rational expected =
            -b.at(static_cast<std::size_t>(k) + 2) /
            (Rational(zetaverify::factorial(static_cast<unsigned long>(k))) * Rational(k + 2));
        CHECK(f.coeff(k) == expected);
    }
}

TEST_CASE("series quotient coefficients times k! are the Bernoulli numbers") {
    const int n = 60;
    const LaurentSeries q = u_monomial() / zetaverify::exp_minus_one_series(n + 1);
    const zetaverify::BernoulliTable b = zetaverify::bernoulli_recurrence(n);
    for (int k = 0; k <= n; ++k)
        CHECK(Rational(zetaverify::factorial(static_cast<unsigned long>(k))) * q.coeff(k) ==
              b.at(static_cast<std::size_t>(k)));
}

TEST_CASE("ring axioms hold through the propagated order") {
    auto &gen = zvtest::rng();
    for (int trial = 0; trial < 120; ++trial) {
        const LaurentSeries a = random_series(gen);
        const LaurentSeries b = random_series(gen);
        const LaurentSeries c = random_series(gen);

        CHECK(a * b == b * a);
        CHECK(a + b == b + a);

        const LaurentSeries ab_c = (a * b) * c;
        const LaurentSeries a_bc = a * (b * c);
        CHECK(ab_c.order() == a_bc.order());
        CHECK(LaurentSeries::agree_through(ab_c, a_bc, std::min(ab_c.order(), a_bc.order())));

        const LaurentSeries lhs = a * (b + c);
        const LaurentSeries rhs = a * b + a * c;
        CHECK(LaurentSeries::agree_through(lhs, rhs, std::min(lhs.order(), rhs.order())));
    }
}

TEST_CASE("division round-trips against multiplication") {
    auto &gen = zvtest::rng();
    for (int trial = 0; trial < 120; ++trial) {
        const LaurentSeries a = random_series(gen);
        const LaurentSeries b = random_series(gen);
        const LaurentSeries q = a / b;
        const LaurentSeries back = q * b;
        CHECK(LaurentSeries::agree_through(back, a, std::min(back.order(), q.order())));
    }
}
