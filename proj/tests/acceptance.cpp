// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line each. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "zetaverify/bernoulli.hpp"
#include "zetaverify/detail/float128.hpp"
#include "zetaverify/hadamard.hpp"
#include "zetaverify/identity.hpp"
#include "zetaverify/laurent.hpp"
#include "zetaverify/zeta_even.hpp"

using namespace zetaverify;
using cdouble = std::complex<double>;

namespace {

int failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string description)
        : number_(number), description_(std::move(description)),
          start_(std::chrono::steady_clock::now()) {}

    void check(bool ok, const std::string &detail = "") {
        if (!ok && problem_.empty()) problem_ = detail.empty() ? "check failed" : detail;
        ok_ = ok_ && ok;
    }

    void require_runtime_below(double seconds) {
        const double elapsed = elapsed_seconds();
        if (elapsed >= seconds)
            check(false, "runtime " + std::to_string(elapsed) + "s exceeds " +
                             std::to_string(seconds) + "s");
    }

    double elapsed_seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    ~Criterion() {
        std::printf("[%s] criterion %d: %s (%.3fs)%s%s\n", ok_ ? "PASS" : "FAIL", number_,
                    description_.c_str(), elapsed_seconds(), problem_.empty() ? "" : " -- ",
                    problem_.c_str());
        if (!ok_) ++failures;
    }

  private:
    int number_;
    std::string description_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    std::string problem_;
};

double compensated_residual(Identity id, const cdouble &input, std::size_t terms) {
    const VerificationReport r = verify(id, input, terms, 0.0);
    return r.discrepancy;
}

void criterion_1() {
    Criterion c(1, "exact zeta(2m) values and bracket containment");
    const long expected_dens[] = {6, 90, 945, 9450, 93555};
    for (unsigned m = 1; m <= 5; ++m)
        c.check(zeta_even_exact(m).q == Rational(1, expected_dens[m - 1]),
                "q mismatch at m=" + std::to_string(m));
    for (unsigned m = 1; m <= 10; ++m) {
        const double value = zeta_even_to_double(zeta_even_exact(m));
        const NumericBracket bracket = zeta_even_partial_sum(m, 10000);
        c.check(bracket.strictly_contains(value),
                "bracket misses zeta(2m) at m=" + std::to_string(m));
    }
    c.require_runtime_below(1.0);
}

void criterion_2() {
    Criterion c(2, "derivative route equals the closed form exactly for m = 1..30");
    for (unsigned m = 1; m <= 30; ++m)
        c.check(zeta_via_derivative_route(m - 1) == zeta_even_exact(m),
                "route disagrees at m=" + std::to_string(m));
    c.require_runtime_below(5.0);
}

void criterion_3() {
    Criterion c(3, "Bernoulli cross-algorithm agreement to index 200");
    const BernoulliTable rec = bernoulli_recurrence(200);
    const BernoulliTable ser = bernoulli_series_division(200);
    c.check(rec.values == ser.values, "tables differ");
    for (std::size_t k = 3; k <= 200; k += 2)
        c.check(rec.at(k) == Rational(0), "odd entry nonzero at k=" + std::to_string(k));
    for (std::size_t m = 1; 2 * m <= 200; ++m)
        c.check(rec.at(2 * m).sign() == ((m % 2 == 1) ? 1 : -1),
                "sign pattern broken at 2m=" + std::to_string(2 * m));
    c.require_runtime_below(10.0);
}

void criterion_4() {
    Criterion c(4, "series coefficients match -B_{k+2}/(k! (k+2)) with no pole terms");
    const LaurentSeries f = f_series(40);
    c.check(f.lowest_exponent() == 0, "pole terms survived");
    const BernoulliTable b = bernoulli_recurrence(42);
    for (int k = 0; k <= 40; ++k) {
        const Rational expected = -b.at(static_cast<std::size_t>(k) + 2) /
                                  (Rational(factorial(static_cast<unsigned long>(k))) *
                                   Rational(k + 2));
        c.check(f.coeff(k) == expected, "coefficient mismatch at k=" + std::to_string(k));
    }
}

void criterion_5() {
    const std::vector<cdouble> points = {cdouble(0.1, 0.0),
                                         cdouble(0.5, 0.0),
                                         cdouble(2.0, 0.0),
                                         cdouble(10.0, 0.0),
                                         cdouble(std::exp(2.0 * std::numbers::pi), 0.0),
                                         cdouble(2.0, 3.0)};
    Criterion c(5, "theorem verification at 1e5 terms with tail compensation");
    for (const cdouble &w : points) {
        const auto start = std::chrono::steady_clock::now();
        const VerificationReport r = verify(Identity::theorem, w, 100000, 1e-12);
        const double elapsed = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start).count();
        c.check(r.discrepancy <= r.remainder_bound + 1e-12 * std::max(1.0, std::abs(r.lhs)),
                "discrepancy above bound at w=" + std::to_string(w.real()));
        c.check(elapsed < 2.0, "verification slower than 2 s per point");

        const double r1 = compensated_residual(Identity::theorem, w, 1000);
        const double r2 = compensated_residual(Identity::theorem, w, 2000);
        const double ratio = r1 / r2;
        c.check(ratio >= 6.0 && ratio <= 10.0,
                "residual ratio " + std::to_string(ratio) + " outside [6,10]");
    }
}

void criterion_6() {
    Criterion c(6, "corollary removable point: both routes give -1/12");
    const cdouble lhs = lhs_corollary(cdouble(0.0, 0.0));
    const RhsEvaluation rhs = rhs_corollary(cdouble(0.0, 0.0), 1000);
    const cdouble target(-1.0 / 12.0, 0.0);
    c.check(std::abs(lhs - target) <= rhs.remainder_bound, "series path off -1/12");
    c.check(std::abs(rhs.partial + rhs.tail_estimate - target) <= rhs.remainder_bound,
            "compensated partial sum off -1/12");
}

void criterion_7() {
    Criterion c(7, "Hadamard truncation decay and S_1 + a_1 -> 1/2");
    const cdouble w(2.0, 0.0), z(1.0, 0.0);
    const double target = std::exp(1.0) - 2.0;
    const double e2 = std::abs(truncated_product(w, z, 100) - target);
    const double e3 = std::abs(truncated_product(w, z, 1000) - target);
    const double e4 = std::abs(truncated_product(w, z, 10000) - target);
    c.check(e2 > e3 && e3 > e4, "truncation error not strictly decreasing");

    const cdouble a1 = cdouble(1.0) / (cdouble(1.0) - w);
    const double s5 = std::abs(s1_partial(w, 100000) + a1 - cdouble(0.5));
    c.check(s5 <= 1e-4, "S_1 + a_1 further than 1e-4 from 1/2 at N=1e5");
    const double s4 = std::abs(s1_partial(w, 10000) + a1 - cdouble(0.5));
    const double order = (s4 * 1e4) / (s5 * 1e5); // ~1 under O(1/N) decay
    c.check(order >= 0.5 && order <= 2.0, "S_1 decay not O(1/N)");
}

void criterion_8() {
    Criterion c(8, "w <-> 1/w invariance and evenness within 4 ulps (100 random inputs)");
    std::mt19937_64 gen(20260810ULL);
    std::uniform_real_distribution<double> mag(0.01, 3.0);
    std::uniform_real_distribution<double> ang(-2.9, 2.9);
    std::uniform_real_distribution<double> xmag(1e-5, 3.0);
    std::uniform_real_distribution<double> xang(0.0, 2.0 * std::numbers::pi);

    for (int trial = 0; trial < 100; ++trial) {
        const double r = mag(gen);
        const double th = (trial % 2 == 0) ? 0.0 : ang(gen);
        const cdouble w = std::exp(cdouble(r * std::cos(th), r * std::sin(th)));
        const cdouble winv = cdouble(1.0) / w;
        const auto ulps = zvtest::ulps_between(lhs_theorem(w), lhs_theorem(winv));
        c.check(ulps <= 4, "w<->1/w differs by " + std::to_string(ulps) + " ulps");
    }
    for (int trial = 0; trial < 100; ++trial) {
        const double r = xmag(gen);
        const double th = (trial % 2 == 0) ? 0.0 : xang(gen);
        cdouble x(r * std::cos(th), r * std::sin(th));
        if (x.real() == 0.0 && x.imag() != 0.0 && std::nearbyint(x.imag()) == x.imag())
            x += cdouble(0.125, 0.0);
        const auto ulps = zvtest::ulps_between(lhs_corollary(x), lhs_corollary(-x));
        c.check(ulps <= 4, "evenness differs by " + std::to_string(ulps) + " ulps");
    }
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
