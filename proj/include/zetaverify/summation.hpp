#ifndef ZETAVERIFY_SUMMATION_HPP
#define ZETAVERIFY_SUMMATION_HPP

#include <cmath>
#include <complex>

namespace zetaverify {

/// Kahan-Babuska-Neumaier compensated accumulator. Terms are added in the
/// caller's (fixed, documented) order; the compensation keeps the result
/// within a couple of ulps of the exact sum regardless of term count.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Component-wise compensated accumulator for complex terms.
class ComplexCompensatedSum {
  public:
    void add(const std::complex<double> &z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

  private:
    CompensatedSum re_, im_;
};

} // namespace zetaverify

#endif
