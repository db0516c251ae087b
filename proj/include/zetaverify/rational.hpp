#ifndef ZETAVERIFY_RATIONAL_HPP
#define ZETAVERIFY_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetaverify {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. All arithmetic is exact; there is no rounding anywhere in
/// this class.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer &n) : v_(n) {}
    Rational(const Integer &num, const Integer &den) : v_(num, den) { canonicalize(); }
    Rational(long num, long den) : v_(num, den) { canonicalize(); }

    /// Parses "p/q" or "p" with optional sign. Throws std::invalid_argument
    /// on malformed input or zero denominator.
    static Rational from_string(std::string_view s);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(::abs(v_)); }

    /// Nearest-double conversion; exactness ends here by design.
    /// (mpq_get_d truncates, so one exact-residual refinement step is used
    /// to land on the nearest double.)
    double to_double() const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational &b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational &b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational &b) { a /= b; return a; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational &a, const Rational &b) { return a.v_ >= b.v_; }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

    const mpq_class &raw() const { return v_; }

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    void canonicalize() {
        if (sgn(mpq_class(v_.get_den())) == 0)
            throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

/// n! as an exact integer.
Integer factorial(unsigned long n);

/// C(n, k) exactly. Throws std::invalid_argument when k > n.
Integer binomial(unsigned long n, unsigned long k);

} // namespace zetaverify

#endif
