#include "zetaverify/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace zetaverify {

Rational Rational::from_string(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("Rational: cannot parse \"" + std::string(s) + "\""); };
    if (s.empty()) throw bad();
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    // mpz's string constructor takes no leading '+'.
    auto make_int = [](std::string_view t) {
        if (t.front() == '+') t.remove_prefix(1);
        return Integer(std::string(t));
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(s)) throw bad();
        return Rational(make_int(s));
    }
    const auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw bad();
    Integer d = make_int(den);
    if (sgn(d) == 0) throw std::invalid_argument("Rational: zero denominator");
    return Rational(make_int(num), d);
}

double Rational::to_double() const {
    const double head = v_.get_d(); // truncated, < 1 ulp off
    if (!std::isfinite(head) || head == 0.0) return head;
    const mpq_class rest = v_ - mpq_class(head); // exact: doubles are dyadic
    return head + rest.get_d();
}

std::string Rational::str() const {
    std::string out = numerator().get_str();
    if (denominator() != 1) {
        out += '/';
        out += denominator().get_str();
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) throw std::invalid_argument("binomial: k > n");
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace zetaverify
