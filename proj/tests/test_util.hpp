#ifndef ZETAVERIFY_TEST_UTIL_HPP
#define ZETAVERIFY_TEST_UTIL_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>

namespace zvtest {

// Ordered-integer mapping: adjacent doubles map to adjacent integers.
inline std::int64_t ordered_bits(double x) {
    const std::int64_t i = std::bit_cast<std::int64_t>(x);
    return i >= 0 ? i : std::numeric_limits<std::int64_t>::min() - i;
}

inline std::uint64_t ulps_between(double a, double b) {
    if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<std::uint64_t>::max();
    const std::int64_t ia = ordered_bits(a), ib = ordered_bits(b);
    return ia >= ib ? static_cast<std::uint64_t>(ia - ib) : static_cast<std::uint64_t>(ib - ia);
}

// For complex values, "units in the last place" is measured against the
// value's magnitude; a componentwise ulp count would blow up whenever one
// component is tiny relative to the modulus.
inline std::uint64_t ulps_between(const std::complex<double> &a, const std::complex<double> &b) {
    if (a == b) return 0;
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0;
    const double ulp = scale * 0x1p-52;
    const double d = std::abs(a - b) / ulp;
    return d > 1e18 ? std::numeric_limits<std::uint64_t>::max()
                    : static_cast<std::uint64_t>(std::ceil(d));
}

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close_rel(const std::complex<double> &a, const std::complex<double> &b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::mt19937_64 &rng() {
    static std::mt19937_64 gen(0x5eedULL);
    return gen;
}

} // namespace zvtest

#endif
