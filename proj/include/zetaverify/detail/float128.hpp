#ifndef ZETAVERIFY_DETAIL_FLOAT128_HPP
#define ZETAVERIFY_DETAIL_FLOAT128_HPP

#include "zetaverify/rational.hpp"

// GCC's __float128 is used internally where double rounding would dominate
// an identity under test. Only the type appears here; quadmath.h stays in
// the .cpp files.

namespace zetaverify::detail {

/// Rational -> __float128 via three exact double extractions (~159 bits of
/// the value, then one rounding).
__float128 to_float128(const Rational &r);

/// q * pi^(2m) in quad precision.
__float128 zeta_even_value_f128(const Rational &q, unsigned m);

} // namespace zetaverify::detail

#endif
