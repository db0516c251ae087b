#ifndef ZETAVERIFY_HADAMARD_HPP
#define ZETAVERIFY_HADAMARD_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "zetaverify/domain.hpp"

namespace zetaverify {

/// The zeros of e^z - w: z_n = log(w) + 2 pi i n, enumerated symmetrically
/// for |n| <= half_count.
struct ZeroSet {
    std::complex<double> log_w;
    std::size_t half_count;

    std::complex<double> zero(long n) const;
};

/// e^(a0) = 1 - w (a0 the principal value) and a1 = 1/(1 - w).
struct PrefactorConstants {
    std::complex<double> a0;
    std::complex<double> a1;
};

/// Enumerates the zero set. Throws domain_error for w on the branch cut
/// or w = 1 (where z = 0 joins the zero set and the factorization takes a
/// different form).
ZeroSet zeros(const std::complex<double> &w, std::size_t half_count);

PrefactorConstants prefactors(const std::complex<double> &w);

/// Symmetric partial sum of 1/z_n:
///   1/log(w) + sum_{n=1}^{N} 2 log(w) / (log^2 w + 4 pi^2 n^2),
/// compensated, ascending n. Converges to 1/2 - 1/(1 - w) as N grows.
std::complex<double> s1_partial(const std::complex<double> &w, std::size_t half_count);

/// Multiplication order for the truncated product. `paired` multiplies the
/// (+n, -n) factors together before folding them into the accumulator;
/// `flat` folds factors one at a time in ascending n. The accumulator runs
/// in extended precision, so the two orders agree to within a few ulps of
/// the returned double.
enum class ProductOrder { paired, flat };

/// P_N(z) = e^(a0 + a1 z) * prod_{|n|<=N} (1 - z/z_n) e^(z/z_n).
/// Converges to e^z - w as N grows. If z equals the n = 0 zero exactly,
/// the result is exactly zero.
std::complex<double> truncated_product(const std::complex<double> &w,
                                       const std::complex<double> &z,
                                       std::size_t half_count,
                                       ProductOrder order = ProductOrder::paired);

struct FactorizationEntry {
    std::size_t half_count;
    double abs_error; // |P_N(z) - (e^z - w)|
};

/// Truncation errors at each requested level, for convergence-rate studies.
std::vector<FactorizationEntry> factorization_report(const std::complex<double> &w,
                                                     const std::complex<double> &z,
                                                     std::span<const std::size_t> levels);

} // namespace zetaverify

#endif
