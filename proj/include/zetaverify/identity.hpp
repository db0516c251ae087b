#ifndef ZETAVERIFY_IDENTITY_HPP
#define ZETAVERIFY_IDENTITY_HPP

#include <complex>
#include <cstddef>

#include "zetaverify/domain.hpp"

namespace zetaverify {

enum class Identity { theorem, corollary };

/// Truncated right-hand-side evaluation with first-order tail compensation.
///
/// `partial` is the compensated sum of the first N terms; `tail_estimate`
/// approximates the dropped tail via its leading -1/(2 pi^2 n^2) behaviour,
/// using the midpoint of the integral-test bracket for sum_{n>N} 1/n^2;
/// `remainder_bound` rigorously bounds |exact sum - partial - tail_estimate|
/// (bracket half-width plus an explicit O(1/N^3) majorant of the residual
/// after compensation).
struct RhsEvaluation {
    std::complex<double> partial;
    std::complex<double> tail_estimate;
    double remainder_bound;
};

/// One verified identity instance.
struct VerificationReport {
    Identity identity;
    std::complex<double> input;
    std::size_t terms;
    std::complex<double> lhs;
    std::complex<double> rhs_partial;
    std::complex<double> tail_estimate;
    double remainder_bound;
    double discrepancy;        // |lhs - rhs_partial - tail_estimate|
    double evaluation_epsilon; // documented round-off allowance
    bool pass;                 // discrepancy <= remainder_bound + evaluation_epsilon
};

// Series-path switch thresholds. Each identity's closed form cancels
// catastrophically near its removable point, so evaluation reroutes to the
// exact-coefficient Taylor series there. The two routes are cross-checked
// over a band straddling each threshold.
inline constexpr double theorem_series_switch = 1e-3;   // on |log w|
inline constexpr double corollary_series_switch = 1e-4; // on |x|

/// w/(1-w)^2 - 1/log^2(w), principal log.
///
/// For |log w| < theorem_series_switch (including w = 1, the removable
/// point) the value comes from the series route. Throws domain_error for
/// w on (-inf, 0].
std::complex<double> lhs_theorem(const std::complex<double> &w);

/// e^(2 pi x)/(1 - e^(2 pi x))^2 - 1/(2 pi x)^2.
///
/// For |x| < corollary_series_switch (including x = 0) the value comes
/// from the series route. Throws domain_error at the genuine poles
/// x = i*n, n a nonzero integer.
std::complex<double> lhs_corollary(const std::complex<double> &x);

// The two evaluation routes, individually addressable so the switchover
// band can be cross-checked. The closed forms are evaluated in extended
// precision and rounded once, so they stay accurate deep into the
// cancellation region.
std::complex<double> lhs_theorem_closed_form(const std::complex<double> &w);
std::complex<double> lhs_theorem_series(const std::complex<double> &w);
std::complex<double> lhs_corollary_closed_form(const std::complex<double> &x);
std::complex<double> lhs_corollary_series(const std::complex<double> &x);

/// 2 * sum_{n=1}^{N} (log^2 w - 4 pi^2 n^2) / (log^2 w + 4 pi^2 n^2)^2
/// plus tail data; summed in ascending n with compensation.
RhsEvaluation rhs_theorem(const std::complex<double> &w, std::size_t terms);

/// (1/(2 pi^2)) * sum_{n=1}^{N} (x^2 - n^2) / (x^2 + n^2)^2 plus tail data.
RhsEvaluation rhs_corollary(const std::complex<double> &x, std::size_t terms);

/// Evaluates both sides and assembles the report.
/// evaluation_epsilon = tol * max(1, |lhs|).
VerificationReport verify(Identity identity, const std::complex<double> &input,
                          std::size_t terms, double tol = 1e-12);

} // namespace zetaverify

#endif
