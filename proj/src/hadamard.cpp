#include "zetaverify/hadamard.hpp"

#include <cmath>
#include <numbers>

#include "zetaverify/summation.hpp"

namespace zetaverify {

namespace {

using cdouble = std::complex<double>;
using clongd = std::complex<long double>;

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr long double two_pi_l = 2.0L * std::numbers::pi_v<long double>;

void require_admissible(const cdouble &w, const char *who) {
    require_off_branch_cut(w, who);
    if (w == cdouble(1.0, 0.0))
        throw domain_error(std::string(who) + ": w = 1 is excluded (z = 0 becomes a zero)");
}

// One genus-1 factor (1 - z/z_n) e^(z/z_n), in extended precision.
// log_w is the double principal log widened exactly, so that z equal to
// the n = 0 zero annihilates the factor exactly.
clongd elementary_factor(const clongd &log_w, const clongd &z, long n) {
    const clongd zn = log_w + clongd(0.0L, two_pi_l * static_cast<long double>(n));
    const clongd ratio = z / zn;
    return (clongd(1.0L) - ratio) * std::exp(ratio);
}

} // namespace

std::complex<double> ZeroSet::zero(long n) const {
    return log_w + cdouble(0.0, two_pi * static_cast<double>(n));
}

ZeroSet zeros(const cdouble &w, std::size_t half_count) {
    require_admissible(w, "zeros");
    if (half_count == 0)
        throw std::invalid_argument("zeros: half_count must be >= 1");
    return {std::log(w), half_count};
}

PrefactorConstants prefactors(const cdouble &w) {
    require_admissible(w, "prefactors");
    return {std::log(cdouble(1.0) - w), cdouble(1.0) / (cdouble(1.0) - w)};
}

cdouble s1_partial(const cdouble &w, std::size_t half_count) {
    require_admissible(w, "s1_partial");
    if (half_count == 0)
        throw std::invalid_argument("s1_partial: half_count must be >= 1");
    const cdouble log_w = std::log(w);
    const cdouble L2 = log_w * log_w;
    ComplexCompensatedSum sum;
    sum.add(cdouble(1.0) / log_w);
    for (std::size_t n = 1; n <= half_count; ++n) {
        const double tpn = two_pi * static_cast<double>(n);
        sum.add(2.0 * log_w / (L2 + tpn * tpn));
    }
    return sum.value();
}

cdouble truncated_product(const cdouble &w, const cdouble &z, std::size_t half_count,
                          ProductOrder order) {
    require_admissible(w, "truncated_product");
    if (half_count == 0)
        throw std::invalid_argument("truncated_product: half_count must be >= 1");
    const clongd wl(w);
    const clongd zl(z);
    const clongd log_w(std::log(w)); // exact widening of the double log
    const clongd a0 = std::log(clongd(1.0L) - wl);
    const clongd a1 = clongd(1.0L) / (clongd(1.0L) - wl);

    clongd acc = std::exp(a0 + a1 * zl) * elementary_factor(log_w, zl, 0);
    const long n_max = static_cast<long>(half_count);
    if (order == ProductOrder::paired) {
        for (long n = 1; n <= n_max; ++n)
            acc *= elementary_factor(log_w, zl, n) * elementary_factor(log_w, zl, -n);
    } else {
        for (long n = 1; n <= n_max; ++n) {
            acc *= elementary_factor(log_w, zl, n);
            acc *= elementary_factor(log_w, zl, -n);
        }
    }
    return cdouble(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

std::vector<FactorizationEntry> factorization_report(const cdouble &w, const cdouble &z,
                                                     std::span<const std::size_t> levels) {
    require_admissible(w, "factorization_report");
    if (levels.empty())
        throw std::invalid_argument("factorization_report: at least one level required");
    const cdouble target = std::exp(z) - w;
    std::vector<FactorizationEntry> out;
    out.reserve(levels.size());
    for (const std::size_t level : levels)
        out.push_back({level, std::abs(truncated_product(w, z, level) - target)});
    return out;
}

} // namespace zetaverify
