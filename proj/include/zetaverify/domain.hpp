#ifndef ZETAVERIFY_DOMAIN_HPP
#define ZETAVERIFY_DOMAIN_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace zetaverify {

/// Thrown when an input falls outside an identity's domain (branch cut,
/// excluded point, pole). The CLI maps this to its invalid_input status.
class domain_error : public std::domain_error {
  public:
    explicit domain_error(const std::string &what) : std::domain_error(what) {}
};

/// True when w lies on the principal branch cut (-inf, 0] of log.
inline bool on_branch_cut(const std::complex<double> &w) {
    return w.imag() == 0.0 && w.real() <= 0.0;
}

inline void require_off_branch_cut(const std::complex<double> &w, const char *who) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw domain_error(std::string(who) + ": input must be finite");
    if (on_branch_cut(w))
        throw domain_error(std::string(who) + ": w lies on the branch cut (-inf, 0]");
}

} // namespace zetaverify

#endif
