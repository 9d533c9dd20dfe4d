#ifndef LAGROOT_REALROOT_HPP
#define LAGROOT_REALROOT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lagroot/polynomial.hpp"

namespace lagroot {

/// p, p', then negated remainders down to the last nonzero entry.
class SturmChain {
   public:
    /// Throws std::domain_error for zero or constant p.
    explicit SturmChain(const Polynomial& p);

    std::span<const Polynomial> seq() const noexcept { return seq_; }
    std::size_t size() const noexcept { return seq_.size(); }
    const Polynomial& front() const noexcept { return seq_.front(); }

   private:
    std::vector<Polynomial> seq_;
};

SturmChain sturm_chain(const Polynomial& p);

/// Open interval (lo, hi) with lo < hi.
struct Interval {
    Rational lo;
    Rational hi;

    /// Throws std::invalid_argument unless lo < hi.
    Interval(Rational lo_, Rational hi_);

    bool contains(const Rational& x) const { return lo < x && x < hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

enum class Infinity { negative, positive };

/// Sign changes in the chain evaluated at x, zeros skipped.
/// Throws std::domain_error if x is a root of chain.front().
std::size_t sign_variations_at(const SturmChain& chain, const Rational& x);
std::size_t sign_variations_at_infinity(const SturmChain& chain, Infinity side);

/// Distinct real roots on the whole line.
std::size_t count_real_roots(const Polynomial& p);
/// Distinct real roots r with window.lo <= r <= window.hi. Endpoints that are
/// roots are handled by stepping outward past them.
std::size_t count_real_roots(const Polynomial& p, const Interval& window);

/// Cauchy bound 1 + max_{i<n} |a_i| / |a_n|; every real root lies in (-B, B).
Rational root_bound(const Polynomial& p);

/// Disjoint isolating intervals in increasing order, one per distinct real
/// root. Endpoints are never roots.
std::vector<Interval> isolate_roots(const Polynomial& p);

struct RootCertificate {
    std::size_t degree = 0;
    std::size_t squarefree_degree = 0;
    std::size_t distinct_real_roots = 0;
    bool is_real_rooted = false;
    std::vector<Interval> isolating_intervals;

    friend bool operator==(const RootCertificate&, const RootCertificate&) = default;
};

/// Throws std::domain_error for the zero polynomial. Nonzero constants are
/// real-rooted with no roots.
RootCertificate certify_real_rooted(const Polynomial& p);

/// Re-derives every certificate claim for p independently of how it was
/// produced. Returns a description of the first inconsistency, if any.
std::optional<std::string> check_certificate(const Polynomial& p, const RootCertificate& cert);

}  // namespace lagroot

#endif
