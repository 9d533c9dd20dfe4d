#ifndef LAGROOT_TRANSFORMS_HPP
#define LAGROOT_TRANSFORMS_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "lagroot/polynomial.hpp"

namespace lagroot {

/// Linear operator on polynomials, given by the images of 1, x, ..., x^max_degree
/// and extended by linearity.
class MonomialTransform {
   public:
    /// Throws std::invalid_argument if `images` is empty.
    explicit MonomialTransform(std::vector<Polynomial> images);

    std::size_t max_degree() const noexcept { return images_.size() - 1; }
    std::span<const Polynomial> images() const noexcept { return images_; }
    /// Image of x^k. Throws CapacityError if k > max_degree().
    const Polynomial& image(std::size_t k) const;

    friend bool operator==(const MonomialTransform&, const MonomialTransform&) = default;

   private:
    std::vector<Polynomial> images_;
};

enum class TransformKind { laguerre, factorial, reflection };

/// Accepts "laguerre", "factorial" or "reflection". Throws ParseError.
TransformKind parse_transform_kind(std::string_view name);
std::string_view to_string(TransformKind kind);

MonomialTransform make_identity_transform(std::size_t max_degree);
/// x^k -> x^k / k!
MonomialTransform make_factorial_transform(std::size_t max_degree);
/// x^k -> (1 - x)^k
MonomialTransform make_reflection_transform(std::size_t max_degree);
/// x^n -> L_n(x)
MonomialTransform make_laguerre_transform(std::size_t max_degree);
MonomialTransform make_transform(TransformKind kind, std::size_t max_degree);

/// C(n, k) by the multiplicative formula.
BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// L_n(x) = sum_{k=0}^{n} (-1)^k C(n,k) x^k / k!
Polynomial laguerre_sum(std::size_t n);

/// L_n from (n+1) L_{n+1} = (2n + 1 - x) L_n - n L_{n-1}, L_0 = 1, L_1 = 1 - x.
Polynomial laguerre_recurrence(std::size_t n);

/// Sum of coeffs[k] * t.image(k). Throws CapacityError when deg p > t.max_degree().
Polynomial apply(const MonomialTransform& t, const Polynomial& p);

/// outer after inner: result.image(k) = apply(outer, inner.image(k)).
/// Throws CapacityError naming the first k whose inner image is too large.
MonomialTransform compose(const MonomialTransform& outer, const MonomialTransform& inner);

}  // namespace lagroot

#endif
