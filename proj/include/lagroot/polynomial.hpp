#ifndef LAGROOT_POLYNOMIAL_HPP
#define LAGROOT_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lagroot/rational.hpp"

namespace lagroot {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored in ascending degree order and kept canonical:
/// the zero polynomial has no coefficients, any other polynomial has a
/// nonzero last coefficient. Values are immutable once built.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    /// x^k
    static Polynomial monomial(std::size_t k, const Rational& c = Rational(1));
    /// Product of (x - r) over all roots.
    static Polynomial from_roots(std::span<const Rational> roots);

    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    /// Empty for the zero polynomial, whose degree is undefined.
    std::optional<std::size_t> degree() const noexcept;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Coefficient of x^k; zero past the end.
    Rational coeff(std::size_t k) const;
    /// Throws std::domain_error for the zero polynomial.
    const Rational& leading() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    Polynomial operator-() const;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

   private:
    void canonicalize();

    std::vector<Rational> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial derivative(const Polynomial& p);

/// Horner evaluation.
Rational eval(const Polynomial& p, const Rational& x);

/// p(a*x + b).
Polynomial compose_affine(const Polynomial& p, const Rational& a, const Rational& b);

/// Returns (quotient, remainder). Throws std::domain_error if `divisor` is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);
Polynomial rem(const Polynomial& dividend, const Polynomial& divisor);

/// Leading coefficient scaled to 1. The zero polynomial stays zero.
Polynomial monic(const Polynomial& p);

/// Monic gcd; gcd(p, 0) = monic(p). Throws std::domain_error when both are zero.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// monic(p / gcd(p, p')). Throws std::domain_error for zero or constant p.
Polynomial squarefree_part(const Polynomial& p);

/// Human-readable rendering, e.g. "1 - 2x + 1/2x^2".
std::string to_pretty_string(const Polynomial& p);

}  // namespace lagroot

#endif
