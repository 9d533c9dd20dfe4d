#include "lagroot/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lagroot {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { canonicalize(); }

void Polynomial::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
    std::vector<Rational> coeffs(k + 1);
    coeffs[k] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
    Polynomial result = constant(1);
    for (const auto& r : roots) result = result * Polynomial{-r, Rational(1)};
    return result;
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    const auto& longer = p.coeffs_.size() >= q.coeffs_.size() ? p.coeffs_ : q.coeffs_;
    const auto& shorter = p.coeffs_.size() >= q.coeffs_.size() ? q.coeffs_ : p.coeffs_;
    std::vector<Rational> sum = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i) sum[i] += shorter[i];
    return Polynomial(std::move(sum));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> neg;
    neg.reserve(coeffs_.size());
    for (const auto& c : coeffs_) neg.push_back(-c);
    return Polynomial(std::move(neg));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> prod(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) prod[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(prod));
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial scale(const Polynomial& p, const Rational& c) {
    if (c.is_zero()) return {};
    std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
    for (auto& v : out) v *= c;
    return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
    const auto coeffs = p.coeffs();
    if (coeffs.size() <= 1) return {};
    std::vector<Rational> out;
    out.reserve(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) out.push_back(coeffs[k] * Rational(static_cast<long>(k)));
    return Polynomial(std::move(out));
}

Rational eval(const Polynomial& p, const Rational& x) {
    Rational acc;
    const auto coeffs = p.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial compose_affine(const Polynomial& p, const Rational& a, const Rational& b) {
    // Horner in the ring: p(y) with y = a*x + b.
    const Polynomial inner{b, a};
    Polynomial acc;
    const auto coeffs = p.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * inner + Polynomial::constant(*it);
    return acc;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::size_t dq = *divisor.degree();
    std::vector<Rational> r(dividend.coeffs().begin(), dividend.coeffs().end());
    if (r.size() <= dq) return {Polynomial(), dividend};

    const Rational& lead = divisor.leading();
    const auto dc = divisor.coeffs();
    std::vector<Rational> quot(r.size() - dq);
    for (std::size_t i = r.size(); i-- > dq;) {
        if (r[i].is_zero()) continue;
        const Rational factor = r[i] / lead;
        quot[i - dq] = factor;
        for (std::size_t j = 0; j <= dq; ++j) r[i - dq + j] -= factor * dc[j];
    }
    r.resize(dq);
    return {Polynomial(std::move(quot)), Polynomial(std::move(r))};
}

Polynomial rem(const Polynomial& dividend, const Polynomial& divisor) { return divmod(dividend, divisor).second; }

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return scale(p, Rational(1) / p.leading());
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    Polynomial a = p;
    Polynomial b = q;
    while (!b.is_zero()) {
        Polynomial r = monic(rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_constant()) throw std::domain_error("square-free part requires degree >= 1");
    return monic(divmod(p, gcd(p, derivative(p))).first);
}

std::string to_pretty_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto coeffs = p.coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Rational mag = c.abs();
        if (k == 0 || mag != Rational(1)) out += mag.to_string();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_pretty_string(p); }

}  // namespace lagroot
