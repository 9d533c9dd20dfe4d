#include "lagroot/transforms.hpp"

#include <stdexcept>
#include <string>

#include "lagroot/errors.hpp"

namespace lagroot {

MonomialTransform::MonomialTransform(std::vector<Polynomial> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("monomial transform needs at least the image of 1");
}

const Polynomial& MonomialTransform::image(std::size_t k) const {
    if (k > max_degree())
        throw CapacityError(k, max_degree(),
                            "x^" + std::to_string(k) + " is beyond transform table max_degree " +
                                std::to_string(max_degree()));
    return images_[k];
}

TransformKind parse_transform_kind(std::string_view name) {
    if (name == "laguerre") return TransformKind::laguerre;
    if (name == "factorial") return TransformKind::factorial;
    if (name == "reflection") return TransformKind::reflection;
    throw ParseError("unknown transform '" + std::string(name) + "' (expected laguerre, factorial or reflection)");
}

std::string_view to_string(TransformKind kind) {
    switch (kind) {
        case TransformKind::laguerre:
            return "laguerre";
        case TransformKind::factorial:
            return "factorial";
        case TransformKind::reflection:
            return "reflection";
    }
    return "?";
}

namespace {

template <class Fn>
MonomialTransform build(std::size_t max_degree, Fn&& image_of) {
    std::vector<Polynomial> images;
    images.reserve(max_degree + 1);
    for (std::size_t k = 0; k <= max_degree; ++k) images.push_back(image_of(k));
    return MonomialTransform(std::move(images));
}

}  // namespace

MonomialTransform make_identity_transform(std::size_t max_degree) {
    return build(max_degree, [](std::size_t k) { return Polynomial::monomial(k); });
}

MonomialTransform make_factorial_transform(std::size_t max_degree) {
    return build(max_degree,
                 [](std::size_t k) { return Polynomial::monomial(k, Rational(BigInt(1), factorial(k))); });
}

MonomialTransform make_reflection_transform(std::size_t max_degree) {
    std::vector<Polynomial> images;
    images.reserve(max_degree + 1);
    const Polynomial one_minus_x{Rational(1), Rational(-1)};
    images.push_back(Polynomial::constant(1));
    for (std::size_t k = 1; k <= max_degree; ++k) images.push_back(images.back() * one_minus_x);
    return MonomialTransform(std::move(images));
}

MonomialTransform make_laguerre_transform(std::size_t max_degree) {
    return build(max_degree, [](std::size_t n) { return laguerre_sum(n); });
}

MonomialTransform make_transform(TransformKind kind, std::size_t max_degree) {
    switch (kind) {
        case TransformKind::laguerre:
            return make_laguerre_transform(max_degree);
        case TransformKind::factorial:
            return make_factorial_transform(max_degree);
        case TransformKind::reflection:
            return make_reflection_transform(max_degree);
    }
    throw std::invalid_argument("unknown transform kind");
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    // Each partial product C(n, i) is an integer, so the division is exact.
    BigInt acc = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

BigInt factorial(unsigned long n) {
    BigInt acc = 1;
    for (unsigned long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Polynomial laguerre_sum(std::size_t n) {
    std::vector<Rational> coeffs;
    coeffs.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        BigInt num = binomial(n, k);
        if (k % 2 == 1) num = -num;
        coeffs.emplace_back(num, factorial(k));
    }
    return Polynomial(std::move(coeffs));
}

Polynomial laguerre_recurrence(std::size_t n) {
    Polynomial prev = Polynomial::constant(1);
    if (n == 0) return prev;
    Polynomial curr{Rational(1), Rational(-1)};
    for (std::size_t m = 1; m < n; ++m) {
        const auto mm = static_cast<long>(m);
        const Polynomial factor{Rational(2 * mm + 1), Rational(-1)};
        Polynomial next = scale(factor * curr - scale(prev, Rational(mm)), Rational(1) / Rational(mm + 1));
        prev = std::move(curr);
        curr = std::move(next);
    }
    return curr;
}

Polynomial apply(const MonomialTransform& t, const Polynomial& p) {
    if (p.is_zero()) return {};
    const std::size_t deg = *p.degree();
    if (deg > t.max_degree())
        throw CapacityError(deg, t.max_degree(),
                            "polynomial degree " + std::to_string(deg) + " exceeds transform max_degree " +
                                std::to_string(t.max_degree()));
    Polynomial acc;
    const auto coeffs = p.coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        acc = acc + scale(t.image(k), coeffs[k]);
    }
    return acc;
}

MonomialTransform compose(const MonomialTransform& outer, const MonomialTransform& inner) {
    std::vector<Polynomial> images;
    images.reserve(inner.max_degree() + 1);
    for (std::size_t k = 0; k <= inner.max_degree(); ++k) {
        const Polynomial& img = inner.image(k);
        if (!img.is_zero() && *img.degree() > outer.max_degree())
            throw CapacityError(*img.degree(), outer.max_degree(),
                                "inner image of x^" + std::to_string(k) + " has degree " +
                                    std::to_string(*img.degree()) + ", beyond outer max_degree " +
                                    std::to_string(outer.max_degree()));
        images.push_back(apply(outer, img));
    }
    return MonomialTransform(std::move(images));
}

}  // namespace lagroot
