#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lagroot/polynomial.hpp"
#include "test_support.hpp"

using namespace lagroot;
using lagroot::test::P;
using lagroot::test::Q;

namespace {

bool canonical(const Polynomial& p) { return p.coeffs().empty() || !p.coeffs().back().is_zero(); }

}  // namespace

TEST_CASE("construction strips trailing zeros") {
    const Polynomial p = P({1, 2, 0, 0});
    CHECK(p.coeffs().size() == 2);
    CHECK(P({0, 0}).is_zero());
    CHECK_FALSE(P({0, 0}).degree().has_value());
    CHECK(P({5}).degree() == 0u);
    CHECK(P({0, 0, 3}).degree() == 2u);
    CHECK_THROWS_AS(Polynomial().leading(), std::domain_error);
}

TEST_CASE("add") {
    CHECK(add(P({1, 1}), P({1, -1})) == P({2}));
    const Polynomial p = P({3, -1, 4});
    CHECK(add(p, Polynomial()) == p);
    const Polynomial sum = add(P({0, 0, 1}), P({0, 1, -1}));
    CHECK(sum == P({0, 1}));
    CHECK(canonical(sum));
    CHECK(add(p, -p).is_zero());
}

TEST_CASE("mul") {
    CHECK(mul(P({1, -1}), P({1, -1})) == P({1, -2, 1}));
    CHECK(mul(P({1, 2, 3}), Polynomial()).is_zero());
    CHECK(mul(P({-1, 1}), P({-2, 1})) == P({2, -3, 1}));
}

TEST_CASE("scale") {
    CHECK(scale(P({1, -2, 1}), Q(1, 2)) == Polynomial{Q(1, 2), Rational(-1), Q(1, 2)});
    const Polynomial p = P({4, 0, -7});
    CHECK(scale(p, Rational(1)) == p);
    CHECK(scale(p, Rational(0)).is_zero());
}

TEST_CASE("derivative") {
    CHECK(derivative(P({2, -3, 1})) == P({-3, 2}));
    CHECK(derivative(P({5})).is_zero());
    CHECK(derivative(P({0, 0, 0, 1})) == P({0, 0, 3}));
    CHECK(derivative(Polynomial()).is_zero());
}

TEST_CASE("eval") {
    CHECK(eval(P({2, -3, 1}), Rational(1)) == Rational(0));
    CHECK(eval(P({7, 1, 1}), Rational(0)) == Rational(7));
    CHECK(eval(Polynomial{Rational(1), Rational(-2), Q(1, 2)}, Rational(2)) == Rational(-1));
    CHECK(eval(Polynomial(), Q(3, 7)) == Rational(0));
}

TEST_CASE("compose_affine") {
    CHECK(compose_affine(P({0, 0, 1}), Rational(-1), Rational(1)) == P({1, -2, 1}));
    const Polynomial p = P({3, 1, 4, 1, 5});
    CHECK(compose_affine(p, Rational(1), Rational(0)) == p);
    CHECK(compose_affine(P({-3, 1}), Rational(-1), Rational(1)) == P({-2, -1}));
}

TEST_CASE("rem and divmod") {
    CHECK(rem(P({-1, 0, 1}), P({-1, 1})).is_zero());
    CHECK(rem(P({0, 0, 1}), P({0, 1})).is_zero());
    CHECK(rem(P({1, 0, 1}), P({0, 1})) == P({1}));
    CHECK_THROWS_AS(rem(P({1, 2}), Polynomial()), std::domain_error);
    const auto [q, r] = divmod(P({1, 2}), P({0, 0, 1}));
    CHECK(q.is_zero());
    CHECK(r == P({1, 2}));
}

TEST_CASE("gcd") {
    const Polynomial a = mul(P({-1, 1}), P({-1, 1}));
    const Polynomial b = mul(P({-1, 1}), P({-2, 1}));
    CHECK(gcd(a, b) == P({-1, 1}));
    CHECK(gcd(P({4, 2}), Polynomial()) == P({2, 1}));
    CHECK(gcd(Polynomial(), P({-3, 3})) == P({-1, 1}));
    CHECK(gcd(P({1, 0, 1}), P({-1, 1})) == P({1}));
    CHECK_THROWS_AS(gcd(Polynomial(), Polynomial()), std::domain_error);
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(P({1, -2, 1})) == P({-1, 1}));
    CHECK(squarefree_part(P({2, -3, 1})) == P({2, -3, 1}));
    CHECK(squarefree_part(P({0, 0, 0, 1})) == P({0, 1}));
    CHECK(squarefree_part(P({0, 0, 0, -6})) == P({0, 1}));
    CHECK_THROWS_AS(squarefree_part(P({3})), std::domain_error);
    CHECK_THROWS_AS(squarefree_part(Polynomial()), std::domain_error);
}

TEST_CASE("pretty rendering") {
    CHECK(to_pretty_string(Polynomial{Rational(1), Rational(-2), Q(1, 2)}) == "1 - 2x + 1/2x^2");
    CHECK(to_pretty_string(Polynomial()) == "0");
    CHECK(to_pretty_string(P({0, -1, 0, 1})) == "-x + x^3");
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 150; ++i) {
        const Polynomial p = lagroot::test::random_polynomial(rng, 6);
        const Polynomial q = lagroot::test::random_polynomial(rng, 6);
        const Polynomial r = lagroot::test::random_polynomial(rng, 6);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(canonical(p + q));
        CHECK(canonical(p * q));
        CHECK(canonical(p - p));
        if (!p.is_zero() && !q.is_zero()) CHECK(*(p * q).degree() == *p.degree() + *q.degree());
    }
}

TEST_CASE("division reconstructs the dividend") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 150; ++i) {
        const Polynomial p = lagroot::test::random_polynomial(rng, 8);
        const Polynomial q = lagroot::test::random_polynomial(rng, 4);
        if (q.is_zero()) continue;
        const auto [quot, r] = divmod(p, q);
        CHECK(q * quot + r == p);
        CHECK((r.is_zero() || *r.degree() < *q.degree()));
        CHECK(rem(p, q) == r);
    }
}

TEST_CASE("reflection is an involution") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = lagroot::test::random_polynomial(rng, 9);
        const Polynomial once = compose_affine(p, Rational(-1), Rational(1));
        CHECK(compose_affine(once, Rational(-1), Rational(1)) == p);
        CHECK(once.degree() == p.degree());
    }
}

TEST_CASE("eval agrees with compose_affine at zero") {
    // p(a*0 + b) = p(b): the constant term of p(a x + b) is p(b).
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = lagroot::test::random_polynomial(rng, 7);
        const Rational a = lagroot::test::random_rational(rng);
        const Rational b = lagroot::test::random_rational(rng);
        CHECK(compose_affine(p, a, b).coeff(0) == eval(p, b));
    }
}

TEST_CASE("squarefree part is coprime with its derivative") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        std::vector<Rational> roots;
        std::uniform_int_distribution<int> count(1, 7);
        for (int k = count(rng); k > 0; --k) roots.push_back(lagroot::test::random_rational(rng, 3, 2));
        // Force a repeat.
        roots.push_back(roots.front());
        const Polynomial p = scale(Polynomial::from_roots(roots), Rational(-3));
        const Polynomial sf = squarefree_part(p);
        CHECK(gcd(sf, derivative(sf)) == P({1}));
        CHECK(sf.leading() == Rational(1));
        CHECK(rem(p, sf).is_zero());
    }
}
