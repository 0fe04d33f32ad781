#include "fqdepth/cyclotomic.hpp"

#include <doctest.h>

using namespace fqdepth;

namespace {

Poly P(std::vector<BaseElt> c) { return Poly(std::move(c)); }

} // namespace

TEST_CASE("gcd over F_7")
{
    auto F7 = make_prime_field(7);
    PolyRing ring(F7);
    Poly x3m1 = ring.x_pow_minus_one(3);

    // common root 1
    CHECK(ring.gcd(x3m1, P({6, 1})) == P({6, 1})); // x - 1
    // 3^3 = 27 = 6 != 1 mod 7, so x - 3 is coprime to x^3 - 1
    CHECK(ring.gcd(x3m1, P({4, 1})).is_one());
    // gcds come back monic
    Poly g = ring.gcd(ring.mul_scalar(x3m1, 3), ring.mul_scalar(P({6, 1}), 5));
    CHECK(g.lead() == 1);
    CHECK(ring.gcd(Poly{}, Poly{}).is_zero());
}

TEST_CASE("divmod over F_5")
{
    auto F5 = make_prime_field(5);
    PolyRing ring(F5);
    // x^4 - 1 = (x-1)(x-2)(x-3)(x-4): dividing by x - 2 is exact
    auto [quo, rem] = ring.divmod(ring.x_pow_minus_one(4), P({3, 1}));
    CHECK(rem.is_zero());
    CHECK(quo.degree() == 3);
    CHECK(ring.mul(quo, P({3, 1})) == ring.x_pow_minus_one(4));
    CHECK_THROWS_AS(ring.divmod(P({1, 1}), Poly{}), DivisionByZeroError);
}

TEST_CASE("extended gcd is a Bezout identity")
{
    auto F7 = make_prime_field(7);
    PolyRing ring(F7);
    Poly a = ring.x_pow_minus_one(3);
    Poly b = P({4, 1});
    Poly u, v;
    Poly g = ring.extended_gcd(a, b, u, v);
    CHECK(g.is_one());
    CHECK(ring.add(ring.mul(u, a), ring.mul(v, b)) == g);
}

TEST_CASE("factorization of x^3 - 1 over F_7")
{
    auto fact = factor_xn_minus_1(make_prime_field(7), 3);
    CHECK(fact.tau == 1);
    CHECK(fact.n0 == 3);
    REQUIRE(fact.factors.size() == 3);
    // x - 1 first, then by smallest coset representative
    CHECK(fact.factors[0].f == P({6, 1}));
    CHECK(fact.factors[0].root_order == 1);
    CHECK(fact.factors[1].root_order == 3);
    CHECK(fact.factors[2].root_order == 3);
    // the linear factors are x-1, x-2, x-4 in some order
    std::vector<Poly> expected{P({6, 1}), P({5, 1}), P({3, 1})};
    for (const auto& want : expected) {
        bool found = false;
        for (const auto& f : fact.factors)
            found = found || f.f == want;
        CHECK(found);
    }
}

TEST_CASE("factorization of x^3 - 1 over F_13")
{
    auto fact = factor_xn_minus_1(make_prime_field(13), 3);
    REQUIRE(fact.factors.size() == 3);
    // x-1, x-3, x-9
    std::vector<Poly> expected{P({12, 1}), P({10, 1}), P({4, 1})};
    for (const auto& want : expected) {
        bool found = false;
        for (const auto& f : fact.factors)
            found = found || f.f == want;
        CHECK(found);
    }
}

TEST_CASE("p divides n: x^3 - 1 = (x-1)^3 over F_3")
{
    auto fact = factor_xn_minus_1(make_prime_field(3), 3);
    CHECK(fact.tau == 3);
    CHECK(fact.n0 == 1);
    REQUIRE(fact.factors.size() == 1);
    CHECK(fact.factors[0].f == P({2, 1}));
    CHECK(fact.factors[0].root_order == 1);
}

TEST_CASE("n = 1 factors as the single linear factor x - 1")
{
    auto fact = factor_xn_minus_1(make_prime_field(5), 1);
    CHECK(fact.tau == 1);
    CHECK(fact.n0 == 1);
    REQUIRE(fact.factors.size() == 1);
    CHECK(fact.factors[0].f == P({4, 1}));
}

TEST_CASE("factorization invariants across a grid")
{
    for (auto [q, n] : {std::pair{2ull, 4u}, {2ull, 5u}, {3ull, 4u}, {3ull, 6u},
                        {4ull, 3u}, {4ull, 4u}, {5ull, 4u}, {7ull, 3u}, {9ull, 2u},
                        {13ull, 3u}}) {
        auto field = make_base_field_q(q);
        PolyRing ring(field);
        auto fact = factor_xn_minus_1(field, n);

        // product reassembles x^n - 1
        Poly prod = Poly::constant(1);
        std::uint32_t degsum = 0;
        for (const auto& f : fact.factors) {
            prod = ring.mul(prod, f.f);
            degsum += f.degree;
            CHECK(fact.n0 % f.root_order == 0);
        }
        CHECK(ring.pow(prod, fact.tau) == ring.x_pow_minus_one(n));
        CHECK(degsum == fact.n0);
        CHECK(fact.n0 % field->p() != 0);

        // pairwise coprime
        for (std::size_t i = 0; i < fact.factors.size(); ++i)
            for (std::size_t j = i + 1; j < fact.factors.size(); ++j)
                CHECK(ring.gcd(fact.factors[i].f, fact.factors[j].f).is_one());

        // x - 1 is listed first
        CHECK(fact.factors[0].coset == std::vector<std::uint32_t>{0});
        CHECK(fact.factors[0].root_order == 1);
    }
}

TEST_CASE("euler phi over F_q matches brute-force coprime counting")
{
    for (auto [q, n] : {std::pair{2ull, 3u}, {2ull, 4u}, {2ull, 5u}, {3ull, 3u},
                        {3ull, 4u}, {3ull, 5u}, {4ull, 3u}, {4ull, 4u}, {5ull, 2u},
                        {5ull, 3u}, {5ull, 4u}, {7ull, 2u}, {7ull, 3u}, {9ull, 2u},
                        {13ull, 3u}}) {
        auto field = make_base_field_q(q);
        PolyRing ring(field);
        auto fact = factor_xn_minus_1(field, n);
        Poly xn1 = ring.x_pow_minus_one(n);
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < n; ++i)
            total *= q;
        std::uint64_t brute = 0;
        for (std::uint64_t code = 0; code < total; ++code)
            brute += ring.gcd(xn1, ring.from_code(code, n)).is_one();
        CHECK(euler_phi_q(fact) == BigCount(brute));
    }
    // q = 2, n = 3: 1 * 3 candidates coprime
    CHECK(euler_phi_q(factor_xn_minus_1(make_prime_field(2), 3)) == 3);
    // q = 7, n = 3: 6^3
    CHECK(euler_phi_q(factor_xn_minus_1(make_prime_field(7), 3)) == 216);
    // n = 1: units of F_q
    CHECK(euler_phi_q(factor_xn_minus_1(make_prime_field(11), 1)) == 10);
}

TEST_CASE("eval_mod_factor")
{
    auto F7 = make_prime_field(7);
    PolyRing ring7(F7);
    // g = x at the root of x - 2 is the constant 2
    CHECK(eval_mod_factor(ring7, Poly::x(), P({5, 1})) == Poly::constant(2));

    auto F2 = make_prime_field(2);
    PolyRing ring2(F2);
    Poly quad = P({1, 1, 1});
    // already reduced
    CHECK(eval_mod_factor(ring2, P({1, 1}), quad) == P({1, 1}));
    // theta^3 = 1 since theta has order 3
    CHECK(eval_mod_factor(ring2, P({0, 0, 0, 1}), quad).is_one());
}

TEST_CASE("poly code round trip and canonical order")
{
    auto F3 = make_prime_field(3);
    PolyRing ring(F3);
    for (std::uint64_t code = 0; code < 81; ++code)
        CHECK(ring.to_code(ring.from_code(code, 4)) == code);
}
