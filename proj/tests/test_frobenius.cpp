#include "fqdepth/frobenius.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace fqdepth;

namespace {

Poly P(std::vector<BaseElt> c) { return Poly(std::move(c)); }

struct Setup {
    ExtCtxPtr ctx;
    NormalBasisMap map;
    CyclotomicFactorization fact;
    PrimaryDecomposition dec;
};

Setup make_setup(std::uint64_t q, std::uint32_t n)
{
    auto ctx = make_ext_field(make_base_field_q(q), n);
    auto map = find_normal_element(ctx);
    auto fact = factor_xn_minus_1(ctx->base_ptr(), n);
    auto dec = make_primary_decomposition(ctx->ring(), fact);
    return Setup{ctx, std::move(map), std::move(fact), std::move(dec)};
}

} // namespace

TEST_CASE("circle action basics")
{
    auto ctx = make_ext_field(make_prime_field(3), 4);
    PolyRing ring(ctx->base_ptr());
    Poly xn1 = ring.x_pow_minus_one(4);

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(0, ctx->order_u64() - 1);
    Poly all_ones = P({1, 1, 1, 1});
    for (int i = 0; i < 20; ++i) {
        auto beta = ctx->from_code(dist(rng));
        CHECK(circle_action(xn1, beta).is_zero());
        // sum of all conjugates equals the trace
        CHECK(circle_action(all_ones, beta) ==
              ctx->embed_base(ctx->trace_to_base(beta)));
    }

    // (fg) acting = f acting after g acting, and additivity
    auto beta = ctx->from_code(47);
    Poly f = P({1, 2, 0, 1});
    Poly g = P({2, 0, 1});
    CHECK(circle_action(ring.mul(f, g), beta) ==
          circle_action(f, circle_action(g, beta)));
    CHECK(circle_action(ring.add(f, g), beta) ==
          ctx->add(circle_action(f, beta), circle_action(g, beta)));
}

TEST_CASE("powers of x act as repeated frobenius on the normal element")
{
    auto s = make_setup(7, 3);
    for (std::uint32_t i = 0; i < 3; ++i) {
        Poly xi = Poly::monomial(1, i);
        CHECK(circle_action(xi, s.map.alpha) == s.ctx->frobenius_iter(s.map.alpha, i));
    }
}

TEST_CASE("annihilator edge cases")
{
    auto ctx = make_ext_field(make_prime_field(7), 3);
    // zero element: the constant 1
    CHECK(annihilator(ctx->zero()) == Poly::constant(1));
    // element 1 with gcd(p, n) = 1: x - 1
    CHECK(annihilator(ctx->one()) == P({6, 1}));
}

TEST_CASE("annihilator equals cofactor of gcd with x^n - 1, exhaustively")
{
    for (auto [q, n] : {std::pair{7ull, 3u}, {3ull, 3u}, {2ull, 4u}}) {
        auto s = make_setup(q, n);
        const PolyRing& ring = s.ctx->ring();
        Poly xn1 = ring.x_pow_minus_one(n);
        for (std::uint64_t code = 0; code < s.ctx->order_u64(); ++code) {
            Poly g = ring.from_code(code, n);
            FieldElem beta = s.map.phi(g);
            Poly expected = ring.divmod(xn1, ring.gcd(xn1, g)).first;
            if (g.is_zero())
                expected = Poly::constant(1);
            Poly ann = annihilator(beta);
            CHECK(ann == ring.monic(expected));
            // and it divides x^n - 1
            CHECK(ring.divmod(xn1, ann).second.is_zero());
        }
    }
}

TEST_CASE("normality: base-field elements are never normal for n > 1")
{
    auto ctx = make_ext_field(make_prime_field(5), 3);
    for (BaseElt a = 0; a < 5; ++a)
        CHECK_FALSE(is_normal(ctx->embed_base(a)));
}

TEST_CASE("normal count in F_8 matches phi_q and the rank oracle")
{
    auto ctx = make_ext_field(make_prime_field(2), 3);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < 8; ++code)
        count += is_normal(ctx->from_code(code));
    CHECK(count == 3);
    CHECK(BigCount(count) == euler_phi_q(factor_xn_minus_1(ctx->base_ptr(), 3)));
    CHECK(count == oracle::count_normal(*ctx));
}

TEST_CASE("normal counts equal phi_q across the small grid")
{
    for (auto [q, n] : {std::pair{2ull, 5u}, {3ull, 4u}, {4ull, 3u}, {5ull, 2u},
                        {9ull, 2u}}) {
        auto ctx = make_ext_field(make_base_field_q(q), n);
        std::uint64_t count = 0;
        for (std::uint64_t code = 0; code < ctx->order_u64(); ++code)
            count += normal_by_rank(ctx->from_code(code));
        CHECK(BigCount(count) == euler_phi_q(factor_xn_minus_1(ctx->base_ptr(), n)));
    }
}

TEST_CASE("find_normal_element normalizes the trace")
{
    auto ctx = make_ext_field(make_prime_field(2), 3);
    auto map = find_normal_element(ctx);
    CHECK(ctx->trace_to_base(map.alpha) == 1); // n/tau = 3 = 1 mod 2
    CHECK(is_normal(map.alpha));

    // tau > 1: n/tau = n0 mod p
    auto ctx9 = make_ext_field(make_prime_field(3), 6); // tau = 3, n0 = 2
    auto map9 = find_normal_element(ctx9);
    CHECK(ctx9->trace_to_base(map9.alpha) == 2);

    // the other normalization target
    auto alt = find_normal_element(ctx9, TraceTarget::TauOverN);
    CHECK(ctx9->trace_to_base(alt.alpha) == ctx9->base().inv(2));
}

TEST_CASE("phi and its inverse are mutually inverse bijections")
{
    for (auto [q, n] : {std::pair{2ull, 3u}, {3ull, 3u}, {2ull, 4u}, {5ull, 2u}}) {
        auto s = make_setup(q, n);
        const PolyRing& ring = s.ctx->ring();
        CHECK(s.map.phi(Poly::constant(1)) == s.map.alpha);
        for (std::uint64_t code = 0; code < s.ctx->order_u64(); ++code) {
            Poly g = ring.from_code(code, n);
            CHECK(s.map.phi_inv(s.map.phi(g)) == g);
        }
    }
}

TEST_CASE("phi transports frobenius to multiplication by x")
{
    auto s = make_setup(7, 3);
    const PolyRing& ring = s.ctx->ring();
    Poly xn1 = ring.x_pow_minus_one(3);
    std::mt19937 rng(21);
    std::uniform_int_distribution<std::uint64_t> dist(0, s.ctx->order_u64() - 1);
    for (int i = 0; i < 20; ++i) {
        auto beta = s.ctx->from_code(dist(rng));
        Poly lhs = s.map.phi_inv(s.ctx->frobenius(beta));
        Poly rhs = ring.rem(ring.mul(Poly::x(), s.map.phi_inv(beta)), xn1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("phi_inv(1) is (tau/n) times the x^n-1 cofactor of x-1")
{
    for (auto [q, n] : {std::pair{7ull, 3u}, {3ull, 3u}, {2ull, 4u}, {3ull, 6u}}) {
        auto s = make_setup(q, n);
        const PolyRing& ring = s.ctx->ring();
        // (tau/n) = 1/n0 in F_p
        BaseElt coeff = s.ctx->base().inv(s.ctx->base().embed_int(s.ctx->n0()));
        std::vector<BaseElt> ones(n, 1);
        Poly expected = ring.mul_scalar(Poly(std::move(ones)), coeff);
        CHECK(s.map.phi_inv(s.ctx->one()) == expected);
    }
}

TEST_CASE("primary component residues of alpha and 1")
{
    for (auto [q, n] : {std::pair{7ull, 3u}, {3ull, 6u}, {2ull, 4u}}) {
        auto s = make_setup(q, n);
        const PolyRing& ring = s.ctx->ring();

        auto comps_alpha = primary_components(s.map, s.dec, s.map.alpha);
        REQUIRE(comps_alpha.size() == s.fact.factors.size());
        for (std::size_t i = 0; i < comps_alpha.size(); ++i) {
            Poly residue = ring.rem(s.map.phi_inv(comps_alpha[i]), s.dec.factor_powers[i]);
            CHECK(residue.is_one());
        }

        auto comps_one = primary_components(s.map, s.dec, s.ctx->one());
        Poly xm1 = ring.sub(Poly::x(), Poly::constant(1));
        Poly expected_first = ring.pow(xm1, s.fact.tau - 1);
        for (std::size_t i = 0; i < comps_one.size(); ++i) {
            Poly residue = ring.rem(s.map.phi_inv(comps_one[i]), s.dec.factor_powers[i]);
            if (i == 0)
                CHECK(residue == expected_first);
            else
                CHECK(residue.is_zero());
        }
    }
}

TEST_CASE("components sum to the element and idempotents resolve the identity")
{
    auto s = make_setup(3, 6); // tau = 3
    const PolyRing& ring = s.ctx->ring();
    Poly xn1 = ring.x_pow_minus_one(6);

    // sum of idempotents is 1 mod x^n - 1; pairwise products vanish
    Poly sum;
    for (const Poly& e : s.dec.idempotents)
        sum = ring.add(sum, e);
    CHECK(ring.rem(sum, xn1).is_one());
    for (std::size_t i = 0; i < s.dec.idempotents.size(); ++i)
        for (std::size_t j = i + 1; j < s.dec.idempotents.size(); ++j)
            CHECK(ring.rem(ring.mul(s.dec.idempotents[i], s.dec.idempotents[j]), xn1)
                      .is_zero());

    std::mt19937 rng(5);
    std::uniform_int_distribution<std::uint64_t> dist(0, s.ctx->order_u64() - 1);
    for (int t = 0; t < 20; ++t) {
        auto beta = s.ctx->from_code(dist(rng));
        auto comps = primary_components(s.map, s.dec, beta);
        FieldElem total = s.ctx->zero();
        for (std::size_t i = 0; i < comps.size(); ++i) {
            total = s.ctx->add(total, comps[i]);
            // f_i^tau kills its component
            CHECK(circle_action(s.dec.factor_powers[i], comps[i]).is_zero());
        }
        CHECK(total == beta);
    }
}

TEST_CASE("components are stable under frobenius")
{
    auto s = make_setup(7, 3);
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint64_t> dist(0, s.ctx->order_u64() - 1);
    for (int t = 0; t < 10; ++t) {
        auto beta = s.ctx->from_code(dist(rng));
        auto comps = primary_components(s.map, s.dec, beta);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            auto conj_comps = primary_components(s.map, s.dec, s.ctx->frobenius(comps[i]));
            for (std::size_t j = 0; j < conj_comps.size(); ++j)
                if (j != i)
                    CHECK(conj_comps[j].is_zero());
        }
    }
}

TEST_CASE("five normality conditions agree element-wise")
{
    // tau = 4 single factor, and a split case
    for (auto [q, n] : {std::pair{2ull, 4u}, {7ull, 3u}}) {
        auto s = make_setup(q, n);
        for (std::uint64_t code = 0; code < s.ctx->order_u64(); ++code) {
            auto rec = check_normal_equivalences(s.map, s.dec, s.ctx->from_code(code));
            CHECK(rec.all_equal());
        }
    }
}

TEST_CASE("all five conditions are false on zero")
{
    auto s = make_setup(7, 3);
    auto rec = check_normal_equivalences(s.map, s.dec, s.ctx->zero());
    CHECK_FALSE(rec.conjugate_rank);
    CHECK_FALSE(rec.residue_coprime);
    CHECK_FALSE(rec.components_coprime);
    CHECK_FALSE(rec.component_annihilators);
    CHECK_FALSE(rec.component_kernel_layers);
}

TEST_CASE("coprime case: normal iff every primary component is nonzero")
{
    auto s = make_setup(7, 3); // gcd(p, n) = 1
    for (std::uint64_t code = 0; code < s.ctx->order_u64(); ++code) {
        auto beta = s.ctx->from_code(code);
        auto comps = primary_components(s.map, s.dec, beta);
        bool all_nonzero = true;
        for (const auto& c : comps)
            all_nonzero = all_nonzero && !c.is_zero();
        CHECK(is_normal(beta) == all_nonzero);
    }
}

TEST_CASE("scalar multiples k*alpha of a normal element are normal")
{
    auto s = make_setup(5, 3);
    for (std::uint32_t k = 1; k < 5; ++k)
        CHECK(is_normal(s.ctx->mul_base(s.map.alpha, k)));
}

TEST_CASE("alternate alpha from a caller-supplied code")
{
    auto ctx = make_ext_field(make_prime_field(7), 3);
    auto codes = first_normal_codes(*ctx, 2);
    REQUIRE(codes.size() == 2);
    auto map2 = normal_basis_from_code(ctx, codes[1]);
    CHECK(is_normal(map2.alpha));
    CHECK(ctx->trace_to_base(map2.alpha) == 3); // n/tau = 3

    CHECK_THROWS_AS(normal_basis_from_code(ctx, 0), std::invalid_argument);
}
