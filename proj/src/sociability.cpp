#include "fqdepth/sociability.hpp"

#include "enumerate.hpp"
#include "fqdepth/errors.hpp"

#include <algorithm>
#include <numeric>

namespace fqdepth {

namespace {

void check_b(std::uint32_t b, std::uint32_t p)
{
    if (b < 1 || b > p)
        throw BOutOfRangeError("b must satisfy 1 <= b <= p");
}

std::uint64_t count_set(const std::vector<char>& set)
{
    return static_cast<std::uint64_t>(std::count(set.begin(), set.end(), char(1)));
}

} // namespace

std::vector<std::vector<char>> forbidden_value_sets(const PolyRing& ring,
                                                    const CyclotomicFactorization& fact,
                                                    std::uint32_t b)
{
    const FieldCtx& F = ring.field();
    std::vector<std::vector<char>> sets;
    sets.reserve(fact.factors.size());
    for (const auto& factor : fact.factors) {
        std::uint64_t size = 1;
        for (std::uint32_t t = 0; t < factor.degree; ++t)
            size *= fact.q;
        std::vector<char> forbidden(size, 0);
        forbidden[0] = 1; // c = 0
        Poly theta_pow = ring.rem(Poly::constant(1), factor.f); // theta^0
        for (std::uint32_t j = 0; j < fact.n; ++j) {
            for (std::uint32_t c = 1; c < b; ++c) {
                Poly val = ring.mul_scalar(theta_pow, F.embed_int(c));
                forbidden[ring.to_code(val)] = 1;
            }
            if (j + 1 < fact.n)
                theta_pow = ring.rem(ring.mul(theta_pow, Poly::x()), factor.f);
        }
        sets.push_back(std::move(forbidden));
    }
    return sets;
}

bool is_sociable(const NormalBasisMap& map, const CyclotomicFactorization& fact,
                 const FieldElem& beta, std::uint32_t b)
{
    const ExtCtx& E = *map.ctx;
    check_b(b, E.p());
    const PolyRing& ring = E.ring();
    const Poly g = map.phi_inv(beta);
    const Poly& xn1 = fact.xn_minus_one;
    for (std::uint32_t j = 0; j < E.n(); ++j)
        for (std::uint32_t c = 0; c < b; ++c) {
            Poly shift = Poly::monomial(E.base().embed_int(c), j);
            if (!ring.gcd(xn1, ring.sub(g, shift)).is_one())
                return false;
        }
    return true;
}

TfaeRecord check_tfae_sociable(const NormalBasisMap& map,
                               const CyclotomicFactorization& fact,
                               const FieldElem& beta, std::uint32_t b)
{
    const ExtCtx& E = *map.ctx;
    check_b(b, E.p());
    const PolyRing& ring = E.ring();
    const FieldCtx& F = E.base();

    TfaeRecord rec{};

    // (1) element side: every conjugate, every shift, rank test only
    rec.conjugates_have_depth = true;
    FieldElem conj = beta;
    for (std::uint32_t i = 0; i < E.n() && rec.conjugates_have_depth; ++i) {
        for (std::uint32_t c = 0; c < b; ++c) {
            FieldElem shifted = E.sub(conj, E.mul_base(map.alpha, F.embed_int(c)));
            if (!normal_by_rank(shifted)) {
                rec.conjugates_have_depth = false;
                break;
            }
        }
        if (i + 1 < E.n())
            conj = E.frobenius(conj);
    }

    // (2) residue side against x^n - 1
    rec.shifted_residues_coprime = is_sociable(map, fact, beta, b);

    // (3) per-factor gcds of g_i = g mod f_i^tau
    const Poly g = map.phi_inv(beta);
    rec.component_shifts_coprime = true;
    for (const auto& factor : fact.factors) {
        Poly fp = ring.pow(factor.f, fact.tau);
        Poly gi = ring.rem(g, fp);
        for (std::uint32_t j = 0; j < E.n() && rec.component_shifts_coprime; ++j)
            for (std::uint32_t c = 0; c < b; ++c) {
                Poly shift = Poly::monomial(F.embed_int(c), j);
                if (!ring.gcd(factor.f, ring.sub(gi, shift)).is_one()) {
                    rec.component_shifts_coprime = false;
                    break;
                }
            }
        if (!rec.component_shifts_coprime)
            break;
    }

    // (4) forbidden values at the factor roots
    auto forbidden = forbidden_value_sets(ring, fact, b);
    rec.root_values_allowed = true;
    for (std::size_t i = 0; i < fact.factors.size(); ++i) {
        Poly mi = eval_mod_factor(ring, g, fact.factors[i].f);
        if (forbidden[i][ring.to_code(mi)]) {
            rec.root_values_allowed = false;
            break;
        }
    }
    return rec;
}

BigCount count_sociable_distinctness_bound(const CyclotomicFactorization& fact,
                                           std::uint32_t b, bool* degenerate)
{
    BigCount total = checked_pow(BigCount(fact.q),
                                 std::uint64_t(fact.n0) * (fact.tau - 1));
    bool clamped = false;
    for (const auto& factor : fact.factors) {
        BigCount qd = checked_pow(BigCount(fact.q), factor.degree);
        BigCount forbidden = BigCount(fact.n) * (b - 1) + 1;
        if (qd <= forbidden) {
            clamped = true;
            total = 0;
            break;
        }
        total = checked_mul(total, qd - forbidden);
    }
    if (degenerate)
        *degenerate = clamped;
    return total;
}

BigCount count_sociable_coprime_order(const CyclotomicFactorization& fact, std::uint32_t b)
{
    if (std::gcd(std::uint64_t(fact.n), fact.q - 1) != 1)
        throw RegimeMismatchError("requires gcd(n, q-1) = 1");
    BigCount total = checked_pow(BigCount(fact.q),
                                 std::uint64_t(fact.n0) * (fact.tau - 1));
    for (const auto& factor : fact.factors) {
        BigCount qd = checked_pow(BigCount(fact.q), factor.degree);
        BigCount forbidden = BigCount(b - 1) * factor.root_order + 1;
        if (qd < forbidden)
            throw std::logic_error("forbidden count exceeds field size");
        total = checked_mul(total, qd - forbidden);
    }
    return total;
}

BigCount count_sociable_n_qs(std::uint64_t q, std::uint32_t s, std::uint32_t b)
{
    if (s < 1)
        throw RegimeMismatchError("requires n = q^s with s >= 1");
    if (b > q)
        throw BOutOfRangeError("b exceeds q");
    BigCount qs = checked_pow(BigCount(q), s);
    BigCount qs1 = checked_pow(BigCount(q), s - 1);
    if (qs - qs1 > ~std::uint64_t(0))
        throw OverflowError("exponent too large");
    BigCount lift = checked_pow(BigCount(q), static_cast<std::uint64_t>(qs - qs1));
    return checked_mul(lift, BigCount(q - b));
}

BigCount count_sociable_n_prime(const CyclotomicFactorization& fact, std::uint32_t b)
{
    auto pp = prime_power_decompose(fact.q);
    if (!pp || !is_prime(fact.n) || fact.n == pp->p || (fact.q - 1) % fact.n == 0)
        throw RegimeMismatchError(
            "requires n prime, n != p, and n not dividing q-1");
    BigCount total = BigCount(fact.q - b);
    for (const auto& factor : fact.factors) {
        if (factor.coset.size() == 1 && factor.coset[0] == 0)
            continue; // the x-1 factor contributes q - b above
        BigCount qd = checked_pow(BigCount(fact.q), factor.degree);
        BigCount forbidden = BigCount(b - 1) * fact.n + 1;
        if (qd < forbidden)
            throw std::logic_error("forbidden count exceeds field size");
        total = checked_mul(total, qd - forbidden);
    }
    return total;
}

BigCount count_sociable_linear_split(std::uint64_t q, std::uint32_t n)
{
    if (n == 0 || (q - 1) % n != 0)
        throw RegimeMismatchError("requires n | q-1");
    BigCount total = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::uint64_t ord = n / std::gcd(std::uint64_t(i), std::uint64_t(n));
        if (q <= ord + 1)
            return 0;
        total = checked_mul(total, BigCount(q - ord - 1));
    }
    return total;
}

std::pair<BigCount, BigCount>
count_sociable_irreducible_cofactor(const CyclotomicFactorization& fact)
{
    const bool cofactor_irreducible =
        fact.tau == 1 && fact.factors.size() == 2 &&
        fact.factors[1].degree == fact.n - 1;
    if (!cofactor_irreducible)
        throw RegimeMismatchError("requires (x^n-1)/(x-1) irreducible");
    BigCount qn1 = checked_pow(BigCount(fact.q), fact.n - 1);
    BigCount sociable = checked_mul(BigCount(fact.q - 2),
                                    qn1 - BigCount(fact.n) - 1);
    BigCount lonely = checked_mul(BigCount(fact.q - 2), BigCount(fact.n - 1));
    return {sociable, lonely};
}

BigCount count_prescribed_values(const PolyRing& ring,
                                 const CyclotomicFactorization& fact,
                                 std::span<const Poly> residues,
                                 const EnumOptions& opt)
{
    if (residues.size() != fact.factors.size())
        throw std::invalid_argument("one residue prescription per factor required");
    BigCount order = checked_pow(BigCount(fact.q), fact.n);
    if (order > BigCount(opt.cap))
        throw CapExceededError("enumeration cap exceeded");
    const std::uint64_t total = static_cast<std::uint64_t>(order);

    std::vector<std::uint64_t> want(residues.size());
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (residues[i].degree() >= static_cast<int>(fact.factors[i].degree))
            throw std::invalid_argument("prescription degree must be below deg f_i");
        want[i] = ring.to_code(residues[i]);
    }

    detail::ResidueWalker walker(ring, fact);
    walker.seek(0);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        bool match = true;
        for (std::size_t i = 0; i < want.size(); ++i)
            if (walker.residue_code(i) != want[i]) {
                match = false;
                break;
            }
        count += match;
        if (code + 1 < total)
            walker.step();
    }

    BigCount expected = checked_pow(BigCount(fact.q),
                                    std::uint64_t(fact.n0) * (fact.tau - 1));
    if (BigCount(count) != expected)
        throw std::logic_error("prescription count does not match q^(n(tau-1)/tau)");
    return count;
}

namespace {

/// Evaluate every applicable closed form at (q, n, b), in dispatch order.
std::vector<std::pair<std::string, BigCount>>
applicable_closed_forms(const CyclotomicFactorization& fact, std::uint32_t b)
{
    std::vector<std::pair<std::string, BigCount>> out;
    const std::uint64_t q = fact.q;
    const std::uint32_t n = fact.n;

    if (b == 2 && (q - 1) % n == 0)
        out.emplace_back("linear_split", count_sociable_linear_split(q, n));

    // n = q^s?
    {
        BigCount power = q;
        std::uint32_t s = 1;
        while (power < n) {
            power = checked_mul(power, BigCount(q));
            ++s;
        }
        if (power == n && b <= q)
            out.emplace_back("n_eq_q_s", count_sociable_n_qs(q, s, b));
    }

    if (b == 2 && fact.tau == 1 && fact.factors.size() == 2 &&
        fact.factors[1].degree == n - 1)
        out.emplace_back("irreducible_cofactor",
                         count_sociable_irreducible_cofactor(fact).first);

    {
        auto pp = prime_power_decompose(q);
        if (pp && is_prime(n) && n != pp->p && (q - 1) % n != 0)
            out.emplace_back("n_prime", count_sociable_n_prime(fact, b));
    }

    if (std::gcd(std::uint64_t(n), q - 1) == 1)
        out.emplace_back("coprime_order", count_sociable_coprime_order(fact, b));

    return out;
}

} // namespace

SociabilityReport classify_all(const ExtCtx& ctx, std::uint32_t b, const EnumOptions& opt)
{
    check_b(b, ctx.p());
    const std::uint64_t total = detail::checked_total(ctx, opt.cap);
    auto fact = factor_xn_minus_1(ctx.base_ptr(), ctx.n());
    auto forbidden = forbidden_value_sets(ctx.ring(), fact, b);
    auto counts = detail::count_residues_parallel(ctx.ring(), fact, b, forbidden, total,
                                                  opt.threads);

    SociabilityReport report;
    report.q = ctx.q();
    report.n = ctx.n();
    report.b = b;
    report.total = ctx.order();
    report.normal = counts.normal;
    report.depth_b = counts.depth;
    report.sociable = counts.sociable;
    report.lonely = counts.depth - counts.sociable;

    // product form of the same count, from the materialized set sizes
    BigCount product = checked_pow(BigCount(fact.q),
                                   std::uint64_t(fact.n0) * (fact.tau - 1));
    for (std::size_t i = 0; i < fact.factors.size(); ++i) {
        BigCount qd = checked_pow(BigCount(fact.q), fact.factors[i].degree);
        product = checked_mul(product, qd - BigCount(count_set(forbidden[i])));
    }
    report.exact_product = product;
    if (report.exact_product != report.sociable)
        throw std::logic_error("enumerated sociable count disagrees with the "
                               "forbidden-set product");

    report.distinctness_bound =
        count_sociable_distinctness_bound(fact, b, &report.bound_degenerate);

    report.applicable_formulas = applicable_closed_forms(fact, b);
    if (!report.applicable_formulas.empty()) {
        report.formula_name = report.applicable_formulas.front().first;
        report.formula_value = report.applicable_formulas.front().second;
    }
    for (const auto& [name, value] : report.applicable_formulas)
        if (value != report.sociable)
            report.mismatch = true;
    return report;
}

std::span<const ReferenceValue> reference_values()
{
    static const ReferenceValue table[] = {
        {"depth2_linear_split_q7", 7, 3, 2, "depth_b", 125, false},
        {"sociable_q7_n3_b2", 7, 3, 2, "sociable", 45, false},
        {"lonely_q7_n3_b2", 7, 3, 2, "lonely", 80, false},
        {"sociable_q7_n3_b3", 7, 3, 3, "sociable", 36, false},
        {"sociable_q5_n4_b2", 5, 4, 2, "sociable", 0, false},
        {"sociable_q3_n5_b2", 3, 5, 2, "sociable", 75, false},
        {"lonely_q3_n5_b2", 3, 5, 2, "lonely", 4, false},
        // printed as 36 in the source example, but the product it abbreviates
        // is (13-3)(13-7)^2 = 360; the enumeration decides
        {"sociable_q13_n3_b3_printed", 13, 3, 3, "sociable", 36, true},
    };
    return table;
}

} // namespace fqdepth
