#include "fqdepth/frobenius.hpp"

#include "fqdepth/errors.hpp"

namespace fqdepth {

FieldElem circle_action(const Poly& f, const FieldElem& beta)
{
    const ExtCtx& E = *beta.ctx();
    const std::uint32_t n = E.n();
    // fold exponents mod n first: x^n acts as the identity on F_{q^n}
    std::vector<BaseElt> folded(n, 0);
    for (std::size_t i = 0; i < f.c.size(); ++i)
        folded[i % n] = E.base().add(folded[i % n], f.c[i]);

    FieldElem acc = E.zero();
    FieldElem conj = beta;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (folded[i] != 0)
            acc = E.add(acc, E.mul_base(conj, folded[i]));
        if (i + 1 < n)
            conj = E.frobenius(conj);
    }
    return acc;
}

Poly annihilator(const FieldElem& beta)
{
    const ExtCtx& E = *beta.ctx();
    const std::uint32_t n = E.n();
    const FieldCtx& F = E.base();

    // incremental elimination over the conjugate vectors, carrying the
    // combination of original rows so the dependency gives the polynomial
    struct Row {
        std::vector<BaseElt> v;     // length n, leading entry 1
        std::vector<BaseElt> combo; // length m+1 at insertion time
        std::uint32_t lead;
    };
    std::vector<Row> rows;

    FieldElem conj = beta;
    for (std::uint32_t m = 0; m <= n; ++m) {
        std::vector<BaseElt> v = conj.coeffs();
        std::vector<BaseElt> combo(m + 1, 0);
        combo[m] = 1;
        for (const Row& row : rows) {
            BaseElt factor = v[row.lead];
            if (factor == 0)
                continue;
            for (std::uint32_t i = 0; i < n; ++i)
                v[i] = F.sub(v[i], F.mul(factor, row.v[i]));
            for (std::size_t i = 0; i < row.combo.size(); ++i)
                combo[i] = F.sub(combo[i], F.mul(factor, row.combo[i]));
        }
        std::uint32_t lead = 0;
        while (lead < n && v[lead] == 0)
            ++lead;
        if (lead == n) {
            // dependency found; combo is monic in x^m by construction
            return Poly(std::move(combo));
        }
        BaseElt scale = F.inv(v[lead]);
        for (std::uint32_t i = 0; i < n; ++i)
            v[i] = F.mul(v[i], scale);
        for (auto& c : combo)
            c = F.mul(c, scale);
        rows.push_back(Row{std::move(v), std::move(combo), lead});
        conj = E.frobenius(conj);
    }
    throw std::logic_error("no annihilator found below degree n+1"); // unreachable
}

bool normal_by_rank(const FieldElem& beta)
{
    const ExtCtx& E = *beta.ctx();
    const std::uint32_t n = E.n();
    Mat m(n, n);
    FieldElem conj = beta;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t r = 0; r < n; ++r)
            m.at(r, i) = conj.coeffs()[r];
        if (i + 1 < n)
            conj = E.frobenius(conj);
    }
    return mat_rank(E.base(), std::move(m)) == n;
}

bool is_normal(const FieldElem& beta)
{
    const bool by_rank = normal_by_rank(beta);
    const bool by_ann = annihilator(beta).degree() == static_cast<int>(beta.ctx()->n());
    if (by_rank != by_ann)
        throw std::logic_error("normality routes disagree");
    return by_rank;
}

std::vector<std::uint64_t> first_normal_codes(const ExtCtx& ctx, std::size_t count)
{
    std::vector<std::uint64_t> out;
    const std::uint64_t total = ctx.order_u64();
    for (std::uint64_t code = 0; code < total && out.size() < count; ++code)
        if (normal_by_rank(ctx.from_code(code)))
            out.push_back(code);
    return out;
}

namespace {

NormalBasisMap build_map(const ExtCtxPtr& ctx, FieldElem alpha, TraceTarget target)
{
    const FieldCtx& F = ctx->base();
    BaseElt tr = ctx->trace_to_base(alpha);
    if (tr == 0)
        throw std::logic_error("normal element has zero trace");
    // n/tau = n0 (mod p) is a unit; TauOverN uses its reciprocal
    BaseElt n0_elt = F.embed_int(static_cast<std::int64_t>(ctx->n0()));
    BaseElt want = target == TraceTarget::NOverTau ? n0_elt : F.inv(n0_elt);
    alpha = ctx->mul_base(alpha, F.mul(want, F.inv(tr)));

    const std::uint32_t n = ctx->n();
    Mat basis(n, n);
    FieldElem conj = alpha;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t r = 0; r < n; ++r)
            basis.at(r, i) = conj.coeffs()[r];
        if (i + 1 < n)
            conj = ctx->frobenius(conj);
    }
    auto inv = mat_inverse(F, basis);
    if (!inv)
        throw std::logic_error("conjugate matrix of a normal element is singular");
    return NormalBasisMap{ctx, std::move(alpha), std::move(basis), std::move(*inv)};
}

} // namespace

FieldElem NormalBasisMap::phi(const Poly& g) const
{
    const std::uint32_t n = ctx->n();
    Poly gg = g;
    if (gg.degree() >= static_cast<int>(n)) {
        // canonical representative mod x^n - 1
        std::vector<BaseElt> folded(n, 0);
        for (std::size_t i = 0; i < gg.c.size(); ++i)
            folded[i % n] = ctx->base().add(folded[i % n], gg.c[i]);
        gg = Poly(std::move(folded));
    }
    std::vector<BaseElt> v = gg.c;
    v.resize(n, 0);
    return ctx->element(mat_vec(ctx->base(), basis, v));
}

Poly NormalBasisMap::phi_inv(const FieldElem& beta) const
{
    return Poly(mat_vec(ctx->base(), basis_inv, beta.coeffs()));
}

NormalBasisMap find_normal_element(const ExtCtxPtr& ctx, TraceTarget target)
{
    auto codes = first_normal_codes(*ctx, 1);
    if (codes.empty())
        throw std::logic_error("no normal element found"); // cannot happen
    return build_map(ctx, ctx->from_code(codes[0]), target);
}

NormalBasisMap normal_basis_from_code(const ExtCtxPtr& ctx, std::uint64_t code,
                                      TraceTarget target)
{
    FieldElem alpha = ctx->from_code(code);
    if (!is_normal(alpha))
        throw std::invalid_argument("element is not normal");
    return build_map(ctx, std::move(alpha), target);
}

PrimaryDecomposition make_primary_decomposition(const PolyRing& ring,
                                                const CyclotomicFactorization& fact)
{
    PrimaryDecomposition dec;
    dec.fact = fact;
    const Poly& xn1 = fact.xn_minus_one;
    for (const auto& factor : fact.factors) {
        Poly fp = ring.pow(factor.f, fact.tau);
        Poly cof = ring.divmod(xn1, fp).first;
        Poly u, v;
        Poly g = ring.extended_gcd(fp, cof, u, v);
        if (!g.is_one())
            throw std::logic_error("factor powers are not coprime");
        // e_i = v * cofactor, reduced mod x^n - 1
        Poly e = ring.rem(ring.mul(v, cof), xn1);
        dec.factor_powers.push_back(std::move(fp));
        dec.idempotents.push_back(std::move(e));
    }
    return dec;
}

std::vector<FieldElem> primary_components(const NormalBasisMap& map,
                                          const PrimaryDecomposition& dec,
                                          const FieldElem& beta)
{
    if (!beta.ctx() || !beta.ctx()->same_field(*map.ctx))
        throw CtxMismatchError("element does not belong to the map's field");
    std::vector<FieldElem> out;
    out.reserve(dec.idempotents.size());
    for (const Poly& e : dec.idempotents)
        out.push_back(circle_action(e, beta));
    return out;
}

NormalEquivalenceRecord check_normal_equivalences(const NormalBasisMap& map,
                                                  const PrimaryDecomposition& dec,
                                                  const FieldElem& beta)
{
    const ExtCtx& E = *map.ctx;
    const PolyRing& ring = E.ring();
    const Poly g = map.phi_inv(beta);
    const Poly& xn1 = dec.fact.xn_minus_one;

    NormalEquivalenceRecord rec{};
    rec.conjugate_rank = normal_by_rank(beta);
    rec.residue_coprime = ring.gcd(xn1, g).is_one();

    rec.components_coprime = true;
    for (std::size_t i = 0; i < dec.fact.factors.size(); ++i) {
        Poly gi = ring.rem(g, dec.factor_powers[i]);
        if (!ring.gcd(dec.fact.factors[i].f, gi).is_one()) {
            rec.components_coprime = false;
            break;
        }
    }

    auto components = primary_components(map, dec, beta);

    rec.component_annihilators = true;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (!(annihilator(components[i]) == dec.factor_powers[i])) {
            rec.component_annihilators = false;
            break;
        }
    }

    rec.component_kernel_layers = true;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const Poly& f = dec.fact.factors[i].f;
        Poly f_low = ring.pow(f, dec.fact.tau - 1);
        bool killed_full = circle_action(dec.factor_powers[i], components[i]).is_zero();
        bool killed_low = circle_action(f_low, components[i]).is_zero();
        if (!killed_full || killed_low) {
            rec.component_kernel_layers = false;
            break;
        }
    }
    return rec;
}

} // namespace fqdepth
