#include "fqdepth/depth.hpp"

#include "enumerate.hpp"
#include "fqdepth/errors.hpp"

namespace fqdepth {

namespace {

void check_b(const ExtCtx& ctx, std::uint32_t b)
{
    if (b < 1 || b > ctx.p())
        throw BOutOfRangeError("b must satisfy 1 <= b <= p (p = " +
                               std::to_string(ctx.p()) + ", got b = " +
                               std::to_string(b) + ")");
}

} // namespace

bool has_alpha_depth(const NormalBasisMap& map, const FieldElem& beta, std::uint32_t b)
{
    const ExtCtx& E = *map.ctx;
    check_b(E, b);
    const PolyRing& ring = E.ring();
    const Poly xn1 = ring.x_pow_minus_one(E.n());
    const Poly g = map.phi_inv(beta);

    bool by_gcd = true;
    for (std::uint32_t c = 0; c < b && by_gcd; ++c)
        by_gcd = ring.gcd(xn1, ring.sub(g, Poly::constant(E.base().embed_int(c)))).is_one();

    bool by_shifts = true;
    for (std::uint32_t c = 0; c < b && by_shifts; ++c) {
        FieldElem shifted = E.sub(beta, E.mul_base(map.alpha, E.base().embed_int(c)));
        by_shifts = normal_by_rank(shifted);
    }

    if (by_gcd != by_shifts)
        throw std::logic_error("depth routes disagree");
    return by_gcd;
}

std::uint32_t max_alpha_depth(const NormalBasisMap& map, const FieldElem& beta)
{
    std::uint32_t depth = 0;
    for (std::uint32_t b = 1; b <= map.ctx->p(); ++b) {
        if (!has_alpha_depth(map, beta, b))
            break;
        depth = b;
    }
    return depth;
}

BigCount count_phi_b(const ExtCtx& ctx, std::uint32_t b, const EnumOptions& opt)
{
    check_b(ctx, b);
    const std::uint64_t total = detail::checked_total(ctx, opt.cap);
    auto fact = factor_xn_minus_1(ctx.base_ptr(), ctx.n());
    auto counts = detail::count_residues_parallel(ctx.ring(), fact, b, {}, total,
                                                  opt.threads);
    return counts.depth;
}

DepthShiftReport verify_depth_shifts(const ExtCtx& ctx, const EnumOptions& opt,
                                            const NormalBasisMap* map)
{
    const std::uint64_t total = detail::checked_total(ctx, opt.cap);
    NormalBasisMap local;
    if (!map) {
        local = find_normal_element(ctx.shared_from_this());
        map = &local;
    }

    DepthShiftReport report;
    report.e = ctx.e();
    report.shifts_all_normal_branch = ctx.e() > 0;

    for (std::uint64_t code = 0; code < total; ++code) {
        FieldElem beta = ctx.from_code(code);
        if (!is_normal(beta))
            continue;
        ++report.normal_checked;
        const Poly g = map->phi_inv(beta);
        const BaseElt g_at_one = ctx.ring().eval(g, 1);
        for (std::uint64_t c = 0; c < ctx.q(); ++c) {
            const BaseElt ce = static_cast<BaseElt>(c);
            const bool expected =
                report.shifts_all_normal_branch ? true : g_at_one != ce;
            const bool got = is_normal(ctx.sub(beta, ctx.embed_base(ce)));
            if (got != expected) {
                report.pass = false;
                if (report.counterexamples.size() < 16)
                    report.counterexamples.push_back({code, ce, expected, got});
            }
        }
    }
    return report;
}

} // namespace fqdepth
