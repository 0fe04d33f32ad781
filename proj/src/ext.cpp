#include "fqdepth/ext.hpp"

#include "fqdepth/errors.hpp"

#include <limits>

namespace fqdepth {

FieldElem::FieldElem(ExtCtxPtr ctx, std::vector<BaseElt> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs))
{
    if (c_.size() != ctx_->n())
        throw std::invalid_argument("coefficient vector length must equal n");
}

bool FieldElem::is_zero() const
{
    for (BaseElt v : c_)
        if (v != 0)
            return false;
    return true;
}

std::uint64_t FieldElem::code() const
{
    std::uint64_t code = 0;
    const std::uint64_t q = ctx_->q();
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (code > (std::numeric_limits<std::uint64_t>::max() - c_[i]) / q)
            throw OverflowError("element code does not fit in 64 bits");
        code = code * q + c_[i];
    }
    return code;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) { return a.ctx()->add(a, b); }
FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a.ctx()->sub(a, b); }
FieldElem operator*(const FieldElem& a, const FieldElem& b) { return a.ctx()->mul(a, b); }
FieldElem operator/(const FieldElem& a, const FieldElem& b)
{
    return a.ctx()->mul(a, a.ctx()->inv(b));
}
FieldElem FieldElem::operator-() const { return ctx_->neg(*this); }

ExtCtx::ExtCtx(FieldCtxPtr base, std::uint32_t n, Poly modulus)
    : base_(base), ring_(base), n_(n), modulus_(std::move(modulus))
{
    e_ = valuation(n_, base_->p());
    tau_ = 1;
    for (std::uint32_t i = 0; i < e_; ++i)
        tau_ *= base_->p();
    n0_ = n_ / tau_;
    order_ = checked_pow(BigCount(base_->q()), n_);
}

std::uint64_t ExtCtx::order_u64() const
{
    if (order_ > BigCount(std::numeric_limits<std::uint64_t>::max()))
        throw OverflowError("field order does not fit in 64 bits");
    return static_cast<std::uint64_t>(order_);
}

void ExtCtx::check(const FieldElem& a) const
{
    if (!a.ctx())
        throw CtxMismatchError("element has no context");
    if (a.ctx().get() != this && !same_field(*a.ctx()))
        throw CtxMismatchError("element belongs to a different field");
}

FieldElem ExtCtx::zero() const
{
    return FieldElem(shared_from_this(), std::vector<BaseElt>(n_, 0));
}

FieldElem ExtCtx::one() const { return embed_base(1); }

FieldElem ExtCtx::element(std::vector<BaseElt> coeffs) const
{
    for (BaseElt v : coeffs)
        if (v >= base_->q())
            throw std::invalid_argument("coefficient out of range");
    return FieldElem(shared_from_this(), std::move(coeffs));
}

FieldElem ExtCtx::from_code(std::uint64_t code) const
{
    std::vector<BaseElt> c(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
        c[i] = static_cast<BaseElt>(code % base_->q());
        code /= base_->q();
    }
    if (code != 0)
        throw std::invalid_argument("element code out of range");
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem ExtCtx::embed_base(BaseElt a) const
{
    if (a >= base_->q())
        throw std::invalid_argument("base element out of range");
    std::vector<BaseElt> c(n_, 0);
    c[0] = a;
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem ExtCtx::embed_int(std::int64_t v) const { return embed_base(base_->embed_int(v)); }

FieldElem ExtCtx::add(const FieldElem& a, const FieldElem& b) const
{
    check(a);
    check(b);
    std::vector<BaseElt> c(n_);
    for (std::uint32_t i = 0; i < n_; ++i)
        c[i] = base_->add(a.coeffs()[i], b.coeffs()[i]);
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem ExtCtx::sub(const FieldElem& a, const FieldElem& b) const
{
    check(a);
    check(b);
    std::vector<BaseElt> c(n_);
    for (std::uint32_t i = 0; i < n_; ++i)
        c[i] = base_->sub(a.coeffs()[i], b.coeffs()[i]);
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem ExtCtx::neg(const FieldElem& a) const
{
    check(a);
    std::vector<BaseElt> c(n_);
    for (std::uint32_t i = 0; i < n_; ++i)
        c[i] = base_->neg(a.coeffs()[i]);
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem ExtCtx::mul(const FieldElem& a, const FieldElem& b) const
{
    check(a);
    check(b);
    Poly prod = ring_.rem(ring_.mul(Poly(a.coeffs()), Poly(b.coeffs())), modulus_);
    prod.c.resize(n_, 0);
    return FieldElem(shared_from_this(), std::move(prod.c));
}

FieldElem ExtCtx::mul_base(const FieldElem& a, BaseElt s) const
{
    check(a);
    std::vector<BaseElt> c(n_);
    for (std::uint32_t i = 0; i < n_; ++i)
        c[i] = base_->mul(a.coeffs()[i], s);
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem ExtCtx::inv(const FieldElem& a) const
{
    check(a);
    if (a.is_zero())
        throw DivisionByZeroError("inverse of zero");
    Poly u, v;
    Poly g = ring_.extended_gcd(Poly(a.coeffs()), modulus_, u, v);
    if (!g.is_one())
        throw std::logic_error("modulus not irreducible: element not invertible");
    Poly r = ring_.rem(u, modulus_);
    r.c.resize(n_, 0);
    return FieldElem(shared_from_this(), std::move(r.c));
}

FieldElem ExtCtx::pow(const FieldElem& a, std::uint64_t exp) const
{
    check(a);
    FieldElem r = one();
    FieldElem base = a;
    while (exp > 0) {
        if (exp & 1)
            r = mul(r, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return r;
}

FieldElem ExtCtx::frobenius(const FieldElem& a) const
{
    check(a);
    if (frob_cols_.empty())
        return pow(a, base_->q());
    std::vector<BaseElt> c(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
        BaseElt s = a.coeffs()[i];
        if (s == 0)
            continue;
        const auto& col = frob_cols_[i];
        for (std::uint32_t r = 0; r < n_; ++r)
            c[r] = base_->add(c[r], base_->mul(s, col[r]));
    }
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem ExtCtx::frobenius_iter(const FieldElem& a, std::uint32_t times) const
{
    FieldElem r = a;
    for (std::uint32_t i = 0; i < times; ++i)
        r = frobenius(r);
    return r;
}

BaseElt ExtCtx::trace_to_base(const FieldElem& a) const
{
    check(a);
    if (!trace_row_.empty()) {
        BaseElt acc = 0;
        for (std::uint32_t i = 0; i < n_; ++i)
            acc = base_->add(acc, base_->mul(a.coeffs()[i], trace_row_[i]));
        return acc;
    }
    FieldElem sum = a;
    FieldElem conj = a;
    for (std::uint32_t i = 1; i < n_; ++i) {
        conj = frobenius(conj);
        sum = add(sum, conj);
    }
    for (std::uint32_t i = 1; i < n_; ++i)
        if (sum.coeffs()[i] != 0)
            throw std::logic_error("trace did not land in the base field");
    return sum.coeffs()[0];
}

ExtCtxPtr make_ext_field(FieldCtxPtr base, std::uint32_t n,
                         const std::optional<Poly>& modulus)
{
    if (!base)
        throw std::invalid_argument("null base field");
    if (n == 0)
        throw std::invalid_argument("extension degree must be >= 1");
    PolyRing ring(base);
    Poly mod;
    if (modulus) {
        mod = *modulus;
        if (mod.degree() != static_cast<int>(n) || mod.lead() != 1)
            throw NotIrreducibleError("modulus must be monic of degree n");
        for (BaseElt c : mod.c)
            if (c >= base->q())
                throw std::invalid_argument("modulus coefficient out of range");
        if (!ring.is_irreducible(mod))
            throw NotIrreducibleError("modulus is reducible over F_q");
    } else {
        mod = ring.smallest_irreducible(n);
    }
    auto ctx = std::shared_ptr<ExtCtx>(new ExtCtx(std::move(base), n, std::move(mod)));

    // columns of the q-power map: x^(i*q) mod M, built as powers of x^q
    const std::uint64_t q = ctx->base().q();
    Poly xq = ctx->ring().pow_mod(Poly::x(), q, ctx->modulus());
    std::vector<std::vector<BaseElt>> cols(n);
    Poly acc = Poly::constant(1);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<BaseElt> col = acc.c;
        col.resize(n, 0);
        cols[i] = std::move(col);
        if (i + 1 < n)
            acc = ctx->ring().rem(ctx->ring().mul(acc, xq), ctx->modulus());
    }
    ctx->frob_cols_ = std::move(cols);

    // trace row: Tr(x^i)
    std::vector<BaseElt> trow(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<BaseElt> unit(n, 0);
        unit[i] = 1;
        FieldElem xi = ctx->element(std::move(unit));
        FieldElem sum = xi;
        FieldElem conj = xi;
        for (std::uint32_t t = 1; t < n; ++t) {
            conj = ctx->frobenius(conj);
            sum = ctx->add(sum, conj);
        }
        for (std::uint32_t r = 1; r < n; ++r)
            if (sum.coeffs()[r] != 0)
                throw std::logic_error("trace basis row not in base field");
        trow[i] = sum.coeffs()[0];
    }
    ctx->trace_row_ = std::move(trow);
    return ctx;
}

} // namespace fqdepth
