#include "fqdepth/field.hpp"

#include "fqdepth/ints.hpp"

#include <cassert>

namespace fqdepth {
namespace {

// Dense coefficient vectors over F_p, index = degree. Only used for the
// internal arithmetic of extension contexts and modulus validation; the
// general-purpose polynomial layer over arbitrary F_q lives in poly.cpp.
using Digs = std::vector<std::uint32_t>;

void trim(Digs& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int deg(const Digs& a) { return static_cast<int>(a.size()) - 1; }

std::uint32_t int_inv_mod_p(std::uint32_t a, std::uint32_t p)
{
    // extended Euclid on integers
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t qq = r / new_r;
        std::swap(t -= qq * new_t, new_t);
        std::swap(r -= qq * new_r, new_r);
    }
    if (r != 1)
        throw DivisionByZeroError("inverse of non-unit mod p");
    return static_cast<std::uint32_t>(((t % p) + p) % p);
}

Digs dig_mul(const Digs& a, const Digs& b, std::uint32_t p)
{
    if (a.empty() || b.empty())
        return {};
    Digs out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    trim(out);
    return out;
}

// a mod m, with m monic
Digs dig_rem_monic(Digs a, const Digs& m, std::uint32_t p)
{
    const int dm = deg(m);
    assert(dm >= 0 && m.back() == 1);
    while (deg(a) >= dm) {
        std::uint32_t c = a.back();
        int shift = deg(a) - dm;
        if (c != 0)
            for (int j = 0; j <= dm; ++j) {
                std::uint64_t sub = std::uint64_t(c) * m[j] % p;
                std::uint32_t& tgt = a[j + shift];
                tgt = static_cast<std::uint32_t>((tgt + p - sub) % p);
            }
        a.pop_back();
        trim(a);
    }
    return a;
}

bool dig_is_irreducible(const Digs& f, std::uint32_t p)
{
    const int df = deg(f);
    if (df < 1)
        return false;
    if (df == 1)
        return true;
    // trial division by every monic polynomial of degree 1..df/2
    for (int d = 1; d <= df / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Digs cand(d + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            cand[d] = 1;
            if (dig_rem_monic(f, cand, p).empty())
                return false;
        }
    }
    return true;
}

Digs dig_smallest_irreducible(std::uint32_t p, std::uint32_t k)
{
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i)
        count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Digs cand(k + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < k; ++i) {
            cand[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        cand[k] = 1;
        if (dig_is_irreducible(cand, p))
            return cand;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

} // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> mod)
    : p_(p), k_(k), q_(1), mod_(std::move(mod))
{
    for (std::uint32_t i = 0; i < k_; ++i) {
        q_ *= p_;
        if (q_ > kMaxOrder)
            throw OverflowError("field order exceeds supported maximum");
    }
}

void FieldCtx::build_tables()
{
    if (q_ > 512)
        return;
    const std::size_t q = static_cast<std::size_t>(q_);
    neg_.resize(q);
    inv_.resize(q);
    add_.resize(q * q);
    mul_.resize(q * q);
    for (std::size_t a = 0; a < q; ++a) {
        neg_[a] = raw_neg(static_cast<BaseElt>(a));
        inv_[a] = a == 0 ? 0 : raw_inv(static_cast<BaseElt>(a));
        for (std::size_t b = 0; b < q; ++b) {
            add_[a * q + b] = raw_add(static_cast<BaseElt>(a), static_cast<BaseElt>(b));
            mul_[a * q + b] = raw_mul(static_cast<BaseElt>(a), static_cast<BaseElt>(b));
        }
    }
}

BaseElt FieldCtx::raw_add(BaseElt a, BaseElt b) const
{
    if (k_ == 1)
        return (a + b) % p_;
    BaseElt out = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += static_cast<BaseElt>(((da + db) % p_) * scale);
        scale *= p_;
    }
    return out;
}

BaseElt FieldCtx::raw_neg(BaseElt a) const
{
    if (k_ == 1)
        return a == 0 ? 0 : p_ - a;
    BaseElt out = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t d = a % p_;
        a /= p_;
        out += static_cast<BaseElt>((d == 0 ? 0 : p_ - d) * scale);
        scale *= p_;
    }
    return out;
}

BaseElt FieldCtx::raw_mul(BaseElt a, BaseElt b) const
{
    if (k_ == 1)
        return static_cast<BaseElt>(std::uint64_t(a) * b % p_);
    Digs da = digits(a), db = digits(b);
    trim(da);
    trim(db);
    Digs prod = dig_rem_monic(dig_mul(da, db, p_), mod_, p_);
    prod.resize(k_, 0);
    return from_digits(prod);
}

BaseElt FieldCtx::raw_inv(BaseElt a) const
{
    if (a == 0)
        throw DivisionByZeroError("inverse of zero");
    if (k_ == 1)
        return int_inv_mod_p(a, p_);
    // extended Euclid over F_p[y] against the modulus
    Digs r0 = mod_, r1 = digits(a);
    trim(r1);
    Digs t0{}, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        Digs quo;
        Digs rem = r0;
        std::uint32_t lead_inv = int_inv_mod_p(r1.back(), p_);
        while (deg(rem) >= deg(r1)) {
            int shift = deg(rem) - deg(r1);
            std::uint32_t c = static_cast<std::uint32_t>(
                std::uint64_t(rem.back()) * lead_inv % p_);
            if (static_cast<int>(quo.size()) < shift + 1)
                quo.resize(shift + 1, 0);
            quo[shift] = static_cast<std::uint32_t>((quo[shift] + c) % p_);
            for (int j = 0; j <= deg(r1); ++j) {
                std::uint64_t sub = std::uint64_t(c) * r1[j] % p_;
                std::uint32_t& tgt = rem[j + shift];
                tgt = static_cast<std::uint32_t>((tgt + p_ - sub) % p_);
            }
            trim(rem);
            if (rem.empty())
                break;
        }
        Digs t2 = t0;
        Digs qt = dig_mul(quo, t1, p_);
        t2.resize(std::max(t2.size(), qt.size()), 0);
        for (std::size_t i = 0; i < qt.size(); ++i)
            t2[i] = static_cast<std::uint32_t>((t2[i] + p_ - qt[i] % p_) % p_);
        trim(t2);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    // r0 = gcd(mod, a); must be a nonzero constant
    if (deg(r0) != 0)
        throw std::logic_error("modulus not irreducible: gcd with element nontrivial");
    std::uint32_t scale = int_inv_mod_p(r0[0], p_);
    Digs out = t0;
    for (auto& c : out)
        c = static_cast<std::uint32_t>(std::uint64_t(c) * scale % p_);
    out = dig_rem_monic(out, mod_, p_);
    out.resize(k_, 0);
    return from_digits(out);
}

BaseElt FieldCtx::inv(BaseElt a) const
{
    if (a == 0)
        throw DivisionByZeroError("inverse of zero");
    return inv_.empty() ? raw_inv(a) : inv_[a];
}

BaseElt FieldCtx::pow(BaseElt a, std::uint64_t e) const
{
    BaseElt r = 1;
    while (e > 0) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

BaseElt FieldCtx::embed_int(std::int64_t c) const
{
    std::int64_t m = c % static_cast<std::int64_t>(p_);
    if (m < 0)
        m += p_;
    return static_cast<BaseElt>(m);
}

std::vector<std::uint32_t> FieldCtx::digits(BaseElt a) const
{
    std::vector<std::uint32_t> d(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

BaseElt FieldCtx::from_digits(const std::vector<std::uint32_t>& d) const
{
    BaseElt out = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < k_ && i < d.size(); ++i) {
        out += static_cast<BaseElt>((d[i] % p_) * scale);
        scale *= p_;
    }
    return out;
}

FieldCtxPtr make_prime_field(std::uint32_t p)
{
    if (!is_prime(p))
        throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx(p, 1, {}));
    ctx->build_tables();
    return ctx;
}

FieldCtxPtr make_base_field(std::uint32_t p, std::uint32_t k,
                            const std::optional<std::vector<std::uint32_t>>& modulus)
{
    if (!is_prime(p))
        throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
    if (k == 0)
        throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        order *= p;
        if (order > FieldCtx::kMaxOrder)
            throw OverflowError("field order exceeds supported maximum");
    }
    if (k == 1) {
        if (modulus && !(modulus->size() == 2 && (*modulus)[1] == 1))
            throw NotIrreducibleError("modulus for a prime field must be linear monic");
        return make_prime_field(p);
    }
    Digs mod;
    if (modulus) {
        mod = *modulus;
        trim(mod);
        if (deg(mod) != static_cast<int>(k) || mod.back() != 1)
            throw NotIrreducibleError("modulus must be monic of degree k");
        for (auto c : mod)
            if (c >= p)
                throw std::invalid_argument("modulus coefficient out of range");
        if (!dig_is_irreducible(mod, p))
            throw NotIrreducibleError("modulus is reducible over F_p");
    } else {
        mod = dig_smallest_irreducible(p, k);
    }
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx(p, k, std::move(mod)));
    ctx->build_tables();
    return ctx;
}

FieldCtxPtr make_base_field_q(std::uint64_t q)
{
    auto pp = prime_power_decompose(q);
    if (!pp)
        throw NonPrimeError("q = " + std::to_string(q) + " is not a prime power");
    if (pp->p > FieldCtx::kMaxOrder)
        throw OverflowError("field order exceeds supported maximum");
    return make_base_field(static_cast<std::uint32_t>(pp->p), pp->k);
}

} // namespace fqdepth
