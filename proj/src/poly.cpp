#include "fqdepth/poly.hpp"

#include "fqdepth/errors.hpp"
#include "fqdepth/ints.hpp"

#include <algorithm>

namespace fqdepth {

Poly Poly::monomial(BaseElt a, std::uint32_t j)
{
    if (a == 0)
        return Poly{};
    std::vector<BaseElt> c(j + 1, 0);
    c[j] = a;
    return Poly(std::move(c));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const
{
    std::vector<BaseElt> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = F_->add(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const
{
    std::vector<BaseElt> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = F_->sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly PolyRing::neg(const Poly& a) const
{
    std::vector<BaseElt> out(a.c.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = F_->neg(a.c[i]);
    return Poly(std::move(out));
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const
{
    if (a.is_zero() || b.is_zero())
        return Poly{};
    std::vector<BaseElt> out(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out[i + j] = F_->add(out[i + j], F_->mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(out));
}

Poly PolyRing::mul_scalar(const Poly& a, BaseElt s) const
{
    if (s == 0)
        return Poly{};
    std::vector<BaseElt> out(a.c.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = F_->mul(a.c[i], s);
    return Poly(std::move(out));
}

Poly PolyRing::shift(const Poly& a, std::uint32_t j) const
{
    if (a.is_zero() || j == 0)
        return a;
    std::vector<BaseElt> out(a.c.size() + j, 0);
    std::copy(a.c.begin(), a.c.end(), out.begin() + j);
    return Poly(std::move(out));
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const
{
    if (b.is_zero())
        throw DivisionByZeroError("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly{}, a};
    const BaseElt lead_inv = F_->inv(b.lead());
    std::vector<BaseElt> rem = a.c;
    std::vector<BaseElt> quo(a.c.size() - b.c.size() + 1, 0);
    for (int i = static_cast<int>(rem.size()) - 1;
         i >= static_cast<int>(b.c.size()) - 1; --i) {
        BaseElt c = F_->mul(rem[i], lead_inv);
        if (c == 0)
            continue;
        int shift = i - b.degree();
        quo[shift] = c;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            rem[shift + j] = F_->sub(rem[shift + j], F_->mul(c, b.c[j]));
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly PolyRing::gcd(Poly a, Poly b) const
{
    while (!b.is_zero()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly PolyRing::extended_gcd(const Poly& a, const Poly& b, Poly& u, Poly& v) const
{
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(1), u1 = Poly{};
    Poly v0 = Poly{}, v1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [quo, r2] = divmod(r0, r1);
        Poly u2 = sub(u0, mul(quo, u1));
        Poly v2 = sub(v0, mul(quo, v1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) {
        u = Poly{};
        v = Poly{};
        return Poly{};
    }
    BaseElt s = F_->inv(r0.lead());
    u = mul_scalar(u0, s);
    v = mul_scalar(v0, s);
    return mul_scalar(r0, s);
}

Poly PolyRing::monic(const Poly& a) const
{
    if (a.is_zero() || a.lead() == 1)
        return a;
    return mul_scalar(a, F_->inv(a.lead()));
}

Poly PolyRing::pow_mod(Poly base, Exp exp, const Poly& mod) const
{
    base = rem(base, mod);
    Poly r = rem(Poly::constant(1), mod);
    while (exp > 0) {
        if (exp & 1)
            r = rem(mul(r, base), mod);
        base = rem(mul(base, base), mod);
        exp >>= 1;
    }
    return r;
}

BaseElt PolyRing::eval(const Poly& a, BaseElt x0) const
{
    BaseElt acc = 0;
    for (std::size_t i = a.c.size(); i-- > 0;)
        acc = F_->add(F_->mul(acc, x0), a.c[i]);
    return acc;
}

Poly PolyRing::x_pow_minus_one(std::uint32_t n) const
{
    std::vector<BaseElt> c(n + 1, 0);
    c[0] = F_->neg(1);
    c[n] = 1;
    return Poly(std::move(c));
}

Poly PolyRing::pow(const Poly& a, std::uint32_t e) const
{
    Poly r = Poly::constant(1);
    Poly base = a;
    while (e > 0) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool PolyRing::is_irreducible(const Poly& f) const
{
    const int df = f.degree();
    if (df < 1)
        return false;
    if (df == 1)
        return true;
    for (int d = 1; d <= df / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= F_->q();
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly cand = from_code(code, static_cast<std::uint32_t>(d));
            cand.c.resize(d + 1, 0);
            cand.c[d] = 1;
            if (rem(f, cand).is_zero())
                return false;
        }
    }
    return true;
}

Poly PolyRing::smallest_irreducible(std::uint32_t degree) const
{
    if (degree == 0)
        throw std::invalid_argument("degree must be >= 1");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < degree; ++i) {
        count *= F_->q();
        if (count > (1ull << 40))
            throw CapExceededError("irreducible search space too large");
    }
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly cand = from_code(code, degree);
        cand.c.resize(degree + 1, 0);
        cand.c[degree] = 1;
        if (is_irreducible(cand))
            return cand;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

Poly PolyRing::from_code(std::uint64_t code, std::uint32_t len) const
{
    std::vector<BaseElt> c(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        c[i] = static_cast<BaseElt>(code % F_->q());
        code /= F_->q();
    }
    return Poly(std::move(c));
}

std::uint64_t PolyRing::to_code(const Poly& a) const
{
    std::uint64_t code = 0;
    for (std::size_t i = a.c.size(); i-- > 0;)
        code = code * F_->q() + a.c[i];
    return code;
}

std::string PolyRing::to_string(const Poly& a) const
{
    if (a.is_zero())
        return "0";
    std::string s;
    for (int i = a.degree(); i >= 0; --i) {
        BaseElt c = a.c[i];
        if (c == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1)
                s += std::to_string(c) + "*";
            s += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace fqdepth
