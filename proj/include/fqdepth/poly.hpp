#pragma once

#include "fqdepth/field.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fqdepth {

/// Dense polynomial over F_q, index = degree. Always normalized: no trailing
/// zero coefficients, so the zero polynomial is the empty vector and
/// degree() == -1 stands in for degree -infinity.
struct Poly {
    std::vector<BaseElt> c;

    Poly() = default;
    explicit Poly(std::vector<BaseElt> coeffs) : c(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(BaseElt a) { return a == 0 ? Poly{} : Poly{{a}}; }
    static Poly x() { return Poly{{0, 1}}; }
    /// c * x^j
    static Poly monomial(BaseElt a, std::uint32_t j);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    BaseElt coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    BaseElt lead() const { return c.empty() ? 0 : c.back(); }

    void normalize()
    {
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }

    bool operator==(const Poly&) const = default;

private:
    Poly(std::initializer_list<BaseElt> init) : c(init) { normalize(); }
};

/// Arithmetic in F_q[x]. Pure functions over immutable inputs; the ring only
/// carries the coefficient field.
class PolyRing {
public:
    // exponent type for pow_mod; wide so root-of-unity searches in F_{q^d}
    // never overflow
    using Exp = unsigned __int128;

    explicit PolyRing(FieldCtxPtr field) : F_(std::move(field)) {}

    const FieldCtx& field() const { return *F_; }
    const FieldCtxPtr& field_ptr() const { return F_; }

    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly neg(const Poly& a) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly mul_scalar(const Poly& a, BaseElt s) const;
    Poly shift(const Poly& a, std::uint32_t j) const; // a * x^j

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
    Poly rem(const Poly& a, const Poly& b) const { return divmod(a, b).second; }

    /// Monic gcd; gcd(0, 0) = 0 by convention.
    Poly gcd(Poly a, Poly b) const;
    /// g = u*a + v*b with g the monic gcd.
    Poly extended_gcd(const Poly& a, const Poly& b, Poly& u, Poly& v) const;

    Poly monic(const Poly& a) const;
    Poly pow_mod(Poly base, Exp exp, const Poly& mod) const;
    BaseElt eval(const Poly& a, BaseElt x0) const;

    /// x^n - 1
    Poly x_pow_minus_one(std::uint32_t n) const;
    Poly pow(const Poly& a, std::uint32_t e) const;

    bool is_irreducible(const Poly& f) const;
    /// Lexicographically smallest monic irreducible of the given degree
    /// (coefficient vectors read low-degree-first as base-q integers).
    Poly smallest_irreducible(std::uint32_t degree) const;

    /// Residues of degree < len as base-q codes, canonical element order.
    Poly from_code(std::uint64_t code, std::uint32_t len) const;
    std::uint64_t to_code(const Poly& a) const;

    std::string to_string(const Poly& a) const;

private:
    FieldCtxPtr F_;
};

} // namespace fqdepth
