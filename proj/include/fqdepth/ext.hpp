#pragma once

#include "fqdepth/ints.hpp"
#include "fqdepth/poly.hpp"

#include <memory>
#include <optional>

namespace fqdepth {

class ExtCtx;
using ExtCtxPtr = std::shared_ptr<const ExtCtx>;

/// Element of F_{q^n}: coefficient vector over F_q in the power basis of the
/// context modulus, plus a handle to the context it belongs to. Elements from
/// different contexts never mix (CtxMismatchError).
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(ExtCtxPtr ctx, std::vector<BaseElt> coeffs);

    const std::vector<BaseElt>& coeffs() const { return c_; }
    const ExtCtxPtr& ctx() const { return ctx_; }
    bool is_zero() const;

    /// Canonical code: coefficients read as a base-q integer.
    std::uint64_t code() const;

    bool operator==(const FieldElem& other) const { return c_ == other.c_; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem operator-() const;

private:
    ExtCtxPtr ctx_;
    std::vector<BaseElt> c_;
};

/// Immutable description of F_{q^n} = F_q[x]/(M) for a monic irreducible M of
/// degree n. Carries the derived quantities e = v_p(n), tau = p^e, n0 = n/tau
/// used throughout the factorization and counting layers, plus the
/// precomputed matrix of the Frobenius q-power map.
class ExtCtx : public std::enable_shared_from_this<ExtCtx> {
public:
    const FieldCtx& base() const { return *base_; }
    const FieldCtxPtr& base_ptr() const { return base_; }
    const PolyRing& ring() const { return ring_; }
    std::uint32_t n() const { return n_; }
    std::uint64_t q() const { return base_->q(); }
    std::uint32_t p() const { return base_->p(); }
    std::uint32_t e() const { return e_; }
    std::uint32_t tau() const { return tau_; }
    std::uint32_t n0() const { return n0_; }
    const Poly& modulus() const { return modulus_; }

    /// q^n as an exact integer.
    BigCount order() const { return order_; }
    /// q^n as u64; throws OverflowError when it does not fit.
    std::uint64_t order_u64() const;

    bool same_field(const ExtCtx& other) const
    {
        return n_ == other.n_ && modulus_ == other.modulus_ &&
               base_->same_field(*other.base_);
    }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem element(std::vector<BaseElt> coeffs) const;
    FieldElem from_code(std::uint64_t code) const;
    FieldElem embed_base(BaseElt a) const;
    FieldElem embed_int(std::int64_t c) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul_base(const FieldElem& a, BaseElt s) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& a, std::uint64_t exp) const;

    /// a^q via the precomputed matrix of the q-power map.
    FieldElem frobenius(const FieldElem& a) const;
    FieldElem frobenius_iter(const FieldElem& a, std::uint32_t times) const;

    /// Relative trace to F_q: sum of the n Galois conjugates.
    BaseElt trace_to_base(const FieldElem& a) const;

private:
    friend ExtCtxPtr make_ext_field(FieldCtxPtr, std::uint32_t,
                                    const std::optional<Poly>&);

    ExtCtx(FieldCtxPtr base, std::uint32_t n, Poly modulus);
    void check(const FieldElem& a) const;

    FieldCtxPtr base_;
    PolyRing ring_;
    std::uint32_t n_;
    Poly modulus_;
    std::uint32_t e_, tau_, n0_;
    BigCount order_;
    std::vector<std::vector<BaseElt>> frob_cols_; // column i: coords of x^(i*q)
    std::vector<BaseElt> trace_row_;              // Tr(x^i)
};

/// F_{q^n} over the given base. When no modulus is supplied the
/// lexicographically smallest monic irreducible of degree n is selected, so
/// every run (and every language binding) sees the same field presentation.
ExtCtxPtr make_ext_field(FieldCtxPtr base, std::uint32_t n,
                         const std::optional<Poly>& modulus = {});

} // namespace fqdepth
