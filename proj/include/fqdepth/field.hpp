#pragma once

#include "fqdepth/errors.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fqdepth {

/// Code of an element of F_q. Codes enumerate the field in canonical order:
/// the coefficient vector over F_p read as a base-p integer, low degree least
/// significant. For a prime field the code is just the residue.
using BaseElt = std::uint32_t;

/// Immutable description of a base field F_q, q = p^k. All element arithmetic
/// happens on codes through this context. Construction verifies primality of
/// p and irreducibility of the modulus by trial division; q is capped so that
/// codes stay exact.
class FieldCtx {
public:
    static constexpr std::uint64_t kMaxOrder = 1ull << 20;

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint64_t q() const { return q_; }

    /// Modulus coefficients over F_p, index = degree, monic of degree k.
    /// Empty for a prime field.
    const std::vector<std::uint32_t>& modulus_digits() const { return mod_; }

    bool same_field(const FieldCtx& other) const
    {
        return p_ == other.p_ && k_ == other.k_ && mod_ == other.mod_;
    }

    BaseElt zero() const { return 0; }
    BaseElt one() const { return 1; }

    BaseElt add(BaseElt a, BaseElt b) const
    {
        return add_.empty() ? raw_add(a, b) : add_[std::size_t(a) * q_ + b];
    }
    BaseElt neg(BaseElt a) const { return neg_.empty() ? raw_neg(a) : neg_[a]; }
    BaseElt sub(BaseElt a, BaseElt b) const { return add(a, neg(b)); }
    BaseElt mul(BaseElt a, BaseElt b) const
    {
        return mul_.empty() ? raw_mul(a, b) : mul_[std::size_t(a) * q_ + b];
    }
    BaseElt inv(BaseElt a) const;
    BaseElt div(BaseElt a, BaseElt b) const { return mul(a, inv(b)); }
    BaseElt pow(BaseElt a, std::uint64_t e) const;

    /// Canonical embedding of an integer: c mod p copies of 1.
    BaseElt embed_int(std::int64_t c) const;

    /// True when the element lies in the prime subfield F_p.
    bool in_prime_subfield(BaseElt a) const { return a < p_; }

    /// Coefficients over F_p of the element, length k.
    std::vector<std::uint32_t> digits(BaseElt a) const;
    BaseElt from_digits(const std::vector<std::uint32_t>& d) const;

    std::string to_string(BaseElt a) const { return std::to_string(a); }

private:
    friend std::shared_ptr<const FieldCtx> make_prime_field(std::uint32_t);
    friend std::shared_ptr<const FieldCtx> make_base_field(
        std::uint32_t, std::uint32_t, const std::optional<std::vector<std::uint32_t>>&);

    FieldCtx(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> mod);
    void build_tables();

    BaseElt raw_add(BaseElt a, BaseElt b) const;
    BaseElt raw_neg(BaseElt a) const;
    BaseElt raw_mul(BaseElt a, BaseElt b) const;
    BaseElt raw_inv(BaseElt a) const;

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint64_t q_;
    std::vector<std::uint32_t> mod_;
    std::vector<BaseElt> add_, mul_, neg_, inv_;
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// F_p for prime p. Throws NonPrimeError otherwise.
FieldCtxPtr make_prime_field(std::uint32_t p);

/// F_{p^k}. When no modulus is supplied the lexicographically smallest monic
/// irreducible of degree k over F_p is chosen (coefficient vectors compared
/// low-degree-first as integers), so the context is identical across runs.
FieldCtxPtr make_base_field(std::uint32_t p, std::uint32_t k,
                            const std::optional<std::vector<std::uint32_t>>& modulus = {});

/// F_q from its order; q must be a prime power.
FieldCtxPtr make_base_field_q(std::uint64_t q);

} // namespace fqdepth
