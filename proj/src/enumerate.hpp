#pragma once

// Shared residue-space enumeration engine. Walks all residues g of degree < n
// in canonical code order while incrementally maintaining g mod f_i for every
// irreducible factor f_i of x^n - 1, so each step costs O(sum deg f_i) field
// operations. Classification predicates are membership tests on the residue
// codes, which makes the exhaustive counting loops cheap enough for the
// default cap.

#include "fqdepth/cyclotomic.hpp"
#include "fqdepth/errors.hpp"
#include "fqdepth/ext.hpp"
#include "fqdepth/poly.hpp"

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace fqdepth::detail {

class ResidueWalker {
public:
    ResidueWalker(const PolyRing& ring, const CyclotomicFactorization& fact)
        : F_(&ring.field()), q_(F_->q()), n_(fact.n)
    {
        facs_.reserve(fact.factors.size());
        for (const auto& factor : fact.factors) {
            Fac fac;
            fac.d = factor.degree;
            fac.qpow.resize(fac.d, 1);
            for (std::uint32_t t = 1; t < fac.d; ++t)
                fac.qpow[t] = fac.qpow[t - 1] * q_;
            fac.xpow.resize(n_);
            Poly acc = ring.rem(Poly::constant(1), factor.f);
            for (std::uint32_t j = 0; j < n_; ++j) {
                std::vector<BaseElt> coeffs = acc.c;
                coeffs.resize(fac.d, 0);
                fac.xpow[j] = std::move(coeffs);
                if (j + 1 < n_)
                    acc = ring.rem(ring.mul(acc, Poly::x()), factor.f);
            }
            fac.rc.assign(fac.d, 0);
            facs_.push_back(std::move(fac));
        }
        digits_.assign(n_, 0);
    }

    std::size_t factor_count() const { return facs_.size(); }
    std::uint64_t residue_code(std::size_t i) const { return facs_[i].rcode; }

    /// Position the walker on an arbitrary residue code.
    void seek(std::uint64_t code)
    {
        std::uint64_t c = code;
        for (std::uint32_t j = 0; j < n_; ++j) {
            digits_[j] = static_cast<BaseElt>(c % q_);
            c /= q_;
        }
        for (auto& fac : facs_) {
            fac.rc.assign(fac.d, 0);
            fac.rcode = 0;
            for (std::uint32_t j = 0; j < n_; ++j)
                if (digits_[j] != 0)
                    add_multiple(fac, j, digits_[j]);
        }
    }

    /// Advance to the next residue in canonical order.
    void step()
    {
        for (std::uint32_t j = 0; j < n_; ++j) {
            BaseElt oldv = digits_[j];
            BaseElt newv = oldv + 1 < q_ ? oldv + 1 : 0;
            digits_[j] = newv;
            BaseElt delta = F_->sub(newv, oldv);
            for (auto& fac : facs_)
                add_multiple(fac, j, delta);
            if (newv != 0)
                return;
        }
    }

private:
    struct Fac {
        std::uint32_t d = 0;
        std::vector<std::vector<BaseElt>> xpow; // x^j mod f, padded to length d
        std::vector<std::uint64_t> qpow;
        std::vector<BaseElt> rc;
        std::uint64_t rcode = 0;
    };

    void add_multiple(Fac& fac, std::uint32_t j, BaseElt scale)
    {
        const auto& xp = fac.xpow[j];
        for (std::uint32_t t = 0; t < fac.d; ++t) {
            if (xp[t] == 0)
                continue;
            BaseElt nv = F_->add(fac.rc[t], F_->mul(scale, xp[t]));
            fac.rcode += (std::uint64_t(nv) - fac.rc[t]) * fac.qpow[t];
            fac.rc[t] = nv;
        }
    }

    const FieldCtx* F_;
    std::uint64_t q_;
    std::uint32_t n_;
    std::vector<Fac> facs_;
    std::vector<BaseElt> digits_;
};

struct EnumCounts {
    std::uint64_t normal = 0;
    std::uint64_t depth = 0;
    std::uint64_t sociable = 0;

    EnumCounts& operator+=(const EnumCounts& o)
    {
        normal += o.normal;
        depth += o.depth;
        sociable += o.sociable;
        return *this;
    }
};

/// Count residues whose factor-residues avoid 0 (normal), the embedded
/// constants below b (depth), and optionally the per-factor forbidden sets
/// (sociable). `forbidden` may be empty to skip the sociable count.
EnumCounts count_residues(const PolyRing& ring, const CyclotomicFactorization& fact,
                          std::uint32_t b,
                          const std::vector<std::vector<char>>& forbidden,
                          std::uint64_t begin, std::uint64_t end);

/// Same, split across `threads` contiguous chunks; chunk results are merged
/// in order, so the totals do not depend on the thread count.
EnumCounts count_residues_parallel(const PolyRing& ring,
                                   const CyclotomicFactorization& fact, std::uint32_t b,
                                   const std::vector<std::vector<char>>& forbidden,
                                   std::uint64_t total, unsigned threads);

/// Enforce opt.cap against the residue-space size; returns it as u64.
std::uint64_t checked_total(const ExtCtx& ctx, std::uint64_t cap);

} // namespace fqdepth::detail
