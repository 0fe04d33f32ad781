#pragma once

#include "fqdepth/cyclotomic.hpp"
#include "fqdepth/ext.hpp"
#include "fqdepth/linalg.hpp"

#include <cstdint>
#include <vector>

namespace fqdepth {

/// f acting on beta through the Frobenius: sum of a_i * beta^(q^i).
FieldElem circle_action(const Poly& f, const FieldElem& beta);

/// Minimal-degree monic f with f acting to zero on beta, found as the lowest
/// linear dependency among beta, beta^q, ..., beta^(q^n). Always divides
/// x^n - 1; the zero element gets the constant 1.
Poly annihilator(const FieldElem& beta);

/// Rank test only: the n conjugates are linearly independent over F_q.
bool normal_by_rank(const FieldElem& beta);

/// Normality, computed both by conjugate rank and by the annihilator degree;
/// the two routes are asserted to agree.
bool is_normal(const FieldElem& beta);

/// Codes of the first `count` normal elements in canonical element order.
std::vector<std::uint64_t> first_normal_codes(const ExtCtx& ctx, std::size_t count);

/// Which value Tr(alpha) is scaled to. NOverTau fixes Tr(alpha) = n/tau
/// (i.e. n0 mod p); TauOverN fixes the reciprocal and exists so the shift
/// behaviour of normal elements can be probed under both conventions.
enum class TraceTarget { NOverTau, TauOverN };

/// A normal element together with the change of basis between the power
/// basis and the normal basis, realizing the module isomorphism
/// F_q[x]/(x^n-1) -> F_{q^n}, g -> g acting on alpha.
struct NormalBasisMap {
    ExtCtxPtr ctx;
    FieldElem alpha;
    Mat basis;     // column i: coordinates of alpha^(q^i)
    Mat basis_inv;

    FieldElem phi(const Poly& g) const;
    Poly phi_inv(const FieldElem& beta) const;
};

/// First normal element in canonical order, rescaled to the trace target.
NormalBasisMap find_normal_element(const ExtCtxPtr& ctx,
                                   TraceTarget target = TraceTarget::NOverTau);

/// Build the map from a caller-chosen element (must be normal); the element
/// is rescaled to the trace target like the canonical one.
NormalBasisMap normal_basis_from_code(const ExtCtxPtr& ctx, std::uint64_t code,
                                      TraceTarget target = TraceTarget::NOverTau);

/// CRT idempotents of F_q[x]/(x^n-1) relative to the primary factorization:
/// e_i = 1 mod f_i^tau and 0 mod f_j^tau for j != i. Computed once per
/// factorization and reused.
struct PrimaryDecomposition {
    CyclotomicFactorization fact;
    std::vector<Poly> idempotents;
    std::vector<Poly> factor_powers; // f_i^tau
};

PrimaryDecomposition make_primary_decomposition(const PolyRing& ring,
                                                const CyclotomicFactorization& fact);

/// Components beta_i with beta = sum beta_i and f_i^tau killing beta_i.
std::vector<FieldElem> primary_components(const NormalBasisMap& map,
                                          const PrimaryDecomposition& dec,
                                          const FieldElem& beta);

/// The five equivalent normality conditions, each evaluated independently.
struct NormalEquivalenceRecord {
    bool conjugate_rank;          // conjugates linearly independent
    bool residue_coprime;         // gcd(x^n-1, g) = 1
    bool components_coprime;      // gcd(f_i, g_i) = 1 for all i
    bool component_annihilators;  // ann of beta_i is f_i^tau for all i
    bool component_kernel_layers; // f_i^tau kills beta_i, f_i^(tau-1) does not

    bool all_equal() const
    {
        return conjugate_rank == residue_coprime && residue_coprime == components_coprime &&
               components_coprime == component_annihilators &&
               component_annihilators == component_kernel_layers;
    }
};

NormalEquivalenceRecord check_normal_equivalences(const NormalBasisMap& map,
                                                  const PrimaryDecomposition& dec,
                                                  const FieldElem& beta);

} // namespace fqdepth
