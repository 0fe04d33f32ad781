#pragma once

#include "fqdepth/depth.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fqdepth {

/// The four equivalent sociability conditions, evaluated independently:
/// conjugate-wise depth on the element side, shifted-residue gcds against
/// x^n - 1, per-factor gcds of the component residues, and forbidden-value
/// membership at the factor roots.
struct TfaeRecord {
    bool conjugates_have_depth;
    bool shifted_residues_coprime;
    bool component_shifts_coprime;
    bool root_values_allowed;

    bool all_equal() const
    {
        return conjugates_have_depth == shifted_residues_coprime &&
               shifted_residues_coprime == component_shifts_coprime &&
               component_shifts_coprime == root_values_allowed;
    }
};

/// Every conjugate of beta has alpha-depth b. Computed through
/// gcd(x^n-1, g - c x^j) = 1 for all j < n, c < b.
bool is_sociable(const NormalBasisMap& map, const CyclotomicFactorization& fact,
                 const FieldElem& beta, std::uint32_t b);

TfaeRecord check_tfae_sociable(const NormalBasisMap& map,
                               const CyclotomicFactorization& fact,
                               const FieldElem& beta, std::uint32_t b);

/// Per-factor forbidden residue sets {c * theta^j : c < b, j < n}, realized
/// as actual elements of F_q[x]/(f_i) and deduplicated, indexed by residue
/// code. Shared by the classifier and the membership condition.
std::vector<std::vector<char>> forbidden_value_sets(const PolyRing& ring,
                                                    const CyclotomicFactorization& fact,
                                                    std::uint32_t b);

struct SociabilityReport {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t b = 0;
    BigCount total = 0;
    BigCount normal = 0;
    BigCount depth_b = 0;
    BigCount sociable = 0;
    BigCount lonely = 0;

    /// Highest-precedence applicable closed form, or "none".
    std::string formula_name = "none";
    std::optional<BigCount> formula_value;
    /// Some applicable closed form disagrees with the enumerated count.
    bool mismatch = false;
    /// Every applicable closed form, in dispatch order.
    std::vector<std::pair<std::string, BigCount>> applicable_formulas;

    /// Product over factors assuming the maximal number of distinct
    /// forbidden values; degenerate when a factor clamps at zero.
    BigCount distinctness_bound = 0;
    bool bound_degenerate = false;

    /// Exact product from the materialized forbidden-set sizes; always equals
    /// the enumerated sociable count (asserted).
    BigCount exact_product = 0;
};

/// Exhaustive enumeration over all q^n residues in canonical order, plus
/// evaluation of every applicable closed-form count.
SociabilityReport classify_all(const ExtCtx& ctx, std::uint32_t b,
                               const EnumOptions& opt = {});

/// Product assuming all n(b-1) shifted root powers are distinct: each factor
/// contributes q^deg - n(b-1) - 1, clamped at zero. Numerically this bounds
/// the sociable count from below (the true forbidden sets are never larger).
BigCount count_sociable_distinctness_bound(const CyclotomicFactorization& fact,
                                           std::uint32_t b,
                                           bool* degenerate = nullptr);

/// Requires gcd(n, q-1) = 1: per factor q^deg - (b-1)*ord(theta_i) - 1,
/// scaled by q^(n(tau-1)/tau).
BigCount count_sociable_coprime_order(const CyclotomicFactorization& fact, std::uint32_t b);

/// Requires n = q^s: q^(q^s - q^(s-1)) * (q - b).
BigCount count_sociable_n_qs(std::uint64_t q, std::uint32_t s, std::uint32_t b);

/// Requires n prime, n != p, n not dividing q-1:
/// (q - b) * prod_{i>=2} (q^deg - (b-1)n - 1).
BigCount count_sociable_n_prime(const CyclotomicFactorization& fact, std::uint32_t b);

/// Requires n | q-1 and b = 2: prod_{i=1..n} (q - n/gcd(i,n) - 1).
BigCount count_sociable_linear_split(std::uint64_t q, std::uint32_t n);

/// Requires (x^n-1)/(x-1) irreducible and b = 2; returns {sociable, lonely} =
/// {(q-2)(q^(n-1)-n-1), (q-2)(n-1)}.
std::pair<BigCount, BigCount>
count_sociable_irreducible_cofactor(const CyclotomicFactorization& fact);

/// Number of residues of degree < n matching one fixed residue prescription
/// mod every f_i, counted exhaustively; asserted equal to q^(n(tau-1)/tau)
/// regardless of the prescription.
BigCount count_prescribed_values(const PolyRing& ring,
                                 const CyclotomicFactorization& fact,
                                 std::span<const Poly> residues,
                                 const EnumOptions& opt = {});

/// Reference counts quoted in the literature for specific (q, n, b) points.
/// Disputed entries are values whose printed form disagrees with the formula
/// they came from; the enumeration oracle adjudicates.
struct ReferenceValue {
    const char* name;
    std::uint64_t q;
    std::uint32_t n;
    std::uint32_t b;
    const char* quantity; // "sociable" | "lonely" | "depth_b"
    std::uint64_t value;
    bool disputed;
};

std::span<const ReferenceValue> reference_values();

} // namespace fqdepth
