#pragma once

#include "fqdepth/frobenius.hpp"

#include <cstdint>
#include <vector>

namespace fqdepth {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1ull << 22;

struct EnumOptions {
    std::uint64_t cap = kDefaultEnumerationCap;
    unsigned threads = 1;
};

/// beta, beta - alpha, ..., beta - (b-1)alpha all normal. Requires
/// 1 <= b <= p. Evaluated both through gcd(x^n-1, g - c) on the residue side
/// and through rank tests on the shifted elements; the routes are asserted to
/// agree.
bool has_alpha_depth(const NormalBasisMap& map, const FieldElem& beta, std::uint32_t b);

/// Largest b <= p for which has_alpha_depth holds; 0 for non-normal beta.
std::uint32_t max_alpha_depth(const NormalBasisMap& map, const FieldElem& beta);

/// Number of residues g with gcd(x^n-1, g - c) = 1 for all c in {0..b-1},
/// counted by exhaustive enumeration. Equals the number of elements of
/// alpha-depth b for any normal alpha.
BigCount count_phi_b(const ExtCtx& ctx, std::uint32_t b, const EnumOptions& opt = {});

/// Exhaustive check of the depth behaviour of shifts of normal elements:
/// when p divides n every shift beta - c stays normal; otherwise beta - c is
/// normal exactly when g(1) != c, for g the residue of beta under the map.
struct DepthShiftReport {
    std::uint32_t e = 0;
    bool shifts_all_normal_branch = false; // e > 0 branch
    std::uint64_t normal_checked = 0;
    bool pass = true;
    struct Counterexample {
        std::uint64_t beta_code;
        BaseElt shift;
        bool expected_normal;
        bool got_normal;
    };
    std::vector<Counterexample> counterexamples; // capped at 16
};

DepthShiftReport verify_depth_shifts(const ExtCtx& ctx, const EnumOptions& opt = {},
                                            const NormalBasisMap* map = nullptr);

} // namespace fqdepth
