#pragma once

#include "fqdepth/ints.hpp"
#include "fqdepth/poly.hpp"

#include <cstdint>
#include <vector>

namespace fqdepth {

struct CycloFactor {
    Poly f;                           // monic irreducible over F_q
    std::vector<std::uint32_t> coset; // q-cyclotomic coset mod n0, sorted
    std::uint32_t degree;             // = coset size
    std::uint32_t root_order;         // multiplicative order of any root
};

/// The primary factorization x^n - 1 = (f_1 ... f_r)^tau over F_q, with
/// tau = p^{v_p(n)} and n0 = n/tau. Factors are indexed by the q-cyclotomic
/// cosets mod n0 and listed with x - 1 first, then by ascending smallest
/// coset representative.
struct CyclotomicFactorization {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t tau = 1;
    std::uint32_t n0 = 0;
    std::vector<CycloFactor> factors;
    Poly xn_minus_one;
};

CyclotomicFactorization factor_xn_minus_1(const FieldCtxPtr& field, std::uint32_t n);

/// Number of residues of degree < n coprime to x^n - 1 (the F_q analogue of
/// Euler's totient evaluated at x^n - 1).
BigCount euler_phi_q(const CyclotomicFactorization& fact);

/// g mod f_i: the value of g at a root of f_i, represented in F_q[x]/(f_i).
Poly eval_mod_factor(const PolyRing& ring, const Poly& g, const Poly& f_i);

} // namespace fqdepth
