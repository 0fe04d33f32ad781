#include "fqdepth/cyclotomic.hpp"

#include "fqdepth/errors.hpp"

#include <algorithm>
#include <numeric>

namespace fqdepth {
namespace {

// Partition Z/n0 into orbits under multiplication by q, sorted by smallest
// element; the orbit of 0 comes first.
std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint64_t q, std::uint32_t n0)
{
    std::vector<bool> seen(n0, false);
    std::vector<std::vector<std::uint32_t>> cosets;
    for (std::uint32_t j = 0; j < n0; ++j) {
        if (seen[j])
            continue;
        std::vector<std::uint32_t> coset;
        std::uint64_t cur = j;
        do {
            seen[cur] = true;
            coset.push_back(static_cast<std::uint32_t>(cur));
            cur = (cur * (q % n0)) % n0;
        } while (cur != j);
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

// A primitive n0-th root of unity in F_q[x]/(m) where deg m = ord_{n0}(q).
// Scans elements in canonical code order, maps each through the (q^d-1)/n0
// power, and keeps the first whose order is exactly n0 (checked against the
// prime divisors of n0).
Poly find_primitive_root(const PolyRing& ring, const Poly& m, std::uint32_t n0)
{
    const std::uint32_t d = static_cast<std::uint32_t>(m.degree());
    PolyRing::Exp group = 1;
    for (std::uint32_t i = 0; i < d; ++i)
        group *= ring.field().q();
    group -= 1;
    const PolyRing::Exp power = group / n0;
    const auto primes = prime_divisors(n0);
    const std::uint64_t scan_limit = group > PolyRing::Exp(~std::uint64_t(0))
                                         ? ~std::uint64_t(0)
                                         : static_cast<std::uint64_t>(group);
    for (std::uint64_t code = 1; code <= scan_limit; ++code) {
        Poly u = ring.from_code(code, d);
        Poly theta = ring.pow_mod(u, power, m);
        bool ok = n0 == 1 ? theta.is_one() : !theta.is_zero();
        for (std::uint64_t ell : primes) {
            if (!ok)
                break;
            if (ring.pow_mod(theta, n0 / ell, m).is_one())
                ok = false;
        }
        if (ok)
            return theta;
    }
    throw std::logic_error("no primitive root of unity found"); // unreachable
}

} // namespace

CyclotomicFactorization factor_xn_minus_1(const FieldCtxPtr& field, std::uint32_t n)
{
    if (n == 0)
        throw std::invalid_argument("n must be >= 1");
    PolyRing ring(field);
    CyclotomicFactorization out;
    out.q = field->q();
    out.n = n;
    const std::uint32_t p = field->p();
    std::uint32_t tau = 1;
    std::uint32_t e = valuation(n, p);
    for (std::uint32_t i = 0; i < e; ++i)
        tau *= p;
    out.tau = tau;
    out.n0 = n / tau;
    out.xn_minus_one = ring.x_pow_minus_one(n);

    const std::uint32_t n0 = out.n0;
    auto cosets = cyclotomic_cosets(field->q(), n0);

    // field containing the n0-th roots of unity
    const std::uint32_t d =
        n0 == 1 ? 1 : static_cast<std::uint32_t>(multiplicative_order(field->q() % n0, n0));
    Poly m = ring.smallest_irreducible(d);
    Poly theta = find_primitive_root(ring, m, n0);

    // powers of theta, reused across cosets
    std::vector<Poly> theta_pow(n0);
    theta_pow[0] = ring.rem(Poly::constant(1), m);
    for (std::uint32_t j = 1; j < n0; ++j)
        theta_pow[j] = ring.rem(ring.mul(theta_pow[j - 1], theta), m);

    for (const auto& coset : cosets) {
        // f = prod_{j in coset} (X - theta^j), computed with coefficients in
        // F_q[x]/(m); the result must collapse to F_q.
        std::vector<Poly> fc{Poly::constant(1)};
        for (std::uint32_t j : coset) {
            std::vector<Poly> next(fc.size() + 1);
            for (std::size_t t = 0; t < fc.size(); ++t) {
                next[t + 1] = ring.add(next[t + 1], fc[t]);
                next[t] = ring.sub(next[t], ring.rem(ring.mul(fc[t], theta_pow[j]), m));
            }
            fc = std::move(next);
        }
        std::vector<BaseElt> coeffs(fc.size(), 0);
        for (std::size_t t = 0; t < fc.size(); ++t) {
            if (fc[t].degree() > 0)
                throw std::logic_error("factor coefficient escaped the base field");
            coeffs[t] = fc[t].coeff(0);
        }
        CycloFactor factor;
        factor.f = Poly(std::move(coeffs));
        factor.coset = coset;
        factor.degree = static_cast<std::uint32_t>(coset.size());
        factor.root_order = coset[0] == 0 ? 1 : n0 / std::gcd(coset[0], n0);
        out.factors.push_back(std::move(factor));
    }

    // verify the primary factorization multiplies back
    Poly prod = Poly::constant(1);
    for (const auto& f : out.factors)
        prod = ring.mul(prod, f.f);
    prod = ring.pow(prod, tau);
    if (!(prod == out.xn_minus_one))
        throw std::logic_error("factorization does not multiply back to x^n - 1");
    return out;
}

BigCount euler_phi_q(const CyclotomicFactorization& fact)
{
    BigCount total = 1;
    for (const auto& f : fact.factors) {
        BigCount qd = checked_pow(BigCount(fact.q), f.degree);
        BigCount full = checked_pow(qd, fact.tau);
        BigCount sub = checked_pow(qd, fact.tau - 1);
        total = checked_mul(total, full - sub);
    }
    return total;
}

Poly eval_mod_factor(const PolyRing& ring, const Poly& g, const Poly& f_i)
{
    return ring.rem(g, f_i);
}

} // namespace fqdepth
