// Acceptance suite: one line per criterion, exact counts throughout.
// Usage: fqdepth_acceptance [path-to-cli]   (the CLI path enables the
// byte-identity checks of the last criterion)

#include "fqdepth/serialize.hpp"
#include "fqdepth/sociability.hpp"

#include "oracle.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace fqdepth;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body)
{
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << label << note
              << "\n";
    if (!ok)
        ++g_failures;
}

struct GridPoint {
    std::uint64_t q;
    std::uint32_t n;
};

const std::vector<GridPoint> kGrid = {
    {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}, {4, 3},
    {4, 4}, {5, 2}, {5, 3}, {5, 4}, {7, 2}, {7, 3}, {13, 3},
};

ExtCtxPtr field(std::uint64_t q, std::uint32_t n)
{
    return make_ext_field(make_base_field_q(q), n);
}

std::string run_cli(const std::string& cli, const std::string& args)
{
    std::string cmd = cli + " " + args;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe)
        throw std::runtime_error("cannot run: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe.get())) > 0)
        out.append(buf, got);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "normal-element count equals phi_q on all 14 grid points", [] {
        for (const auto& [q, n] : kGrid) {
            auto ctx = field(q, n);
            std::uint64_t by_rank = 0;
            for (std::uint64_t code = 0; code < ctx->order_u64(); ++code)
                by_rank += oracle::is_normal(*ctx, ctx->from_code(code));
            BigCount formula = euler_phi_q(factor_xn_minus_1(ctx->base_ptr(), n));
            if (BigCount(by_rank) != formula) {
                std::cout << "  q=" << q << " n=" << n << ": rank count " << by_rank
                          << " != phi_q " << to_string(formula) << "\n";
                return false;
            }
        }
        return true;
    });

    criterion(2, "five normality and four sociability conditions agree element-wise",
              [] {
                  for (const auto& [q, n] : kGrid) {
                      auto ctx = field(q, n);
                      if (ctx->order() > BigCount(1) << 12)
                          continue;
                      auto map = find_normal_element(ctx);
                      auto fact = factor_xn_minus_1(ctx->base_ptr(), n);
                      auto dec = make_primary_decomposition(ctx->ring(), fact);
                      for (std::uint64_t code = 0; code < ctx->order_u64(); ++code) {
                          FieldElem beta = ctx->from_code(code);
                          if (!check_normal_equivalences(map, dec, beta).all_equal())
                              return false;
                          if (!check_tfae_sociable(map, fact, beta, 2).all_equal())
                              return false;
                      }
                  }
                  return true;
              });

    criterion(3, "q=7 n=3 b=3: 36 sociable by enumeration and by formula", [] {
        auto report = classify_all(*field(7, 3), 3);
        const BigCount by_example = BigCount(7 - 3) * (7 - 4) * (7 - 4);
        return report.sociable == 36 && by_example == 36 &&
               report.exact_product == 36;
    });

    criterion(4, "q=5 n=4 b=2: no sociable elements, three routes", [] {
        auto report = classify_all(*field(5, 4), 2);
        const bool q_eq_n_plus_1 = 5 == 4 + 1; // forces zero sociable at b = 2
        return report.sociable == 0 && count_sociable_linear_split(5, 4) == 0 &&
               q_eq_n_plus_1;
    });

    criterion(5, "q=7 n=3 b=2: depth 125, sociable 45, lonely 80, three formulas", [] {
        auto report = classify_all(*field(7, 3), 2);
        const BigCount depth_form = BigCount(7 - 2) * (7 - 2) * (7 - 2);
        const BigCount lonely_form = BigCount(4) * (7 - 2) * (7 - 3);
        return report.depth_b == 125 && report.sociable == 45 &&
               report.lonely == 80 && depth_form == 125 &&
               count_sociable_linear_split(7, 3) == 45 && lonely_form == 80;
    });

    criterion(6, "q=3 n=5 b=2: sociable 75 and lonely 4 settle the cofactor formula",
              [] {
                  auto report = classify_all(*field(3, 5), 2);
                  auto fact = factor_xn_minus_1(make_base_field_q(3), 5);
                  auto [sociable, lonely] = count_sociable_irreducible_cofactor(fact);
                  // the statement's q^(n-1) - n - 1 term, not the proof's -n + 1
                  const BigCount stated = BigCount(3 - 2) * (81 - 5 - 1);
                  return report.sociable == 75 && report.lonely == 4 &&
                         sociable == stated && lonely == BigCount(3 - 2) * (5 - 1);
              });

    criterion(7, "n = q branch: (3,3,2) gives 9 and (4,4,2) gives 128", [] {
        auto r33 = classify_all(*field(3, 3), 2);
        auto r44 = classify_all(*field(4, 4), 2);
        return r33.sociable == 9 && count_sociable_n_qs(3, 1, 2) == 9 &&
               r44.sociable == 128 && count_sociable_n_qs(4, 1, 2) == 128;
    });

    criterion(8, "q=13 n=3 b=3: enumeration adjudicates 360 vs the printed 36", [] {
        auto report = classify_all(*field(13, 3), 3);
        const BigCount formula = BigCount(13 - 3) * (13 - 7) * (13 - 7);
        // the enumeration is authoritative; it must agree with the full
        // product, and the printed 36 must be flagged iff it disagrees
        bool oracle_matches_formula = report.sociable == formula;
        bool printed_flagged = false;
        for (const auto& ref : reference_values())
            if (ref.q == 13 && ref.n == 3 && ref.b == 3)
                printed_flagged =
                    ref.disputed && (BigCount(ref.value) != report.sociable);
        std::cout << "  printed value 36 vs enumerated "
                  << to_string(report.sociable) << ": discrepancy "
                  << (printed_flagged ? "flagged" : "absent") << "\n";
        return oracle_matches_formula && report.sociable == 360 && printed_flagged;
    });

    criterion(9, "residue prescriptions: 9 solutions at (3,3), 8 at (2,4)", [] {
        // (3,3): tau = 3, single linear factor; residues mod x-1 are the three
        // constants, prescribe each plus repeats for five runs
        auto field3 = make_base_field_q(3);
        PolyRing ring3(field3);
        auto fact33 = factor_xn_minus_1(field3, 3);
        int runs3 = 0;
        for (int repeat = 0; repeat < 2; ++repeat)
            for (BaseElt c = 0; c < 3 && runs3 < 5; ++c, ++runs3) {
                std::vector<Poly> prescription{Poly::constant(c)};
                if (count_prescribed_values(ring3, fact33, prescription) != 9)
                    return false;
            }

        auto field2 = make_base_field_q(2);
        PolyRing ring2(field2);
        auto fact24 = factor_xn_minus_1(field2, 4);
        int runs2 = 0;
        for (int repeat = 0; repeat < 3; ++repeat)
            for (BaseElt c = 0; c < 2 && runs2 < 5; ++c, ++runs2) {
                std::vector<Poly> prescription{Poly::constant(c)};
                if (count_prescribed_values(ring2, fact24, prescription) != 8)
                    return false;
            }
        return runs3 == 5 && runs2 == 5;
    });

    criterion(10, "shift behaviour of normal elements on both branches", [] {
        for (const auto& [q, n] :
             std::vector<GridPoint>{{3, 3}, {2, 4}, {7, 3}, {5, 2}}) {
            auto ctx = field(q, n);
            auto report = verify_depth_shifts(*ctx);
            if (!report.pass)
                return false;
            const bool expect_high = valuation(n, ctx->p()) > 0;
            if (report.shifts_all_normal_branch != expect_high)
                return false;
        }
        // the trace normalization ambiguity, resolved empirically: the
        // g(1)-keyed branch holds under Tr(alpha) = n/tau and fails under
        // the reciprocal target on fields where n^2 != 1 mod p
        for (const auto& [q, n] : std::vector<GridPoint>{{7, 3}, {5, 2}}) {
            auto ctx = field(q, n);
            auto reciprocal = find_normal_element(ctx, TraceTarget::TauOverN);
            auto report = verify_depth_shifts(*ctx, {}, &reciprocal);
            std::cout << "  q=" << q << " n=" << n
                      << ": Tr(alpha)=n/tau passes; Tr(alpha)=tau/n "
                      << (report.pass ? "passes" : "fails") << "\n";
            if (report.pass)
                return false; // must fail: n^2 != 1 mod p at both points
        }
        return true;
    });

    if (cli.empty()) {
        std::cout << "[SKIP] 11. byte-identical CLI reports (no CLI path given)\n";
        ++g_failures;
    } else {
        criterion(11, "byte-identical reports under --seed-alpha and --threads", [&] {
            auto ctx = field(7, 3);
            auto codes = first_normal_codes(*ctx, 2);
            char hex[32];
            std::snprintf(hex, sizeof hex, "%llx",
                          static_cast<unsigned long long>(codes[1]));
            const std::string base =
                run_cli(cli, "classify --q 7 --n 3 --b 2 --threads 1");
            const std::string seeded =
                run_cli(cli, std::string("classify --q 7 --n 3 --b 2 --threads 1 "
                                         "--seed-alpha ") +
                                 hex);
            const std::string threaded =
                run_cli(cli, "classify --q 7 --n 3 --b 2 --threads 4");
            if (base.empty())
                return false;
            return base == seeded && base == threaded;
        });
    }

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed\n"
                                  : "acceptance: FAILURES present\n");
    return g_failures == 0 ? 0 : 1;
}
