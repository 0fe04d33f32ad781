#include "enumerate.hpp"

#include <algorithm>

namespace fqdepth::detail {

EnumCounts count_residues(const PolyRing& ring, const CyclotomicFactorization& fact,
                          std::uint32_t b,
                          const std::vector<std::vector<char>>& forbidden,
                          std::uint64_t begin, std::uint64_t end)
{
    EnumCounts counts;
    if (begin >= end)
        return counts;
    ResidueWalker walker(ring, fact);
    walker.seek(begin);
    const std::size_t r = walker.factor_count();
    const bool track_sociable = !forbidden.empty();
    for (std::uint64_t code = begin; code < end; ++code) {
        bool normal = true, depth = true, sociable = track_sociable;
        for (std::size_t i = 0; i < r; ++i) {
            const std::uint64_t rc = walker.residue_code(i);
            if (rc == 0)
                normal = false;
            if (rc < b)
                depth = false;
            if (sociable && forbidden[i][rc])
                sociable = false;
        }
        counts.normal += normal;
        counts.depth += depth;
        counts.sociable += sociable;
        if (code + 1 < end)
            walker.step();
    }
    return counts;
}

EnumCounts count_residues_parallel(const PolyRing& ring,
                                   const CyclotomicFactorization& fact, std::uint32_t b,
                                   const std::vector<std::vector<char>>& forbidden,
                                   std::uint64_t total, unsigned threads)
{
    if (threads <= 1 || total < 4096)
        return count_residues(ring, fact, b, forbidden, 0, total);
    threads = std::min<unsigned>(threads, 64);
    std::vector<EnumCounts> partial(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t begin = std::min<std::uint64_t>(total, chunk * t);
        const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
        pool.emplace_back([&, t, begin, end] {
            partial[t] = count_residues(ring, fact, b, forbidden, begin, end);
        });
    }
    for (auto& th : pool)
        th.join();
    EnumCounts out;
    for (const auto& c : partial)
        out += c;
    return out;
}

std::uint64_t checked_total(const ExtCtx& ctx, std::uint64_t cap)
{
    if (ctx.order() > BigCount(cap))
        throw CapExceededError("q^n = " + to_string(ctx.order()) +
                               " exceeds the enumeration cap " + std::to_string(cap));
    return static_cast<std::uint64_t>(ctx.order());
}

} // namespace fqdepth::detail
