#pragma once

#include "fqdepth/cyclotomic.hpp"
#include "fqdepth/depth.hpp"
#include "fqdepth/sociability.hpp"

#include <string>

namespace fqdepth {

/// Exact integers render as JSON numbers up to 2^53 and as decimal strings
/// above, so consumers never lose precision.
std::string json_count(BigCount v);

/// Classification report as a JSON object with the fixed key set
/// q,n,b,total,normal,depth_b,sociable,lonely,formula_name,formula_value,
/// mismatch. Deterministic byte output; parsing and re-serializing the result
/// reproduces it exactly.
std::string report_to_json(const SociabilityReport& report);

/// One CSV row matching the fixed header (no trailing newline).
std::string report_to_csv_row(const SociabilityReport& report);

inline constexpr const char* kCsvHeader =
    "q,n,b,total,normal,depth_b,sociable,lonely,formula_name,formula_value,mismatch";

/// Row for a grid point that was skipped (cap or b out of range).
std::string skipped_csv_row(std::uint64_t q, std::uint32_t n, std::uint32_t b,
                            const std::string& reason);
std::string skipped_json_object(std::uint64_t q, std::uint32_t n, std::uint32_t b,
                                const std::string& reason);

/// Human-readable factorization listing, one factor per line.
std::string factorization_to_text(const CyclotomicFactorization& fact,
                                  const PolyRing& ring);

} // namespace fqdepth
