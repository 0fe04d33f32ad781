#include "fqdepth/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace fqdepth {

namespace {

constexpr BigCount kJsonIntMax = BigCount(1) << 53;

nlohmann::json count_json(BigCount v)
{
    if (v <= kJsonIntMax)
        return nlohmann::json(static_cast<std::uint64_t>(v));
    return nlohmann::json(to_string(v));
}

} // namespace

std::string json_count(BigCount v) { return count_json(v).dump(); }

std::string report_to_json(const SociabilityReport& r)
{
    nlohmann::json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["b"] = r.b;
    j["total"] = count_json(r.total);
    j["normal"] = count_json(r.normal);
    j["depth_b"] = count_json(r.depth_b);
    j["sociable"] = count_json(r.sociable);
    j["lonely"] = count_json(r.lonely);
    j["formula_name"] = r.formula_name;
    j["formula_value"] =
        r.formula_value ? count_json(*r.formula_value) : nlohmann::json(nullptr);
    j["mismatch"] = r.mismatch;
    return j.dump();
}

std::string report_to_csv_row(const SociabilityReport& r)
{
    std::ostringstream os;
    os << r.q << ',' << r.n << ',' << r.b << ',' << to_string(r.total) << ','
       << to_string(r.normal) << ',' << to_string(r.depth_b) << ','
       << to_string(r.sociable) << ',' << to_string(r.lonely) << ','
       << r.formula_name << ','
       << (r.formula_value ? to_string(*r.formula_value) : std::string{}) << ','
       << (r.mismatch ? "true" : "false");
    return os.str();
}

std::string skipped_csv_row(std::uint64_t q, std::uint32_t n, std::uint32_t b,
                            const std::string& reason)
{
    std::ostringstream os;
    os << q << ',' << n << ',' << b << ",,,,,,"
       << "skipped:" << reason << ",,false";
    return os.str();
}

std::string skipped_json_object(std::uint64_t q, std::uint32_t n, std::uint32_t b,
                                const std::string& reason)
{
    nlohmann::json j;
    j["q"] = q;
    j["n"] = n;
    j["b"] = b;
    j["total"] = nullptr;
    j["normal"] = nullptr;
    j["depth_b"] = nullptr;
    j["sociable"] = nullptr;
    j["lonely"] = nullptr;
    j["formula_name"] = "skipped:" + reason;
    j["formula_value"] = nullptr;
    j["mismatch"] = false;
    return j.dump();
}

std::string factorization_to_text(const CyclotomicFactorization& fact,
                                  const PolyRing& ring)
{
    std::ostringstream os;
    os << "q=" << fact.q << " n=" << fact.n << " tau=" << fact.tau
       << " n0=" << fact.n0 << "\n";
    os << "x^" << fact.n << " - 1 = (";
    for (std::size_t i = 0; i < fact.factors.size(); ++i) {
        if (i)
            os << ")(";
        os << ring.to_string(fact.factors[i].f);
    }
    os << ")";
    if (fact.tau > 1)
        os << "^" << fact.tau;
    os << "\n";
    for (std::size_t i = 0; i < fact.factors.size(); ++i) {
        const auto& f = fact.factors[i];
        os << "f_" << (i + 1) << " = " << ring.to_string(f.f) << "  deg=" << f.degree
           << " order=" << f.root_order << " coset={";
        for (std::size_t t = 0; t < f.coset.size(); ++t) {
            if (t)
                os << ",";
            os << f.coset[t];
        }
        os << "}\n";
    }
    return os.str();
}

} // namespace fqdepth
