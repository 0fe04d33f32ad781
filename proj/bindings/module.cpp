// Python bindings for the classification library. The module works on plain
// (q, n, b) integers and returns dicts/ints, mirroring the CLI surface.

#include "fqdepth/serialize.hpp"
#include "fqdepth/sociability.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

namespace py = pybind11;
using namespace fqdepth;

namespace {

py::object json_to_py(const nlohmann::json& j)
{
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

py::int_ count_to_py(BigCount v)
{
    return py::int_(py::str(to_string(v)));
}

ExtCtxPtr build_field(std::uint64_t q, std::uint32_t n)
{
    return make_ext_field(make_base_field_q(q), n);
}

EnumOptions options(std::optional<std::uint64_t> cap, unsigned threads)
{
    EnumOptions opt;
    if (cap)
        opt.cap = *cap;
    opt.threads = threads == 0 ? 1 : threads;
    return opt;
}

} // namespace

PYBIND11_MODULE(fqdepth, m)
{
    m.doc() = "Normality, alpha-depth and sociability classification over F_{q^n}";

    py::register_exception<NonPrimeError>(m, "NonPrimeError", PyExc_ValueError);
    py::register_exception<NotIrreducibleError>(m, "NotIrreducibleError", PyExc_ValueError);
    py::register_exception<CtxMismatchError>(m, "CtxMismatchError", PyExc_ValueError);
    py::register_exception<DivisionByZeroError>(m, "DivisionByZeroError",
                                                PyExc_ZeroDivisionError);
    py::register_exception<BOutOfRangeError>(m, "BOutOfRangeError", PyExc_ValueError);
    py::register_exception<RegimeMismatchError>(m, "RegimeMismatchError", PyExc_ValueError);
    py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);
    py::register_exception<OverflowError>(m, "CountOverflowError", PyExc_OverflowError);

    m.def(
        "factor",
        [](std::uint64_t q, std::uint32_t n) {
            auto field = make_base_field_q(q);
            auto fact = factor_xn_minus_1(field, n);
            PolyRing ring(field);
            py::dict d;
            d["q"] = fact.q;
            d["n"] = fact.n;
            d["tau"] = fact.tau;
            d["n0"] = fact.n0;
            py::list factors;
            for (const auto& f : fact.factors) {
                py::dict fd;
                fd["poly"] = ring.to_string(f.f);
                fd["coeffs"] = f.f.c;
                fd["coset"] = f.coset;
                fd["degree"] = f.degree;
                fd["root_order"] = f.root_order;
                factors.append(fd);
            }
            d["factors"] = factors;
            return d;
        },
        py::arg("q"), py::arg("n"), "Factor x^n - 1 over F_q by cyclotomic cosets");

    m.def(
        "phi_q",
        [](std::uint64_t q, std::uint32_t n) {
            auto fact = factor_xn_minus_1(make_base_field_q(q), n);
            return count_to_py(euler_phi_q(fact));
        },
        py::arg("q"), py::arg("n"),
        "Number of residues of degree < n coprime to x^n - 1 (= number of "
        "normal elements)");

    m.def(
        "classify",
        [](std::uint64_t q, std::uint32_t n, std::uint32_t b,
           std::optional<std::uint64_t> cap, unsigned threads) {
            auto ctx = build_field(q, n);
            auto report = classify_all(*ctx, b, options(cap, threads));
            return json_to_py(nlohmann::json::parse(report_to_json(report)));
        },
        py::arg("q"), py::arg("n"), py::arg("b"), py::arg("cap") = std::nullopt,
        py::arg("threads") = 1,
        "Exhaustive counts of normal / depth-b / sociable / lonely elements");

    m.def(
        "count_depth",
        [](std::uint64_t q, std::uint32_t n, std::uint32_t b,
           std::optional<std::uint64_t> cap, unsigned threads) {
            auto ctx = build_field(q, n);
            return count_to_py(count_phi_b(*ctx, b, options(cap, threads)));
        },
        py::arg("q"), py::arg("n"), py::arg("b"), py::arg("cap") = std::nullopt,
        py::arg("threads") = 1, "Number of elements of alpha-depth b");

    m.def(
        "normal_element_codes",
        [](std::uint64_t q, std::uint32_t n, std::size_t count) {
            auto ctx = build_field(q, n);
            return first_normal_codes(*ctx, count);
        },
        py::arg("q"), py::arg("n"), py::arg("count") = std::size_t(1),
        "Codes of the first normal elements in canonical order");

    m.def(
        "is_normal_code",
        [](std::uint64_t q, std::uint32_t n, std::uint64_t code) {
            auto ctx = build_field(q, n);
            return is_normal(ctx->from_code(code));
        },
        py::arg("q"), py::arg("n"), py::arg("code"),
        "Whether the element with the given canonical code is normal");

    m.def(
        "max_depth_code",
        [](std::uint64_t q, std::uint32_t n, std::uint64_t code) {
            auto ctx = build_field(q, n);
            auto map = find_normal_element(ctx);
            return max_alpha_depth(map, ctx->from_code(code));
        },
        py::arg("q"), py::arg("n"), py::arg("code"),
        "Largest b <= p for which the element has alpha-depth b");

    m.def(
        "formula_linear_split",
        [](std::uint64_t q, std::uint32_t n) {
            return count_to_py(count_sociable_linear_split(q, n));
        },
        py::arg("q"), py::arg("n"), "Sociable count for b = 2 when n | q-1");

    m.def(
        "formula_n_qs",
        [](std::uint64_t q, std::uint32_t s, std::uint32_t b) {
            return count_to_py(count_sociable_n_qs(q, s, b));
        },
        py::arg("q"), py::arg("s"), py::arg("b"), "Sociable count when n = q^s");

    m.def(
        "formula_coprime_order",
        [](std::uint64_t q, std::uint32_t n, std::uint32_t b) {
            auto fact = factor_xn_minus_1(make_base_field_q(q), n);
            return count_to_py(count_sociable_coprime_order(fact, b));
        },
        py::arg("q"), py::arg("n"), py::arg("b"),
        "Sociable count when gcd(n, q-1) = 1");

    m.def(
        "formula_n_prime",
        [](std::uint64_t q, std::uint32_t n, std::uint32_t b) {
            auto fact = factor_xn_minus_1(make_base_field_q(q), n);
            return count_to_py(count_sociable_n_prime(fact, b));
        },
        py::arg("q"), py::arg("n"), py::arg("b"),
        "Sociable count when n is prime, n != p, n does not divide q-1");

    m.def(
        "formula_irreducible_cofactor",
        [](std::uint64_t q, std::uint32_t n) {
            auto fact = factor_xn_minus_1(make_base_field_q(q), n);
            auto [sociable, lonely] = count_sociable_irreducible_cofactor(fact);
            return py::make_tuple(count_to_py(sociable), count_to_py(lonely));
        },
        py::arg("q"), py::arg("n"),
        "(sociable, lonely) for b = 2 when (x^n-1)/(x-1) is irreducible");

    m.def(
        "verify_depth_shifts",
        [](std::uint64_t q, std::uint32_t n, std::optional<std::uint64_t> cap) {
            auto ctx = build_field(q, n);
            auto report = verify_depth_shifts(*ctx, options(cap, 1));
            py::dict d;
            d["e"] = report.e;
            d["all_shifts_normal_branch"] = report.shifts_all_normal_branch;
            d["normal_checked"] = report.normal_checked;
            d["pass"] = report.pass;
            return d;
        },
        py::arg("q"), py::arg("n"), py::arg("cap") = std::nullopt,
        "Exhaustively check how shifts beta - c of normal elements behave");
}
