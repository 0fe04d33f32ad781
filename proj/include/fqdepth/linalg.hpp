#pragma once

#include "fqdepth/field.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fqdepth {

/// Small dense matrix over F_q, row-major.
struct Mat {
    std::uint32_t rows = 0, cols = 0;
    std::vector<BaseElt> a;

    Mat() = default;
    Mat(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    BaseElt& at(std::uint32_t r, std::uint32_t c) { return a[std::size_t(r) * cols + c]; }
    BaseElt at(std::uint32_t r, std::uint32_t c) const { return a[std::size_t(r) * cols + c]; }

    static Mat identity(std::uint32_t nn);
    bool operator==(const Mat&) const = default;
};

std::uint32_t mat_rank(const FieldCtx& F, Mat m);
std::optional<Mat> mat_inverse(const FieldCtx& F, const Mat& m);
std::vector<BaseElt> mat_vec(const FieldCtx& F, const Mat& m, std::span<const BaseElt> v);

} // namespace fqdepth
