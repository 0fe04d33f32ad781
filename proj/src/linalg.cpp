#include "fqdepth/linalg.hpp"

#include <stdexcept>

namespace fqdepth {

Mat Mat::identity(std::uint32_t nn)
{
    Mat m(nn, nn);
    for (std::uint32_t i = 0; i < nn; ++i)
        m.at(i, i) = 1;
    return m;
}

std::uint32_t mat_rank(const FieldCtx& F, Mat m)
{
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::uint32_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            for (std::uint32_t c = 0; c < m.cols; ++c)
                std::swap(m.at(pivot, c), m.at(rank, c));
        BaseElt inv = F.inv(m.at(rank, col));
        for (std::uint32_t c = col; c < m.cols; ++c)
            m.at(rank, c) = F.mul(m.at(rank, c), inv);
        for (std::uint32_t r = 0; r < m.rows; ++r) {
            if (r == rank)
                continue;
            BaseElt factor = m.at(r, col);
            if (factor == 0)
                continue;
            for (std::uint32_t c = col; c < m.cols; ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

std::optional<Mat> mat_inverse(const FieldCtx& F, const Mat& m)
{
    if (m.rows != m.cols)
        throw std::invalid_argument("matrix must be square");
    const std::uint32_t n = m.rows;
    Mat work = m;
    Mat inv = Mat::identity(n);
    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t pivot = col;
        while (pivot < n && work.at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        if (pivot != col)
            for (std::uint32_t c = 0; c < n; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        BaseElt scale = F.inv(work.at(col, col));
        for (std::uint32_t c = 0; c < n; ++c) {
            work.at(col, c) = F.mul(work.at(col, c), scale);
            inv.at(col, c) = F.mul(inv.at(col, c), scale);
        }
        for (std::uint32_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            BaseElt factor = work.at(r, col);
            if (factor == 0)
                continue;
            for (std::uint32_t c = 0; c < n; ++c) {
                work.at(r, c) = F.sub(work.at(r, c), F.mul(factor, work.at(col, c)));
                inv.at(r, c) = F.sub(inv.at(r, c), F.mul(factor, inv.at(col, c)));
            }
        }
    }
    return inv;
}

std::vector<BaseElt> mat_vec(const FieldCtx& F, const Mat& m, std::span<const BaseElt> v)
{
    if (v.size() != m.cols)
        throw std::invalid_argument("vector length must equal column count");
    std::vector<BaseElt> out(m.rows, 0);
    for (std::uint32_t r = 0; r < m.rows; ++r) {
        BaseElt acc = 0;
        for (std::uint32_t c = 0; c < m.cols; ++c)
            acc = F.add(acc, F.mul(m.at(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

} // namespace fqdepth
