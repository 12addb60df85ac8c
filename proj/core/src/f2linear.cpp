#include "fcext/f2linear.hpp"

#include <algorithm>
#include <bit>

#include "fcext/error.hpp"

namespace fcext {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

bool BitMatrix::get(size_t r, size_t c) const
{
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(size_t r, size_t c, bool v)
{
    uint64_t& w = bits_[r * words_ + c / 64];
    uint64_t m = uint64_t(1) << (c % 64);
    w = v ? (w | m) : (w & ~m);
}

void BitMatrix::xor_row(size_t dst, size_t src)
{
    uint64_t* d = bits_.data() + dst * words_;
    const uint64_t* s = bits_.data() + src * words_;
    for (size_t k = 0; k < words_; ++k)
        d[k] ^= s[k];
}

void BitMatrix::swap_rows(size_t a, size_t b)
{
    if (a == b)
        return;
    std::swap_ranges(bits_.begin() + a * words_, bits_.begin() + (a + 1) * words_, bits_.begin() + b * words_);
}

bool BitMatrix::row_empty(size_t r) const
{
    const uint64_t* p = bits_.data() + r * words_;
    for (size_t k = 0; k < words_; ++k)
        if (p[k])
            return false;
    return true;
}

std::vector<uint64_t> BitMatrix::row_bits(size_t r) const
{
    return {bits_.begin() + r * words_, bits_.begin() + (r + 1) * words_};
}

void BitMatrix::append_row(const std::vector<uint64_t>& packed)
{
    FCEXT_CHECK(packed.size() == words_ || (words_ == 0 && packed.empty()), "append_row: word count mismatch");
    bits_.insert(bits_.end(), packed.begin(), packed.end());
    ++rows_;
}

void TransformRecord::apply(BitMatrix& m) const
{
    for (const RowOp& op : ops) {
        if (op.kind == RowOp::swap)
            m.swap_rows(op.a, op.b);
        else
            m.xor_row(op.a, op.b);
    }
}

RowReduceResult row_reduce(const BitMatrix& m)
{
    RowReduceResult res;
    res.rref = m;
    BitMatrix& a = res.rref;
    size_t row = 0;
    for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        size_t pivot = row;
        while (pivot < a.rows() && !a.get(pivot, col))
            ++pivot;
        if (pivot == a.rows())
            continue;
        if (pivot != row) {
            a.swap_rows(row, pivot);
            res.transform.ops.push_back({RowOp::swap, uint32_t(row), uint32_t(pivot)});
        }
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r != row && a.get(r, col)) {
                a.xor_row(r, row);
                res.transform.ops.push_back({RowOp::add, uint32_t(r), uint32_t(row)});
            }
        }
        res.pivots.push_back(col);
        ++row;
    }
    return res;
}

size_t rank(const BitMatrix& m)
{
    return row_reduce(m).pivots.size();
}

std::vector<std::vector<uint64_t>> kernel_basis(const BitMatrix& m)
{
    RowReduceResult rr = row_reduce(m);
    std::vector<std::vector<uint64_t>> basis;
    size_t words = (m.cols() + 63) / 64;
    std::vector<char> is_pivot(m.cols(), 0);
    for (size_t c : rr.pivots)
        is_pivot[c] = 1;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<uint64_t> v(words, 0);
        v[free_col / 64] |= uint64_t(1) << (free_col % 64);
        for (size_t i = 0; i < rr.pivots.size(); ++i) {
            if (rr.rref.get(i, free_col))
                v[rr.pivots[i] / 64] ^= uint64_t(1) << (rr.pivots[i] % 64);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<uint64_t> mat_vec(const BitMatrix& m, const std::vector<uint64_t>& v)
{
    std::vector<uint64_t> y((m.rows() + 63) / 64, 0);
    for (size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row_bits(r);
        uint64_t acc = 0;
        for (size_t k = 0; k < row.size(); ++k)
            acc ^= row[k] & v[k];
        if (std::popcount(acc) & 1)
            y[r / 64] |= uint64_t(1) << (r % 64);
    }
    return y;
}

}  // namespace fcext
