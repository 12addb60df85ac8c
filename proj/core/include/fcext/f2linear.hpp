#ifndef FCEXT_F2LINEAR_HPP
#define FCEXT_F2LINEAR_HPP

#include <cstdint>
#include <vector>

namespace fcext {

/* Dense bit-packed matrix over F_2, row-major, 64 columns per word.
 * Unused trailing bits of each row are kept zero. */
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const;
    void set(size_t r, size_t c, bool v = true);
    void xor_row(size_t dst, size_t src);  // row[dst] ^= row[src]
    void swap_rows(size_t a, size_t b);
    bool row_empty(size_t r) const;

    std::vector<uint64_t> row_bits(size_t r) const;
    void append_row(const std::vector<uint64_t>& packed);  // packed in 64-bit words

    bool operator==(const BitMatrix&) const = default;

private:
    size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> bits_;
};

/* One F_2 row operation.  swap: rows (a,b) exchanged; add: row[a] ^= row[b]. */
struct RowOp {
    enum Kind : uint8_t { swap, add } kind;
    uint32_t a, b;
};

/* Row operations that turn the input into its RREF, replayable on any
 * matrix with the same number of rows. */
struct TransformRecord {
    std::vector<RowOp> ops;
    void apply(BitMatrix& m) const;
};

struct RowReduceResult {
    BitMatrix rref;
    std::vector<size_t> pivots;  // pivot column per pivot row, ascending
    TransformRecord transform;
};

/* Reduced row-echelon form over F_2.  Pivot choice is deterministic:
 * lowest column index first, then lowest row index. */
RowReduceResult row_reduce(const BitMatrix& m);

size_t rank(const BitMatrix& m);

/* Basis of {v : m v = 0}, one BitMatrix row per basis vector. */
std::vector<std::vector<uint64_t>> kernel_basis(const BitMatrix& m);

/* y = m v for a packed column vector v of length cols. */
std::vector<uint64_t> mat_vec(const BitMatrix& m, const std::vector<uint64_t>& v);

}  // namespace fcext

#endif
