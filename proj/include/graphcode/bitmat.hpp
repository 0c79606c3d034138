#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphcode/bitvec.hpp"
#include "graphcode/errors.hpp"

namespace graphcode {

/// Dense binary matrix with bit-packed rows. Mutation is limited to cell
/// writes during construction; every elimination-based query (rank, rref,
/// nullspace) works on an internal copy, so a built matrix can be shared
/// freely between rank, nullspace and product calls.
class BitMatrix {
public:
    static constexpr std::size_t word_bits = 64;

    BitMatrix(std::size_t n_rows, std::size_t n_cols)
        : n_rows_(n_rows),
          n_cols_(n_cols),
          words_per_row_((n_cols + word_bits - 1) / word_bits),
          words_(n_rows * words_per_row_, 0u) {
        if (n_rows == 0 || n_cols == 0)
            throw parameter_error("BitMatrix: dimensions must be at least 1x1");
    }

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return n_rows_; }
    std::size_t cols() const { return n_cols_; }

    bool get(std::size_t i, std::size_t j) const {
        check_cell(i, j);
        return (words_[i * words_per_row_ + j / word_bits] >> (j % word_bits)) & 1u;
    }

    void set(std::size_t i, std::size_t j, bool value) {
        check_cell(i, j);
        const std::uint64_t mask = std::uint64_t{1} << (j % word_bits);
        std::uint64_t& w = words_[i * words_per_row_ + j / word_bits];
        if (value) {
            w |= mask;
        } else {
            w &= ~mask;
        }
    }

    std::size_t row_weight(std::size_t i) const {
        if (i >= n_rows_) throw parameter_error("BitMatrix: row index out of range");
        const std::uint64_t* row = row_ptr(i);
        std::size_t total = 0;
        for (std::size_t w = 0; w < words_per_row_; ++w)
            total += static_cast<std::size_t>(std::popcount(row[w]));
        return total;
    }

    BitVector row(std::size_t i) const {
        if (i >= n_rows_) throw parameter_error("BitMatrix: row index out of range");
        BitVector v(n_cols_);
        for (std::size_t j = 0; j < n_cols_; ++j)
            if (get(i, j)) v.set(j, true);
        return v;
    }

    BitVector column(std::size_t j) const {
        if (j >= n_cols_) throw parameter_error("BitMatrix: column index out of range");
        BitVector v(n_rows_);
        for (std::size_t i = 0; i < n_rows_; ++i)
            if (get(i, j)) v.set(i, true);
        return v;
    }

    bool is_symmetric() const {
        require_square("is_symmetric");
        for (std::size_t i = 0; i < n_rows_; ++i)
            for (std::size_t j = i + 1; j < n_cols_; ++j)
                if (get(i, j) != get(j, i)) return false;
        return true;
    }

    bool has_unit_diagonal() const {
        require_square("has_unit_diagonal");
        for (std::size_t i = 0; i < n_rows_; ++i)
            if (!get(i, i)) return false;
        return true;
    }

    BitMatrix transpose() const {
        BitMatrix t(n_cols_, n_rows_);
        for (std::size_t i = 0; i < n_rows_; ++i)
            for (std::size_t j = 0; j < n_cols_; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    bool operator==(const BitMatrix& other) const {
        return n_rows_ == other.n_rows_ && n_cols_ == other.n_cols_ && words_ == other.words_;
    }
    bool operator!=(const BitMatrix& other) const { return !(*this == other); }

    /// GF(2) matrix-vector product.
    BitVector mat_vec_mul(const BitVector& v) const {
        if (v.size() != n_cols_)
            throw parameter_error("BitMatrix: vector length does not match column count");
        BitVector result(n_rows_);
        const std::vector<std::uint64_t>& vw = v.words();
        for (std::size_t i = 0; i < n_rows_; ++i) {
            const std::uint64_t* row = row_ptr(i);
            std::uint64_t acc = 0;
            for (std::size_t w = 0; w < words_per_row_; ++w) acc ^= row[w] & vw[w];
            if (std::popcount(acc) & 1u) result.set(i, true);
        }
        return result;
    }

    /// GF(2) row rank via Gaussian elimination on a copy. Each row is reduced
    /// against the pivots found before it, so block-structured matrices cost
    /// far less than the dense worst case.
    std::size_t rank() const {
        BitMatrix work = *this;
        std::vector<std::size_t> pivot_of_col(n_cols_, n_rows_); // n_rows_ = no pivot yet
        std::size_t r = 0;
        for (std::size_t i = 0; i < n_rows_; ++i) {
            std::uint64_t* row = work.row_ptr(i);
            std::size_t w = 0;
            while (w < words_per_row_) {
                if (row[w] == 0) {
                    ++w;
                    continue;
                }
                const std::size_t lead =
                    w * word_bits + static_cast<std::size_t>(std::countr_zero(row[w]));
                const std::size_t p = pivot_of_col[lead];
                if (p == n_rows_) {
                    pivot_of_col[lead] = i;
                    ++r;
                    break;
                }
                // The pivot row is zero left of its leading bit, so the XOR
                // can start at the current word.
                const std::uint64_t* src = work.row_ptr(p);
                for (std::size_t k = w; k < words_per_row_; ++k) row[k] ^= src[k];
            }
        }
        return r;
    }

    /// Canonical basis of {v : M v = 0}: reduced row echelon form, one basis
    /// vector per free column (ascending), with the free bit set and pivot
    /// bits back-substituted. Size is always cols() - rank().
    std::vector<BitVector> nullspace_basis() const {
        BitMatrix work = *this;
        std::vector<std::size_t> pivot_cols;
        const std::size_t r = work.eliminate(/*reduced=*/true, &pivot_cols);

        std::vector<bool> is_pivot(n_cols_, false);
        for (std::size_t c : pivot_cols) is_pivot[c] = true;

        std::vector<BitVector> basis;
        basis.reserve(n_cols_ - r);
        for (std::size_t f = 0; f < n_cols_; ++f) {
            if (is_pivot[f]) continue;
            BitVector v(n_cols_);
            v.set(f, true);
            // Pivot row k has a leading 1 at pivot_cols[k]; its entry in the
            // free column gives the dependent bit.
            for (std::size_t k = 0; k < r; ++k)
                if (work.get(k, f)) v.set(pivot_cols[k], true);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Fixture text format: header "n_rows n_cols", then one '0'/'1' line per
    /// row with no separators.
    std::string to_text() const {
        std::ostringstream os;
        os << n_rows_ << ' ' << n_cols_ << '\n';
        for (std::size_t i = 0; i < n_rows_; ++i) {
            for (std::size_t j = 0; j < n_cols_; ++j) os << (get(i, j) ? '1' : '0');
            os << '\n';
        }
        return os.str();
    }

    static BitMatrix parse(std::istream& in) {
        std::size_t n_rows = 0;
        std::size_t n_cols = 0;
        if (!(in >> n_rows >> n_cols) || n_rows == 0 || n_cols == 0)
            throw format_error("BitMatrix: bad header, expected \"n_rows n_cols\"");
        BitMatrix m(n_rows, n_cols);
        std::string line;
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (!(in >> line) || line.size() != n_cols)
                throw format_error("BitMatrix: row " + std::to_string(i + 1) +
                                   " missing or wrong length");
            for (std::size_t j = 0; j < n_cols; ++j) {
                if (line[j] == '1') {
                    m.set(i, j, true);
                } else if (line[j] != '0') {
                    throw format_error("BitMatrix: expected '0' or '1' in row " +
                                       std::to_string(i + 1));
                }
            }
        }
        return m;
    }

    static BitMatrix parse(const std::string& text) {
        std::istringstream in(text);
        return parse(in);
    }

private:
    void check_cell(std::size_t i, std::size_t j) const {
        if (i >= n_rows_ || j >= n_cols_)
            throw parameter_error("BitMatrix: cell index out of range");
    }

    void require_square(const char* op) const {
        if (n_rows_ != n_cols_)
            throw parameter_error(std::string("BitMatrix: ") + op + " requires a square matrix");
    }

    std::uint64_t* row_ptr(std::size_t i) { return words_.data() + i * words_per_row_; }
    const std::uint64_t* row_ptr(std::size_t i) const { return words_.data() + i * words_per_row_; }

    void xor_row(std::size_t dst, std::size_t src, std::size_t from_word = 0) {
        std::uint64_t* d = row_ptr(dst);
        const std::uint64_t* s = row_ptr(src);
        for (std::size_t w = from_word; w < words_per_row_; ++w) d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::uint64_t* pa = row_ptr(a);
        std::uint64_t* pb = row_ptr(b);
        for (std::size_t w = 0; w < words_per_row_; ++w) std::swap(pa[w], pb[w]);
    }

    // In-place elimination; returns the rank. With reduced=true the matrix is
    // left in reduced row echelon form and pivot_cols (if given) receives the
    // pivot column of each pivot row in order.
    std::size_t eliminate(bool reduced, std::vector<std::size_t>* pivot_cols) {
        std::size_t pivot_row = 0;
        for (std::size_t col = 0; col < n_cols_ && pivot_row < n_rows_; ++col) {
            const std::size_t cw = col / word_bits;
            const std::uint64_t cmask = std::uint64_t{1} << (col % word_bits);
            std::size_t found = n_rows_;
            for (std::size_t i = pivot_row; i < n_rows_; ++i) {
                if (row_ptr(i)[cw] & cmask) {
                    found = i;
                    break;
                }
            }
            if (found == n_rows_) continue;
            swap_rows(found, pivot_row);
            // The pivot row is zero left of col, so XORs can start at its word.
            const std::size_t lo = reduced ? 0 : pivot_row + 1;
            for (std::size_t i = lo; i < n_rows_; ++i)
                if (i != pivot_row && (row_ptr(i)[cw] & cmask)) xor_row(i, pivot_row, cw);
            if (pivot_cols) pivot_cols->push_back(col);
            ++pivot_row;
        }
        return pivot_row;
    }

    std::size_t n_rows_;
    std::size_t n_cols_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> words_;
};

} // namespace graphcode
