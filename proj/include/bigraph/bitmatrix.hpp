#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigraph/permutation.hpp"

namespace bigraph {

/// Dense m x n 0/1 matrix with one 64-bit word per row.
///
/// Entry (i, j) lives in bit j of row word i (LSB = column 0). The textual
/// interchange form joins rows of '0'/'1' characters with '|', row 0 first
/// and column 0 leftmost, e.g. "01|10". All indices are 0-based.
class BinaryMatrix {
public:
    static constexpr int max_cols = 64;

    BinaryMatrix(int m, int n) : m_(m), n_(n), rows_(check_dims(m, n)) {}

    static BinaryMatrix from_positions(int m, int n,
                                       const std::vector<std::pair<int, int>>& ones) {
        BinaryMatrix a(m, n);
        for (auto [i, j] : ones) {
            if (i < 0 || i >= m || j < 0 || j >= n)
                throw std::invalid_argument("BinaryMatrix: position out of range");
            if (a.get(i, j))
                throw std::invalid_argument("BinaryMatrix: duplicate position");
            a.set(i, j, true);
        }
        return a;
    }

    /// Parses the "01|10" form. Rows must be non-empty, equal length, 0/1 only.
    static BinaryMatrix parse(std::string_view text) {
        std::vector<std::uint64_t> rows;
        std::uint64_t row = 0;
        int col = 0, n = -1;
        auto finish_row = [&] {
            if (col == 0) throw std::invalid_argument("matrix string: empty row");
            if (n < 0) n = col;
            if (col != n) throw std::invalid_argument("matrix string: ragged rows");
            rows.push_back(row);
            row = 0;
            col = 0;
        };
        for (char c : text) {
            if (c == '|') {
                finish_row();
            } else if (c == '0' || c == '1') {
                if (col >= max_cols)
                    throw std::invalid_argument("matrix string: row exceeds word width");
                if (c == '1') row |= std::uint64_t{1} << col;
                ++col;
            } else {
                throw std::invalid_argument("matrix string: invalid character");
            }
        }
        finish_row();
        BinaryMatrix a(static_cast<int>(rows.size()), n);
        a.rows_ = std::move(rows);
        return a;
    }

    int row_count() const { return m_; }
    int col_count() const { return n_; }

    bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }

    void set(int i, int j, bool v) {
        if (v)
            rows_[i] |= std::uint64_t{1} << j;
        else
            rows_[i] &= ~(std::uint64_t{1} << j);
    }

    std::uint64_t row_bits(int i) const { return rows_[i]; }

    int count_ones() const {
        int k = 0;
        for (auto r : rows_) k += std::popcount(r);
        return k;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(static_cast<size_t>(m_) * (n_ + 1));
        for (int i = 0; i < m_; ++i) {
            if (i) s.push_back('|');
            for (int j = 0; j < n_; ++j) s.push_back(get(i, j) ? '1' : '0');
        }
        return s;
    }

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    static std::vector<std::uint64_t> check_dims(int m, int n) {
        if (m < 1 || n < 1) throw std::invalid_argument("BinaryMatrix: m, n must be >= 1");
        if (n > max_cols) throw std::invalid_argument("BinaryMatrix: n exceeds word width");
        return std::vector<std::uint64_t>(static_cast<size_t>(m), 0);
    }

    int m_, n_;
    std::vector<std::uint64_t> rows_;
};

/// Row-major bit-string order: row 0 compared first, column 0 most significant
/// within a row. Coincides with std::string order on the "01|10" form.
inline std::strong_ordering lex_compare(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.row_count() != b.row_count() || a.col_count() != b.col_count())
        throw std::invalid_argument("lex_compare: dimension mismatch");
    for (int i = 0; i < a.row_count(); ++i) {
        std::uint64_t ra = a.row_bits(i), rb = b.row_bits(i);
        if (ra == rb) continue;
        int j = std::countr_zero(ra ^ rb);  // first differing column
        return ((ra >> j) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

/// B with b[rho(i)][sigma(j)] = a[i][j]; preserves the number of ones.
inline BinaryMatrix apply_permutations(const BinaryMatrix& a, const Permutation& rho,
                                       const Permutation& sigma) {
    if (rho.size() != a.row_count() || sigma.size() != a.col_count())
        throw std::invalid_argument("apply_permutations: size mismatch");
    BinaryMatrix b(a.row_count(), a.col_count());
    for (int i = 0; i < a.row_count(); ++i) {
        std::uint64_t bits = a.row_bits(i);
        while (bits) {
            int j = std::countr_zero(bits);
            bits &= bits - 1;
            b.set(rho(i), sigma(j), true);
        }
    }
    return b;
}

inline BinaryMatrix transpose(const BinaryMatrix& a) {
    BinaryMatrix t(a.col_count(), a.row_count());
    for (int i = 0; i < a.row_count(); ++i)
        for (int j = 0; j < a.col_count(); ++j)
            if (a.get(i, j)) t.set(j, i, true);
    return t;
}

inline BinaryMatrix complement(const BinaryMatrix& a) {
    BinaryMatrix c(a.row_count(), a.col_count());
    for (int i = 0; i < a.row_count(); ++i)
        for (int j = 0; j < a.col_count(); ++j)
            c.set(i, j, !a.get(i, j));
    return c;
}

}  // namespace bigraph
