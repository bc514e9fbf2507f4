#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bigraph/bitmatrix.hpp"
#include "bigraph/numeric.hpp"
#include "bigraph/permutation.hpp"

namespace bigraph {

namespace detail {

/// Packed search engine for one (m, n) shape, m <= 7 and m*n <= 64.
///
/// Matrices are handled as n column values; colv[j] holds column j top to
/// bottom with row 0 in the most significant of m bits. A row permutation then
/// acts as one table lookup per column, and sorting the column values
/// ascending is exactly the column order that minimizes the row-major bit
/// string for a fixed row order. Candidate results are compared as row words
/// with column 0 most significant, again matching row-major order.
class CanonEngine {
public:
    static constexpr int max_rows = 7;

    CanonEngine(int m, int n) : m_(m), n_(n), cells_(m * n) {
        if (m < 1 || m > max_rows)
            throw std::invalid_argument("canonical: row count outside supported range [1, 7]");
        if (n < 1 || cells_ > 64)
            throw std::invalid_argument("canonical: m*n exceeds 64 cells");
        perms_ = all_permutations(m_);
        const int width = 1 << m_;
        maps_.assign(perms_.size() * static_cast<size_t>(width), 0);
        top_row_source_.resize(perms_.size());
        for (size_t p = 0; p < perms_.size(); ++p) {
            const auto& rho = perms_[p];
            for (int v = 0; v < width; ++v) {
                std::uint8_t u = 0;
                for (int i = 0; i < m_; ++i)
                    if ((v >> (m_ - 1 - i)) & 1) u |= std::uint8_t(1u << (m_ - 1 - rho(i)));
                maps_[p * width + v] = u;
            }
            top_row_source_[p] = rho.inverse()(0);
        }
        cell_col_.resize(cells_);
        cell_bit_.resize(cells_);
        for (int c = 0; c < cells_; ++c) {
            cell_col_[c] = static_cast<std::uint8_t>(c % n_);
            cell_bit_[c] = static_cast<std::uint8_t>(1u << (m_ - 1 - c / n_));
        }
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    int cells() const { return cells_; }

    /// Cell c = (c / n, c % n); bit c of mask = a at that cell.
    void cols_of_mask(std::uint64_t mask, std::uint8_t* colv) const {
        for (int j = 0; j < n_; ++j) colv[j] = 0;
        while (mask) {
            int c = std::countr_zero(mask);
            mask &= mask - 1;
            colv[cell_col_[c]] |= cell_bit_[c];
        }
    }

    void cols_of_matrix(const BinaryMatrix& a, std::uint8_t* colv) const {
        for (int j = 0; j < n_; ++j) colv[j] = 0;
        for (int i = 0; i < m_; ++i) {
            std::uint64_t bits = a.row_bits(i);
            while (bits) {
                int j = std::countr_zero(bits);
                bits &= bits - 1;
                colv[j] |= std::uint8_t(1u << (m_ - 1 - i));
            }
        }
    }

    /// Lex-minimal orbit member as row words (column 0 most significant of n bits).
    void canonical_rows(const std::uint8_t* colv, std::uint64_t* best) const {
        std::uint8_t pc[max_rows];
        int min_pc = n_ + 1;
        for (int i = 0; i < m_; ++i) {
            int c = 0;
            for (int j = 0; j < n_; ++j) c += (colv[j] >> (m_ - 1 - i)) & 1;
            pc[i] = static_cast<std::uint8_t>(c);
            min_pc = std::min(min_pc, c);
        }

        const int width = 1 << m_;
        std::uint8_t tmp[64];
        std::uint64_t cand[max_rows];
        bool have_best = false;
        for (size_t p = 0; p < perms_.size(); ++p) {
            // only a minimum-popcount row on top can win: the candidate's first
            // row sorts to 0...01...1 with popcount many ones
            if (pc[top_row_source_[p]] != min_pc) continue;

            const std::uint8_t* map = &maps_[p * static_cast<size_t>(width)];
            for (int j = 0; j < n_; ++j) tmp[j] = map[colv[j]];
            for (int a = 1; a < n_; ++a) {
                std::uint8_t v = tmp[a];
                int b = a - 1;
                while (b >= 0 && tmp[b] > v) {
                    tmp[b + 1] = tmp[b];
                    --b;
                }
                tmp[b + 1] = v;
            }

            int verdict = have_best ? 0 : -1;
            for (int i = 0; i < m_; ++i) {
                std::uint64_t w = 0;
                for (int j = 0; j < n_; ++j)
                    w = (w << 1) | ((tmp[j] >> (m_ - 1 - i)) & 1u);
                cand[i] = w;
                if (verdict == 0) {
                    if (w < best[i])
                        verdict = -1;
                    else if (w > best[i])
                        break;
                }
            }
            if (verdict == -1) {
                std::copy(cand, cand + m_, best);
                have_best = true;
            }
        }
    }

    /// Row-major packed key; integer order equals row-major lex order.
    std::uint64_t lexkey_of_rows(const std::uint64_t* rows) const {
        std::uint64_t key = 0;
        for (int i = 0; i < m_; ++i) key = (key << n_) | rows[i];
        return key;
    }

    std::uint64_t canonical_key(std::uint64_t mask) const {
        std::uint8_t colv[64];
        std::uint64_t rows[max_rows];
        cols_of_mask(mask, colv);
        canonical_rows(colv, rows);
        return lexkey_of_rows(rows);
    }

    BinaryMatrix matrix_of_key(std::uint64_t key) const {
        BinaryMatrix a(m_, n_);
        for (int i = m_ - 1; i >= 0; --i) {
            std::uint64_t w = key & ((n_ == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1);
            key >>= n_;
            for (int j = 0; j < n_; ++j)
                if ((w >> (n_ - 1 - j)) & 1u) a.set(i, j, true);
        }
        return a;
    }

    /// |{(rho, sigma) : apply_permutations(A, rho, sigma) = A}|. For each row
    /// permutation whose column multiset matches, the completing column
    /// permutations number prod over distinct column values of multiplicity!.
    BigNat stabilizer_from_cols(const std::uint8_t* colv) const {
        std::uint8_t sorted0[64];
        std::copy(colv, colv + n_, sorted0);
        std::sort(sorted0, sorted0 + n_);

        BigNat sigma_count = 1;
        int run = 1;
        for (int j = 1; j <= n_; ++j) {
            if (j < n_ && sorted0[j] == sorted0[j - 1]) {
                ++run;
            } else {
                sigma_count *= factorial(run);
                run = 1;
            }
        }

        std::uint8_t pc[max_rows];
        for (int i = 0; i < m_; ++i) {
            int c = 0;
            for (int j = 0; j < n_; ++j) c += (colv[j] >> (m_ - 1 - i)) & 1;
            pc[i] = static_cast<std::uint8_t>(c);
        }

        const int width = 1 << m_;
        std::uint8_t tmp[64];
        long long valid_rho = 0;
        for (size_t p = 0; p < perms_.size(); ++p) {
            const auto& rho = perms_[p];
            bool ok = true;
            for (int i = 0; i < m_ && ok; ++i) ok = pc[rho(i)] == pc[i];
            if (!ok) continue;
            const std::uint8_t* map = &maps_[p * static_cast<size_t>(width)];
            for (int j = 0; j < n_; ++j) tmp[j] = map[colv[j]];
            std::sort(tmp, tmp + n_);
            if (std::equal(tmp, tmp + n_, sorted0)) ++valid_rho;
        }
        return BigNat(valid_rho) * sigma_count;
    }

private:
    int m_, n_, cells_;
    std::vector<Permutation> perms_;
    std::vector<std::uint8_t> maps_;            // perms_.size() x 2^m lookup tables
    std::vector<int> top_row_source_;           // rho^{-1}(0) per permutation
    std::vector<std::uint8_t> cell_col_, cell_bit_;
};

}  // namespace detail

/// Lex-minimal matrix over all row/column permutations of A. Two matrices have
/// equal canonical forms exactly when some permutation pair maps one onto the
/// other. Supported for m <= 7, m*n <= 64.
inline BinaryMatrix canonical_form(const BinaryMatrix& a) {
    detail::CanonEngine eng(a.row_count(), a.col_count());
    std::uint8_t colv[64];
    std::uint64_t rows[detail::CanonEngine::max_rows];
    eng.cols_of_matrix(a, colv);
    eng.canonical_rows(colv, rows);
    return eng.matrix_of_key(eng.lexkey_of_rows(rows));
}

/// Number of permutation pairs fixing A.
inline BigNat stabilizer_order(const BinaryMatrix& a) {
    detail::CanonEngine eng(a.row_count(), a.col_count());
    std::uint8_t colv[64];
    eng.cols_of_matrix(a, colv);
    return eng.stabilizer_from_cols(colv);
}

/// Reference implementation: the full m!*n! loop. Kept for cross-checks at
/// small sizes; use stabilizer_order elsewhere.
inline BigNat stabilizer_order_naive(const BinaryMatrix& a) {
    BigNat count = 0;
    for (const auto& rho : all_permutations(a.row_count()))
        for (const auto& sigma : all_permutations(a.col_count()))
            if (apply_permutations(a, rho, sigma) == a) ++count;
    return count;
}

/// m! * n! / stabilizer_order(A): the number of distinct matrices reachable
/// from A by row/column permutations.
inline BigNat orbit_size(const BinaryMatrix& a) {
    BigNat group = factorial(a.row_count()) * factorial(a.col_count());
    BigNat stab = stabilizer_order(a);
    BigNat orbit = group / stab;
    if (orbit * stab != group)
        throw std::logic_error("orbit_size: stabilizer does not divide the group order");
    return orbit;
}

struct OrbitData {
    BinaryMatrix canonical;
    BigNat stabilizer_order;
    BigNat orbit_size;
};

inline OrbitData orbit_data(const BinaryMatrix& a) {
    detail::CanonEngine eng(a.row_count(), a.col_count());
    std::uint8_t colv[64];
    std::uint64_t rows[detail::CanonEngine::max_rows];
    eng.cols_of_matrix(a, colv);
    eng.canonical_rows(colv, rows);
    BigNat stab = eng.stabilizer_from_cols(colv);
    BigNat group = factorial(a.row_count()) * factorial(a.col_count());
    return OrbitData{eng.matrix_of_key(eng.lexkey_of_rows(rows)), stab, group / stab};
}

}  // namespace bigraph
