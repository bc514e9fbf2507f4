#pragma once

// Brute-force reference used by the test suites. Deliberately independent of
// include/bigraph: plain int matrices, std::next_permutation, std::set orbits,
// naive stabilizer loops over all (row perm, col perm) pairs. Slow but
// obviously correct at the sizes where it runs (mn <= 20 or so).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Perm = std::vector<int>;

struct Mat {
    int m = 0;
    int n = 0;
    std::vector<int> a;  // row-major 0/1

    int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    void set(int i, int j, int v) { a[static_cast<size_t>(i) * n + j] = v; }
};

inline Mat mat_from_mask(int m, int n, std::uint64_t mask) {
    Mat r;
    r.m = m;
    r.n = n;
    r.a.assign(static_cast<size_t>(m) * n, 0);
    for (int c = 0; c < m * n; ++c)
        if ((mask >> c) & 1u) r.a[c] = 1;
    return r;
}

inline std::uint64_t mask_of_mat(const Mat& A) {
    std::uint64_t mask = 0;
    for (int c = 0; c < A.m * A.n; ++c)
        if (A.a[c]) mask |= std::uint64_t{1} << c;
    return mask;
}

inline std::string to_string(const Mat& A) {
    std::string s;
    for (int i = 0; i < A.m; ++i) {
        if (i) s.push_back('|');
        for (int j = 0; j < A.n; ++j) s.push_back(A.at(i, j) ? '1' : '0');
    }
    return s;
}

inline std::vector<Perm> all_perms(int p) {
    Perm id(p);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(id);
    } while (std::next_permutation(id.begin(), id.end()));
    return out;
}

// b[rho[i]][sigma[j]] = a[i][j]
inline Mat apply(const Mat& A, const Perm& rho, const Perm& sigma) {
    Mat B;
    B.m = A.m;
    B.n = A.n;
    B.a.assign(A.a.size(), 0);
    for (int i = 0; i < A.m; ++i)
        for (int j = 0; j < A.n; ++j)
            if (A.at(i, j)) B.set(rho[i], sigma[j], 1);
    return B;
}

inline BigInt factorial(int p) {
    BigInt f = 1;
    for (int i = 2; i <= p; ++i) f *= i;
    return f;
}

inline BigInt binomial(int top, int k) {
    if (k < 0 || k > top) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= top - k + i;
        r /= i;
    }
    return r;
}

// Neighborhood classes of the bipartite graph of A: rows grouped by their
// column-index neighbor sets, columns grouped by row-index neighbor sets.
// Isolated vertices fall out of the same grouping (empty set key, one side).
struct Deltas {
    std::vector<int> rows;  // sorted ascending
    std::vector<int> cols;
    BigInt fact_product;    // over both sides
};

inline Deltas deltas_of(const Mat& A) {
    std::map<std::set<int>, int> row_groups, col_groups;
    for (int i = 0; i < A.m; ++i) {
        std::set<int> nb;
        for (int j = 0; j < A.n; ++j)
            if (A.at(i, j)) nb.insert(j);
        row_groups[nb]++;
    }
    for (int j = 0; j < A.n; ++j) {
        std::set<int> nb;
        for (int i = 0; i < A.m; ++i)
            if (A.at(i, j)) nb.insert(i);
        col_groups[nb]++;
    }
    Deltas d;
    d.fact_product = 1;
    for (auto& [k, c] : row_groups) {
        d.rows.push_back(c);
        d.fact_product *= factorial(c);
    }
    for (auto& [k, c] : col_groups) {
        d.cols.push_back(c);
        d.fact_product *= factorial(c);
    }
    std::sort(d.rows.begin(), d.rows.end());
    std::sort(d.cols.begin(), d.cols.end());
    return d;
}

struct ClassInfo {
    std::string canonical;
    long long orbit_size = 0;
    long long stabilizer = 0;
    std::vector<int> deltas_rows, deltas_cols;
    BigInt delta_fact_product;
    std::vector<int> row_degrees, col_degrees;
};

struct CensusResult {
    int m = 0, n = 0, k = 0;
    std::vector<ClassInfo> classes;  // sorted by canonical string
    BigInt binomial_count;
    Rational lhs, rhs, residual;
    std::vector<std::string> mismatch;  // canonical of classes with stab != prod(delta!)
};

// Exhaustive orbit partition of all m*n-cell masks with popcount k.
inline CensusResult census(int m, int n, int k) {
    const int cells = m * n;
    if (cells > 20) throw std::runtime_error("oracle census: too large");
    const auto rhos = all_perms(m);
    const auto sigmas = all_perms(n);

    CensusResult res;
    res.m = m;
    res.n = n;
    res.k = k;
    res.binomial_count = binomial(cells, k);
    res.rhs = Rational(factorial(cells), factorial(m) * factorial(n) * factorial(k) * factorial(cells - k));
    res.lhs = 0;

    std::vector<char> seen(std::uint64_t{1} << cells, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        if (__builtin_popcountll(mask) != k || seen[mask]) continue;
        Mat A = mat_from_mask(m, n, mask);

        std::set<std::uint64_t> orbit_masks;
        std::string canon;
        long long stab = 0;
        for (const auto& rho : rhos) {
            for (const auto& sigma : sigmas) {
                Mat B = apply(A, rho, sigma);
                std::uint64_t bm = mask_of_mat(B);
                orbit_masks.insert(bm);
                if (bm == mask) stab++;
                std::string s = to_string(B);
                if (canon.empty() || s < canon) canon = s;
            }
        }
        for (std::uint64_t om : orbit_masks) seen[om] = 1;

        Deltas d = deltas_of(A);
        ClassInfo ci;
        ci.canonical = canon;
        ci.orbit_size = static_cast<long long>(orbit_masks.size());
        ci.stabilizer = stab;
        ci.deltas_rows = d.rows;
        ci.deltas_cols = d.cols;
        ci.delta_fact_product = d.fact_product;
        for (int i = 0; i < m; ++i) {
            int deg = 0;
            for (int j = 0; j < n; ++j) deg += A.at(i, j);
            ci.row_degrees.push_back(deg);
        }
        for (int j = 0; j < n; ++j) {
            int deg = 0;
            for (int i = 0; i < m; ++i) deg += A.at(i, j);
            ci.col_degrees.push_back(deg);
        }
        std::sort(ci.row_degrees.begin(), ci.row_degrees.end());
        std::sort(ci.col_degrees.begin(), ci.col_degrees.end());

        res.lhs += Rational(1, d.fact_product);
        if (BigInt(stab) != d.fact_product) res.mismatch.push_back(canon);
        res.classes.push_back(std::move(ci));
    }

    std::sort(res.classes.begin(), res.classes.end(),
              [](const ClassInfo& a, const ClassInfo& b) { return a.canonical < b.canonical; });
    std::sort(res.mismatch.begin(), res.mismatch.end());
    res.residual = res.lhs - res.rhs;
    return res;
}

}  // namespace oracle
