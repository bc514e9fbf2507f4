#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigraph/canonical.hpp"
#include "bigraph/combinations.hpp"
#include "bigraph/graph.hpp"
#include "bigraph/neighborhood.hpp"
#include "bigraph/numeric.hpp"

namespace bigraph {

/// One isomorphism class of m x n matrices (= bipartite graphs with sides
/// m, n), identified by its lex-minimal member.
struct IsoClassRecord {
    std::string canonical;
    BigNat orbit_size;
    BigNat stabilizer_order;
    std::vector<int> deltas_rows;
    std::vector<int> deltas_cols;
    BigNat delta_factorial_product;
    std::vector<int> row_degrees;
    std::vector<int> col_degrees;
};

/// Full class list for fixed (m, n, k) plus the exact identity evaluations.
///
/// lhs is the sum over classes of 1 / delta_factorial_product; rhs is
/// (mn)! / (m! n! k! (mn-k)!). residual = lhs - rhs is a measured result:
/// the census reports it either way, along with the classes whose stabilizer
/// order differs from the factorial product (those are what make it nonzero).
struct Census {
    int m = 0, n = 0, k = 0;
    std::vector<IsoClassRecord> classes;  // sorted by canonical string
    BigNat binomial;
    Rational lhs;
    Rational rhs;
    Rational residual;
    bool partition_ok = false;       // sum of orbit sizes == C(mn, k)
    bool stabilizer_sum_ok = false;  // m! n! * sum of 1/stabilizer == C(mn, k)
    std::vector<std::string> mismatch_classes;  // stabilizer != prod(delta!)
};

struct CensusOptions {
    std::uint64_t budget = 100'000'000;  // refuse when C(mn, k) exceeds this
    int threads = 0;                     // 0 = hardware concurrency
};

class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline BigNat binomial_count(int m, int n, int k) {
    if (m < 1 || n < 1) throw std::invalid_argument("binomial_count: m, n must be >= 1");
    if (k < 0 || k > m * n) throw std::out_of_range("binomial_count: k outside [0, mn]");
    return binomial(m * n, k);
}

inline Rational identity_rhs(int m, int n, int k) {
    if (m < 1 || n < 1) throw std::invalid_argument("identity_rhs: m, n must be >= 1");
    if (k < 0 || k > m * n) throw std::out_of_range("identity_rhs: k outside [0, mn]");
    return Rational(factorial(m * n),
                    factorial(m) * factorial(n) * factorial(k) * factorial(m * n - k));
}

inline Rational identity_lhs(const Census& c) {
    Rational sum = 0;
    for (const auto& cls : c.classes) sum += Rational(1, cls.delta_factorial_product);
    return sum;
}

namespace detail {

inline void check_census_params(int m, int n, int k, const CensusOptions& opt) {
    if (m < 1 || m > CanonEngine::max_rows)
        throw std::invalid_argument("census: m outside supported range [1, 7]");
    if (n < 1 || m * n > 64)
        throw std::invalid_argument("census: m*n exceeds 64 cells");
    if (k < 0 || k > m * n)
        throw std::out_of_range("census: k outside [0, mn]");
    if (binomial(m * n, k) > BigNat(opt.budget))
        throw BudgetExceededError("census: C(" + std::to_string(m * n) + ", " +
                                  std::to_string(k) + ") = " + binomial(m * n, k).str() +
                                  " exceeds budget " + std::to_string(opt.budget));
}

/// Canonical-key histogram over one contiguous rank range of k-subsets.
inline void bucket_chunk(const CanonEngine& eng, int k, std::uint64_t start,
                         std::uint64_t count,
                         std::unordered_map<std::uint64_t, std::uint64_t>& local) {
    if (count == 0) return;
    std::uint64_t mask = combi::unrank(start, eng.cells(), k);
    for (std::uint64_t i = 0;; ++i) {
        ++local[eng.canonical_key(mask)];
        if (i + 1 == count) break;
        mask = combi::next_mask(mask);
    }
}

}  // namespace detail

/// Exhaustive census of all C(mn, k) matrices bucketed by canonical form.
///
/// The combination space is cut into contiguous rank chunks processed
/// independently; per-chunk histograms merge by addition, and the class list
/// is sorted by canonical string, so the result does not depend on the thread
/// count. Each record is cross-checked on the fly: the number of matrices
/// seen in a bucket must equal m!n!/stabilizer, or the census aborts.
inline Census enumerate_census(int m, int n, int k, const CensusOptions& opt = {}) {
    detail::check_census_params(m, n, k, opt);
    detail::CanonEngine eng(m, n);
    const std::uint64_t total = combi::binomial_u64(m * n, k);

    int threads = opt.threads > 0 ? opt.threads
                                  : std::max(1u, std::thread::hardware_concurrency());
    if (total < 4096) threads = 1;
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> locals(threads);
    if (threads == 1) {
        detail::bucket_chunk(eng, k, 0, total, locals[0]);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t lo = total / threads * t + std::min<std::uint64_t>(t, total % threads);
            std::uint64_t len = total / threads + (static_cast<std::uint64_t>(t) < total % threads ? 1 : 0);
            pool.emplace_back([&, lo, len, t] { detail::bucket_chunk(eng, k, lo, len, locals[t]); });
        }
        for (auto& th : pool) th.join();
    }

    std::map<std::uint64_t, std::uint64_t> buckets;  // sorted key == sorted canonical
    for (auto& local : locals)
        for (auto [key, cnt] : local) buckets[key] += cnt;

    Census census;
    census.m = m;
    census.n = n;
    census.k = k;
    census.binomial = binomial(m * n, k);
    census.rhs = identity_rhs(m, n, k);

    const BigNat group = factorial(m) * factorial(n);
    BigNat orbit_total = 0;
    Rational stab_sum = 0;
    for (auto [key, seen] : buckets) {
        BinaryMatrix canon = eng.matrix_of_key(key);
        std::uint8_t colv[64];
        eng.cols_of_matrix(canon, colv);

        IsoClassRecord rec;
        rec.canonical = canon.to_string();
        rec.stabilizer_order = eng.stabilizer_from_cols(colv);
        rec.orbit_size = group / rec.stabilizer_order;
        if (rec.orbit_size * rec.stabilizer_order != group)
            throw std::logic_error("census: stabilizer does not divide the group order");
        if (rec.orbit_size != BigNat(seen))
            throw std::logic_error("census: bucket count disagrees with orbit size for " +
                                   rec.canonical);

        auto cls = classify(graph_of_matrix(canon));
        rec.deltas_rows = cls.deltas_rows;
        rec.deltas_cols = cls.deltas_cols;
        rec.delta_factorial_product = cls.delta_factorial_product;
        for (int i = 0; i < m; ++i)
            rec.row_degrees.push_back(std::popcount(canon.row_bits(i)));
        for (int j = 0; j < n; ++j) rec.col_degrees.push_back(std::popcount(std::uint64_t{colv[j]}));
        std::sort(rec.row_degrees.begin(), rec.row_degrees.end());
        std::sort(rec.col_degrees.begin(), rec.col_degrees.end());

        orbit_total += rec.orbit_size;
        stab_sum += Rational(1, rec.stabilizer_order);
        if (rec.stabilizer_order != rec.delta_factorial_product)
            census.mismatch_classes.push_back(rec.canonical);
        census.classes.push_back(std::move(rec));
    }

    census.lhs = identity_lhs(census);
    census.residual = census.lhs - census.rhs;
    census.partition_ok = orbit_total == census.binomial;
    census.stabilizer_sum_ok = Rational(group, 1) * stab_sum == Rational(census.binomial, 1);
    return census;
}

/// Identity evaluation for one (m, n, k), without the class list.
struct VerifyReport {
    int m = 0, n = 0, k = 0;
    std::size_t num_classes = 0;
    BigNat binomial;
    Rational lhs, rhs, residual;
    bool partition_ok = false;
    bool stabilizer_sum_ok = false;
    std::vector<std::string> mismatch_classes;
};

inline VerifyReport report_of_census(const Census& c) {
    VerifyReport r;
    r.m = c.m;
    r.n = c.n;
    r.k = c.k;
    r.num_classes = c.classes.size();
    r.binomial = c.binomial;
    r.lhs = c.lhs;
    r.rhs = c.rhs;
    r.residual = c.residual;
    r.partition_ok = c.partition_ok;
    r.stabilizer_sum_ok = c.stabilizer_sum_ok;
    r.mismatch_classes = c.mismatch_classes;
    return r;
}

inline VerifyReport verify_identity(int m, int n, int k, const CensusOptions& opt = {}) {
    return report_of_census(enumerate_census(m, n, k, opt));
}

/// All reports for 1 <= m <= m_max, 1 <= n <= n_max, 0 <= k <= mn, ordered by
/// (m, n, k). The budget is checked for the whole range up front.
inline std::vector<VerifyReport> sweep(int m_max, int n_max, const CensusOptions& opt = {}) {
    if (m_max < 1 || n_max < 1)
        throw std::invalid_argument("sweep: m_max, n_max must be >= 1");
    for (int m = 1; m <= m_max; ++m)
        for (int n = 1; n <= n_max; ++n)
            for (int k = 0; k <= m * n; ++k) detail::check_census_params(m, n, k, opt);

    std::vector<VerifyReport> reports;
    for (int m = 1; m <= m_max; ++m)
        for (int n = 1; n <= n_max; ++n)
            for (int k = 0; k <= m * n; ++k)
                reports.push_back(verify_identity(m, n, k, opt));
    return reports;
}

enum class CheckMode { paper, exact, both };

/// Exit status for a batch of reports: 3 if an unconditional exact check
/// failed (internal bug), else 2 if any identity residual is nonzero (a
/// mathematical finding, not a failure), else 0. The mode restricts which
/// checks participate.
inline int report_exit_code(const std::vector<VerifyReport>& reports, CheckMode mode) {
    if (mode != CheckMode::paper)
        for (const auto& r : reports)
            if (!r.partition_ok || !r.stabilizer_sum_ok) return 3;
    if (mode != CheckMode::exact)
        for (const auto& r : reports)
            if (r.residual != 0) return 2;
    return 0;
}

}  // namespace bigraph
