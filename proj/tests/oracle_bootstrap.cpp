// One-off probe: prints oracle census tables for small parameters so expected
// values can be frozen into the unit tests. Not part of the build.

#include <iostream>

#include "oracle.hpp"

static void dump(int m, int n, int k, bool detail) {
    auto c = oracle::census(m, n, k);
    oracle::BigInt orbit_sum = 0;
    oracle::Rational stab_sum = 0;
    for (auto& cl : c.classes) {
        orbit_sum += cl.orbit_size;
        stab_sum += oracle::Rational(1, cl.stabilizer);
    }
    oracle::Rational eq2 = oracle::Rational(oracle::factorial(m) * oracle::factorial(n), 1) * stab_sum;
    std::cout << "census " << m << "x" << n << " k=" << k
              << " classes=" << c.classes.size()
              << " binom=" << c.binomial_count
              << " orbit_sum=" << orbit_sum
              << " lhs=" << c.lhs << " rhs=" << c.rhs
              << " residual=" << c.residual
              << " eq2=" << eq2
              << " mismatches=" << c.mismatch.size() << "\n";
    if (detail) {
        for (auto& cl : c.classes) {
            std::cout << "  " << cl.canonical << " orbit=" << cl.orbit_size
                      << " stab=" << cl.stabilizer << " dfp=" << cl.delta_fact_product
                      << " dr=[";
            for (auto d : cl.deltas_rows) std::cout << d << " ";
            std::cout << "] dc=[";
            for (auto d : cl.deltas_cols) std::cout << d << " ";
            std::cout << "] rdeg=[";
            for (auto d : cl.row_degrees) std::cout << d << " ";
            std::cout << "] cdeg=[";
            for (auto d : cl.col_degrees) std::cout << d << " ";
            std::cout << "]\n";
        }
        for (auto& s : c.mismatch) std::cout << "  mismatch: " << s << "\n";
    }
}

int main() {
    for (int k = 0; k <= 1; ++k) dump(1, 1, k, true);
    for (int k = 0; k <= 4; ++k) dump(2, 2, k, true);
    for (int k = 0; k <= 6; ++k) dump(2, 3, k, k == 3);
    for (int k = 0; k <= 9; ++k) dump(3, 3, k, k == 2);
    for (int k = 0; k <= 16; ++k) dump(4, 4, k, false);
    return 0;
}
