#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdtori/intmat.hpp"

#include <random>

using namespace bdtori;

TEST_CASE("smith normal form of known matrices") {
    // Invariant factors via minor gcds: d1 = gcd(entries) = 2, d1*d2 = gcd of
    // 2x2 minors = 4, d1*d2*d3 = |det| = 624, so the factors are 2, 2, 156.
    IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SmithResult s = smith_normal_form(m);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 2);
    CHECK(s.D.at(2, 2) == 156);
    CHECK(s.U * s.D * s.V == m);
    CHECK(s.rank == 3);
}

TEST_CASE("smith normal form roundtrip on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 6), entry(-20, 20);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        SmithResult s = smith_normal_form(m);
        CHECK(s.U * s.D * s.V == m);
        CHECK(s.U.is_unimodular());
        CHECK(s.V.is_unimodular());
        CHECK(s.U_inv * s.U == IntMatrix::identity(r));
        CHECK(s.V_inv * s.V == IntMatrix::identity(c));
        for (std::size_t i = 0; i + 1 < std::min(r, c); ++i) {
            CHECK(s.D.at(i, i) >= 0);
            if (s.D.at(i, i) != 0) CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
            if (s.D.at(i, i) == 0) CHECK(s.D.at(i + 1, i + 1) == 0);
        }
        // Off-diagonal entries vanish.
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.D.at(i, j) == 0);
    }
}

TEST_CASE("determinant vs cofactor oracle on 3x3") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int t = 0; t < 100; ++t) {
        IntMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = entry(rng);
        mpz_class expect = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        CHECK(m.det() == expect);
    }
}

TEST_CASE("hermite normal form is canonical for the row space") {
    // Two generating sets of the same lattice must produce identical HNF.
    IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
    IntMatrix b = IntMatrix::from_rows({{2, 3}, {2, -3}, {4, 3}});
    CHECK(hnf_rows(a) == hnf_rows(b));
    IntMatrix h = hnf_rows(a);
    CHECK(h.rows() == 2);
    CHECK(h.at(0, 0) == 2);
    CHECK(h.at(1, 1) == 3);
}

TEST_CASE("integer solve agrees with substitution") {
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {1, 3}});
    auto x = solve_integer(a, {6, 4});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == std::vector<mpz_class>{6, 4});
    // 2x + 4y = 3 has no integer solution.
    CHECK(!solve_integer(IntMatrix::from_rows({{2, 4}}), {3}).has_value());
}

TEST_CASE("kernel basis spans the kernel exactly") {
    IntMatrix a = IntMatrix::from_rows({{1, 2, 3}});
    IntMatrix k = kernel_basis_rows(a);
    CHECK(k.rows() == 2);
    for (std::size_t i = 0; i < k.rows(); ++i) {
        std::vector<mpz_class> row(3);
        for (std::size_t j = 0; j < 3; ++j) row[j] = k.at(i, j);
        CHECK(a.apply(row) == std::vector<mpz_class>{0});
    }
    // Exhaustive membership oracle in a small box: x in ker iff x in row span.
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y)
            for (long z = -3; z <= 3; ++z) {
                bool in_ker = (x + 2 * y + 3 * z == 0);
                bool in_span = solve_integer(k.transpose(), {x, y, z}).has_value();
                CHECK(in_ker == in_span);
            }
}

TEST_CASE("unimodular inverse and multiplicative order") {
    IntMatrix s = IntMatrix::from_rows({{0, -1}, {1, 0}});  // rotation by 90 degrees
    CHECK(s.is_unimodular());
    CHECK(s.multiplicative_order() == 4);
    CHECK(s * s.unimodular_inverse() == IntMatrix::identity(2));
    CHECK(s.pow(4) == IntMatrix::identity(2));
    CHECK(IntMatrix::identity(3).multiplicative_order() == 1);
}
