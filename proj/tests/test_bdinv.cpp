#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdtori/bdinv.hpp"

#include <random>

using namespace bdtori;

namespace {

BDDatum split_datum(const std::vector<std::vector<long>>& C, long n) {
    BDDatum d;
    d.torus = TorusDatum::split(C.size());
    d.C = IntMatrix::from_rows(C);
    d.n = n;
    d.validate();
    return d;
}

// Brute-force oracle for Ysharp membership: y is sharp iff B y = 0 mod n.
bool sharp_oracle(const IntMatrix& B, const mpz_class& n, const std::vector<mpz_class>& y) {
    for (const auto& c : B.apply(y))
        if (c % n != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("beta values on rank-1 data") {
    CHECK(beta(split_datum({{1}}, 4), {1}, {1}) == mpq_class(1, 2));
    CHECK(beta(split_datum({{1}}, 2), {1}, {1}) == 1);
    CHECK(beta(split_datum({{1}}, 4), {0}, {1}) == 0);
    // Symmetry on a nonsymmetric incarnation.
    BDDatum d = split_datum({{1, 2}, {0, 3}}, 5);
    CHECK(beta(d, {1, 0}, {0, 1}) == beta(d, {0, 1}, {1, 0}));
}

TEST_CASE("sharp lattices against the residue brute force") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> c_d(-5, 5), n_d(1, 12), r_d(1, 3);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = r_d(rng);
        std::vector<std::vector<long>> C(r, std::vector<long>(r));
        for (auto& row : C)
            for (auto& e : row) e = c_d(rng);
        BDDatum d = split_datum(C, n_d(rng));
        SharpData s = sharp_lattices(d);
        // Exhaustive check over a box: membership agrees with the B mod n oracle.
        std::vector<long> cur(r, -3);
        for (;;) {
            std::vector<mpz_class> y(cur.begin(), cur.end());
            CHECK(s.Ysharp.contains(y) == sharp_oracle(s.B, d.n, y));
            std::size_t i = 0;
            while (i < r && ++cur[i] > 3) cur[i++] = -3;
            if (i == r) break;
        }
    }
}

TEST_CASE("known sharp lattices") {
    CHECK(sharp_lattices(split_datum({{1}}, 2)).Ysharp == Lattice::full(1));
    SharpData s4 = sharp_lattices(split_datum({{1}}, 4));
    CHECK(s4.Ysharp == Lattice(1, IntMatrix::from_rows({{2}})));
    // Xsharp in scaled coordinates: (1/2)Z inside (1/4)Z is 2Z scaled by 4.
    CHECK(s4.Xsharp_scaled == Lattice(1, IntMatrix::from_rows({{2}})));
    // C = 0: Ysharp = Y, so its dual enlargement collapses to Xsharp = X
    // (scaled coordinates: 6Z inside Z representing X inside (1/6)X).
    SharpData s0 = sharp_lattices(split_datum({{0}}, 6));
    CHECK(s0.Ysharp == Lattice::full(1));
    CHECK(s0.Xsharp_scaled == Lattice(1, IntMatrix::from_rows({{6}})));
}

TEST_CASE("xqn isomorphism on known data") {
    XqnResult x = xqn_isomorphism(split_datum({{1}}, 4));
    CHECK(x.domain.invariant_factors() == std::vector<mpz_class>{2});
    CHECK(x.codomain.invariant_factors() == std::vector<mpz_class>{2});
    XqnResult x0 = xqn_isomorphism(split_datum({{0}}, 5));
    CHECK(x0.domain.is_trivial());
    CHECK(x0.codomain.is_trivial());
    XqnResult x3 = xqn_isomorphism(split_datum({{1, 0}, {0, 3}}, 3));
    CHECK(x3.domain.order() == x3.codomain.order());
    for (const auto& f : x3.domain.invariant_factors()) CHECK(f == 3);
}

TEST_CASE("finite invariants on known data") {
    FiniteInvariants f = finite_invariants(split_datum({{1}}, 4));
    CHECK(f.mu.invariant_factors() == std::vector<mpz_class>{2});
    CHECK(f.nu.invariant_factors() == std::vector<mpz_class>{2});
    CHECK(f.nu_hat.invariant_factors() == std::vector<mpz_class>{2});
    CHECK(f.t_n.invariant_factors() == std::vector<mpz_class>{4});
    CHECK(f.t_hat_n.invariant_factors() == std::vector<mpz_class>{4});

    FiniteInvariants f0 = finite_invariants(split_datum({{0}}, 3));
    CHECK(f0.mu.is_trivial());
    CHECK(f0.nu.invariant_factors() == std::vector<mpz_class>{3});
    CHECK(f0.t_hat_n.invariant_factors() == std::vector<mpz_class>{3});

    FiniteInvariants f2 = finite_invariants(split_datum({{1}}, 2));
    CHECK(f2.mu.is_trivial());
    CHECK(f2.nu.invariant_factors() == std::vector<mpz_class>{2});
}

TEST_CASE("r group component groups") {
    CHECK(r_group(split_datum({{0}}, 4)).component_group.invariant_factors() ==
          std::vector<mpz_class>{4});
    CHECK(r_group(split_datum({{1}}, 4)).component_group.invariant_factors() ==
          std::vector<mpz_class>{2});
    CHECK(r_group(split_datum({{1}}, 2)).component_group.invariant_factors() ==
          std::vector<mpz_class>{2});
    RGroupData r = r_group(split_datum({{1, 1}, {0, 2}}, 6));
    CHECK(r.free_rank == 2);
    CHECK(r.component_group == finite_invariants(split_datum({{1, 1}, {0, 2}}, 6)).nu_hat);
    CHECK(r.map_p.is_well_defined());
    CHECK(r.map_e.is_well_defined());
}

TEST_CASE("sharpness and lattice-level central index") {
    CHECK(is_sharp(split_datum({{1}}, 2)));
    CHECK(!is_sharp(split_datum({{1}}, 4)));
    CHECK(is_sharp(split_datum({{0}}, 7)));
    CHECK(zind_lattice(split_datum({{1}}, 4)) == 2);
    CHECK(zind_lattice(split_datum({{1}}, 2)) == 1);
    // Swap Frobenius on rank 2 with C = I, n = 4: fixed lattice Z(1,1),
    // sharp fixed lattice 2Z(1,1), index 2.
    BDDatum d;
    d.torus.rank = 2;
    d.torus.frobenius = IntMatrix::from_rows({{0, 1}, {1, 0}});
    d.torus.order = 2;
    d.C = IntMatrix::identity(2);
    d.n = 4;
    d.validate();
    CHECK(zind_lattice(d) == 2);
}

TEST_CASE("cind bound values") {
    CHECK(cind_bound(split_datum({{1}}, 2)) == 1);
    CHECK(cind_bound(split_datum({{0}}, 5)) == 1);
    CHECK(cind_bound(split_datum({{0, 0}, {0, 0}}, 6)) == 1);
    // Nonsplit: sign action on rank 1, C = [1], n = 2; the bound stays >= 1.
    BDDatum d;
    d.torus.rank = 1;
    d.torus.frobenius = IntMatrix::from_rows({{-1}});
    d.torus.order = 2;
    d.C = IntMatrix::from_rows({{1}});
    d.n = 2;
    d.validate();
    CHECK(cind_bound(d) >= 1);
}

TEST_CASE("datum validation rejects bad input") {
    BDDatum d;
    d.torus.rank = 1;
    d.torus.frobenius = IntMatrix::from_rows({{2}});  // not unimodular
    d.torus.order = 1;
    d.C = IntMatrix::from_rows({{1}});
    d.n = 2;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
    // Frobenius not preserving the form.
    BDDatum e;
    e.torus.rank = 2;
    e.torus.frobenius = IntMatrix::from_rows({{0, 1}, {1, 0}});
    e.torus.order = 2;
    e.C = IntMatrix::from_rows({{1, 0}, {0, 2}});
    e.n = 3;
    CHECK_THROWS_AS(e.validate(), std::invalid_argument);
}
