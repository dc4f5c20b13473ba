#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdtori/cyclotomic.hpp"

using namespace bdtori;

TEST_CASE("cyclotomic polynomials match known tables") {
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    // Phi_105 is the first with a coefficient of magnitude 2.
    auto p105 = cyclotomic_polynomial(105);
    bool has_two = false;
    for (const auto& c : p105)
        if (c == -2 || c == 2) has_two = true;
    CHECK(has_two);
    CHECK(p105.size() == 49);  // phi(105) = 48
}

TEST_CASE("roots of unity satisfy their multiplicative relations") {
    for (unsigned long N : {4UL, 6UL, 12UL}) {
        Cyclotomic z = Cyclotomic::root_of_unity(N, 1);
        Cyclotomic acc = Cyclotomic::from_rational(N, 1);
        for (unsigned long k = 1; k <= N; ++k) {
            acc = acc * z;
            CHECK(acc == Cyclotomic::root_of_unity(N, k));
        }
        CHECK(acc == Cyclotomic::from_rational(N, 1));  // z^N = 1
        // Sum over all N-th roots of unity is zero.
        Cyclotomic sum(N);
        for (unsigned long k = 0; k < N; ++k) sum = sum + Cyclotomic::root_of_unity(N, k);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("i in Q(zeta_4): arithmetic identities") {
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(i * i == Cyclotomic::from_rational(4, -1));
    CHECK(i.conj() == Cyclotomic::root_of_unity(4, 3));
    CHECK(i.norm_squared() == Cyclotomic::from_rational(4, 1));
    Cyclotomic x = Cyclotomic::from_rational(4, mpq_class(2, 3)) + i;
    CHECK(x.norm_squared() == Cyclotomic::from_rational(4, mpq_class(13, 9)));
    CHECK(!x.is_rational());
    CHECK((x - i).is_rational());
    CHECK((x - i).rational_part() == mpq_class(2, 3));
}

TEST_CASE("zeta_6 relation zeta^2 = zeta - 1") {
    Cyclotomic z = Cyclotomic::root_of_unity(6, 1);
    CHECK(z * z == z - Cyclotomic::from_rational(6, 1));
    CHECK(z * z.conj() == Cyclotomic::from_rational(6, 1));
    // 1 + zeta_6^2 + zeta_6^4 = 0 (the cube roots of unity sum to zero).
    Cyclotomic s = Cyclotomic::from_rational(6, 1) + Cyclotomic::root_of_unity(6, 2) +
                   Cyclotomic::root_of_unity(6, 4);
    CHECK(s.is_zero());
}

TEST_CASE("scalar multiplication and negation") {
    Cyclotomic z = Cyclotomic::root_of_unity(12, 5);
    CHECK(z * mpq_class(0) == Cyclotomic(12));
    CHECK(z + (-z) == Cyclotomic(12));
    CHECK(z * mpq_class(3, 2) + z * mpq_class(1, 2) == z + z);
    // zeta_12^6 = -1.
    CHECK(Cyclotomic::root_of_unity(12, 6) == Cyclotomic::from_rational(12, -1));
    // Negative exponents reduce mod N.
    CHECK(Cyclotomic::root_of_unity(12, -1) == Cyclotomic::root_of_unity(12, 11));
}
