#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bdtori {

/// The N-th cyclotomic polynomial, monic, coefficients ascending.
std::vector<mpz_class> cyclotomic_polynomial(unsigned long N);

/// Exact element of the N-th cyclotomic field Q(zeta_N), represented by its
/// rational coefficient vector on the power basis 1, zeta, ..., zeta^{d-1}
/// with d = deg Phi_N. Equality is decidable; no floating point anywhere.
class Cyclotomic {
public:
    Cyclotomic() = default;
    explicit Cyclotomic(unsigned long N);

    static Cyclotomic from_rational(unsigned long N, const mpq_class& q);
    /// zeta_N^k (k arbitrary, reduced mod N then mod Phi_N).
    static Cyclotomic root_of_unity(unsigned long N, const mpz_class& k);

    unsigned long modulus() const { return N_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_rational() const;
    /// The constant coefficient; meaningful when is_rational().
    const mpq_class& rational_part() const { return coeffs_.at(0); }

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const mpq_class& s) const;
    bool operator==(const Cyclotomic& rhs) const = default;

    /// Complex conjugation: zeta -> zeta^{-1}.
    Cyclotomic conj() const;
    /// z * conj(z), a totally nonnegative element (rational when z is a
    /// scaled root of unity).
    Cyclotomic norm_squared() const { return *this * conj(); }

    std::string to_string() const;

private:
    unsigned long N_ = 1;
    std::vector<mpq_class> coeffs_;  // length deg Phi_N

    void check_compatible(const Cyclotomic& rhs) const;
};

}  // namespace bdtori
