#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace bdtori {

/// Orientation of the degree-n tame symbol. The two conventions are pointwise
/// inverse; `inverse` is the one matching both displayed symbol values
/// Hilb(pi, pi) and Hilb(pi, w) simultaneously (see README).
enum class SymbolConvention { standard, inverse };

/// Knobs threaded through symbol evaluation. `mutate_vv_sign` deliberately
/// drops the (-1)^{v(a)v(b)} factor: used only by the self-test's mutation
/// check, which must then fail the cocycle agreement suite.
struct SymbolOptions {
    SymbolConvention convention = SymbolConvention::inverse;
    bool mutate_vv_sign = false;
};

/// Tame model of a nonarchimedean local field with residue field F_q and a
/// fixed degree n | q - 1. F^x modulo principal units is Z x Z/(q-1) via
/// (valuation, exponent of a fixed generator g of the residue units).
struct LocalFieldSpec {
    mpz_class q;  // residue cardinality, >= 2
    mpz_class n;  // cover degree, n | q - 1

    void validate() const {
        if (q < 2) throw std::invalid_argument("field: q must be >= 2");
        if (n < 1 || (q - 1) % n != 0) throw std::invalid_argument("field: n must divide q-1");
    }
    /// Exponent of -1 in the residue units: (q-1)/2 for odd q, else 0.
    mpz_class minus_one_exp() const { return q % 2 == 1 ? mpz_class((q - 1) / 2) : mpz_class(0); }
};

/// Element of F^x/(1 + m): a uniformizer power times a Teichmueller unit g^u.
struct TameElement {
    mpz_class val = 0;
    mpz_class unit_exp = 0;  // canonical: 0 <= unit_exp < q-1

    bool operator==(const TameElement&) const = default;
};

TameElement tame_canonical(const LocalFieldSpec& spec, const mpz_class& val,
                           const mpz_class& unit_exp);
TameElement tame_mul(const LocalFieldSpec& spec, const TameElement& a, const TameElement& b);
TameElement tame_inv(const LocalFieldSpec& spec, const TameElement& a);
TameElement tame_pow(const LocalFieldSpec& spec, const TameElement& a, const mpz_class& k);
inline TameElement uniformizer() { return {1, 0}; }
inline TameElement residue_generator() { return {0, 1}; }

/// Element of mu_n: zeta^exponent with zeta = g^{(q-1)/n}, exponent mod n.
struct MuN {
    mpz_class exponent = 0;

    bool is_trivial() const { return exponent == 0; }
    bool operator==(const MuN&) const = default;
};

MuN mun_canonical(const LocalFieldSpec& spec, const mpz_class& exponent);
MuN mun_mul(const LocalFieldSpec& spec, const MuN& a, const MuN& b);
MuN mun_inv(const LocalFieldSpec& spec, const MuN& a);
MuN mun_pow(const LocalFieldSpec& spec, const MuN& a, const mpz_class& k);

/// Degree-n tame Hilbert symbol. With c = (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)}
/// reduced to the residue field, the `standard` orientation returns
/// c^{(q-1)/n} as an element of mu_n; `inverse` returns its inverse.
MuN hilbert(const LocalFieldSpec& spec, const TameElement& a, const TameElement& b,
            const SymbolOptions& opts = {});

/// True iff a is an n-th power in F^x (principal units are uniquely
/// n-divisible in the tame case, so this reduces to exponent divisibility).
bool is_nth_power(const LocalFieldSpec& spec, const TameElement& a);

/// Point of a split rank-r torus, in coordinates dual to the Y basis.
struct TorusPoint {
    std::vector<TameElement> coords;

    std::size_t rank() const { return coords.size(); }
    bool operator==(const TorusPoint&) const = default;
};

TorusPoint torus_identity(std::size_t rank);
TorusPoint torus_mul(const LocalFieldSpec& spec, const TorusPoint& a, const TorusPoint& b);
TorusPoint torus_inv(const LocalFieldSpec& spec, const TorusPoint& a);

/// Coordinatewise valuation vector: the image of t under val_T, in Y.
std::vector<mpz_class> val_T(const TorusPoint& t);

/// x(t) = prod t_i^{x_i} for a character x in X (coordinates dual to t's).
TameElement evaluate_character(const LocalFieldSpec& spec, const std::vector<mpz_class>& x,
                               const TorusPoint& t);

/// Hilbert pairing of a point of T with a point of the dual torus:
/// prod_i hilbert(t_i, that_i). Throws on rank mismatch.
MuN hilbert_pairing_T(const LocalFieldSpec& spec, const TorusPoint& t, const TorusPoint& t_hat,
                      const SymbolOptions& opts = {});

}  // namespace bdtori
