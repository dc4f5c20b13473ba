#pragma once

#include "bdtori/zlattice.hpp"

#include <stdexcept>

namespace bdtori {

/// A torus over the base field, given by its cocharacter lattice Y = Z^r with
/// a finite-order unimodular Frobenius action. Split means sigma = identity.
struct TorusDatum {
    std::size_t rank = 0;
    IntMatrix frobenius;       // r x r, unimodular, frobenius^order = identity
    std::size_t order = 1;     // an exponent of the Frobenius action (need not be minimal)

    bool is_split() const { return frobenius == IntMatrix::identity(rank); }
    void validate() const;
    static TorusDatum split(std::size_t rank);
};

/// Degree-n cover datum: the quadratic form Q(y) = y^T C y on Y, incarnated
/// by an integer matrix C, together with the degree n.
struct BDDatum {
    TorusDatum torus;
    IntMatrix C;       // r x r
    mpz_class n = 1;

    /// The Z-valued symmetric form B = C + C^T (so beta = B / n).
    IntMatrix B() const { return C + C.transpose(); }
    void validate() const;
};

/// The sharp sublattices of a datum. Xsharp is stored in (1/n)X coordinates:
/// an integer lattice L with actual X-sharp = L/n, so X itself is nZ^r there.
struct SharpData {
    IntMatrix B;
    mpz_class n;
    Lattice Ysharp;         // inside Y = Z^r
    Lattice Xsharp_scaled;  // inside Z^r, meaning Xsharp_scaled / n
};

/// Character-lattice quotients of the finite group schemes attached to a
/// datum: mu = Xsharp/X, nu = (1/n)X / Xsharp, nu_hat = Ysharp/nY,
/// t_n = (1/n)X / X, t_hat_n = Y/nY.
struct FiniteInvariants {
    FiniteAbelianGroup mu, nu, nu_hat, t_n, t_hat_n;
};

/// The multiplicative-type group R: its character group V = (X + Y) modulo
/// the relations (n*delta(y), -n*y), with the two structure maps
/// p (pullback X -> V of the projection R -> T) and e (V -> (1/n)X).
struct RGroupData {
    Presentation V;                    // gens = 2r (X coords then Y coords)
    std::size_t free_rank = 0;         // must equal r
    FiniteAbelianGroup component_group;  // isomorphic to nu_hat
    GroupHom map_p;  // Z^r (X) -> V
    GroupHom map_e;  // V -> Z^r ((1/n)X coordinates)
};

/// beta(y1, y2) = y1^T (C + C^T) y2 / n, the Q-valued symmetric form.
mpq_class beta(const BDDatum& d, const std::vector<mpz_class>& y1,
               const std::vector<mpz_class>& y2);

/// The sublattice {y : M y = 0 mod n} of Z^(cols of M).
Lattice preimage_mod(const IntMatrix& M, const mpz_class& n);

SharpData sharp_lattices(const BDDatum& d);

/// The isomorphism Y/Ysharp -> Xsharp/X induced by delta = B/n, with both
/// sides in invariant-factor form. Throws std::logic_error if the induced map
/// fails to be bijective (an internal invariant violation, never valid input).
struct XqnResult {
    FiniteAbelianGroup domain;    // Y / Ysharp
    FiniteAbelianGroup codomain;  // Xsharp / X
    GroupHom iso;
};
XqnResult xqn_isomorphism(const BDDatum& d);

FiniteInvariants finite_invariants(const BDDatum& d);

RGroupData r_group(const BDDatum& d);

bool is_sharp(const BDDatum& d);

/// Central index at the lattice level: #(Y^sigma / Ysharp^sigma).
mpz_class zind_lattice(const BDDatum& d);

/// Upper bound on the core index: #H^1_[n] * #nu(F) * #mu(F) / #T-hat_[n](F),
/// with F-point counts taken as sigma-coinvariant orders (unramified model).
mpz_class cind_bound(const BDDatum& d);

}  // namespace bdtori
