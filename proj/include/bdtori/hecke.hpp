#pragma once

#include "bdtori/cover.hpp"
#include "bdtori/cyclotomic.hpp"

#include <map>
#include <optional>

namespace bdtori {

/// Spherical Hecke data: the support lattice Lambda = Ysharp^sigma together
/// with the cover it lives on. `with_lambda` exists for negative controls
/// (forcing a larger, invalid support to watch commutativity fail).
struct HeckeSpec {
    CoverSpec cover;
    Lattice lambda;

    static HeckeSpec standard(const CoverSpec& cover);
    static HeckeSpec with_lambda(const CoverSpec& cover, Lattice lambda);

    void require_member(const std::vector<mpz_class>& y) const;
};

/// The canonical representative of y in the torus: y(pi), unit parts trivial.
TorusPoint lambda_rep(const HeckeSpec& spec, const std::vector<mpz_class>& y);

/// Closed-form cocycle on Lambda: the mu_n element (-1)^{(y1^T C y2)(q-1)/n},
/// evaluated as zeta^{e * y1^T C y2} with e the exponent of -1.
MuN cocycle_closed(const HeckeSpec& spec, const std::vector<mpz_class>& y1,
                   const std::vector<mpz_class>& y2);

/// Cocycle read off the cover itself: multiply the canonical representatives
/// and take the mu_n discrepancy against the representative of y1 + y2.
MuN cocycle_oracle(const HeckeSpec& spec, const std::vector<mpz_class>& y1,
                   const std::vector<mpz_class>& y2);

/// Same quotient cocycle computed from unit-carrying representatives
/// y_i(pi) * w_i (and w12 assigned to y1 + y2): the discrepancy corrected by
/// the section's trivialization over the unit subgroup. Differs from the
/// canonical cocycle by the explicit coboundary of phi(y) = y^T C w(y).
MuN cocycle_oracle_with_units(const HeckeSpec& spec, const std::vector<mpz_class>& y1,
                              const std::vector<mpz_class>& y2,
                              const std::vector<mpz_class>& w1,
                              const std::vector<mpz_class>& w2,
                              const std::vector<mpz_class>& w12);

/// The residue of the formal symbol {u^a, u^b} on the formal disk model:
/// (-1)^{ab} as a residue-field unit.
TameElement residue_uniformizer_symbol(const LocalFieldSpec& field, const mpz_class& a,
                                       const mpz_class& b);

/// Cocycle through the formal-residue path: C-weighted residues of
/// uniformizer symbols pushed to mu_n by h_n(x) = x^{(q-1)/n}.
MuN cocycle_bd(const HeckeSpec& spec, const std::vector<mpz_class>& y1,
               const std::vector<mpz_class>& y2);

/// epsilon(zeta^k) as an exact element of Q(zeta_n).
Cyclotomic epsilon(const HeckeSpec& spec, const MuN& z);

/// Finitely supported cyclotomic-coefficient function on Lambda.
struct HeckeElement {
    std::map<std::vector<mpz_class>, Cyclotomic> support;

    bool operator==(const HeckeElement&) const = default;
};

HeckeElement hecke_delta(const HeckeSpec& spec, const std::vector<mpz_class>& y);
HeckeElement hecke_add(const HeckeSpec& spec, const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_scale(const HeckeSpec& spec, const Cyclotomic& s, const HeckeElement& a);

/// Twisted convolution: bilinear extension of
/// delta_{y1} * delta_{y2} = epsilon(cocycle(y1, y2)) delta_{y1 + y2}.
HeckeElement convolve(const HeckeSpec& spec, const HeckeElement& f1, const HeckeElement& f2);

/// Checks commutativity of the twisted algebra on all y in Lambda with
/// coordinates bounded by `bound`, including the centrality of the canonical
/// representatives against the unit subgroup (the operative failure mode
/// when Lambda is forced beyond Ysharp).
bool is_commutative(const HeckeSpec& spec, long bound);

/// If val_T(t) lies outside Lambda, returns a unit point k with
/// commutator(k, t) nontrivial (the support-theorem witness); nullopt if
/// val_T(t) is in Lambda.
std::optional<TorusPoint> support_witness(const HeckeSpec& spec, const TorusPoint& t);

/// Automorphism compatibility value Theta(w)^{<x,y>(q-1)/n}, via the Hilbert
/// symbol on representatives and via the residue/h_n path respectively.
MuN automorphism_action_hilbert(const HeckeSpec& spec, const std::vector<mpz_class>& x,
                                const TameElement& w, const std::vector<mpz_class>& y);
MuN automorphism_action_bd(const HeckeSpec& spec, const std::vector<mpz_class>& x,
                           const TameElement& w, const std::vector<mpz_class>& y);
/// Both paths, asserted equal (throws std::logic_error on mismatch).
MuN automorphism_action(const HeckeSpec& spec, const std::vector<mpz_class>& x,
                        const TameElement& w, const std::vector<mpz_class>& y);

/// All lattice points of Lambda with every coordinate in [-bound, bound].
std::vector<std::vector<mpz_class>> lambda_box(const HeckeSpec& spec, long bound);

}  // namespace bdtori
