#pragma once

#include "bdtori/bdinv.hpp"
#include "bdtori/localfield.hpp"
#include "bdtori/zlattice.hpp"

namespace bdtori {

/// Requested point-level computation is not defined in this model
/// (e.g. cover arithmetic for a nonsplit torus).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A degree-n cover of a split torus over the tame field model: the datum's
/// incarnation matrix C defines the multiplication cocycle as a C-weighted
/// product of Hilbert symbols of coordinates.
struct CoverSpec {
    LocalFieldSpec field;
    BDDatum datum;
    SymbolOptions symbol;

    std::size_t rank() const { return datum.torus.rank; }
    void validate() const;
    /// Throws UnsupportedError unless the torus is split.
    void require_split() const;
};

struct CoverElement {
    TorusPoint point;
    MuN zeta;

    bool operator==(const CoverElement&) const = default;
};

CoverElement cover_identity(const CoverSpec& spec);

/// The multiplication cocycle sigma_C(s, t) = prod_ij hilbert(s_i, t_j)^{C_ij}.
MuN cocycle(const CoverSpec& spec, const TorusPoint& s, const TorusPoint& t);

/// (s, z1)(t, z2) = (st, z1 z2 sigma_C(s, t)).
CoverElement multiply(const CoverSpec& spec, const CoverElement& a, const CoverElement& b);

CoverElement cover_inverse(const CoverSpec& spec, const CoverElement& a);

/// Commutator pairing of the extension: sigma_C(t1,t2) / sigma_C(t2,t1)
/// = prod_ij hilbert(a_i, b_j)^{B_ij} with B = C + C^T. Alternating and
/// bimultiplicative; trivial on each slot iff the other lies in the center.
MuN commutator(const CoverSpec& spec, const TorusPoint& t1, const TorusPoint& t2);

/// Effective coordinates: T modulo principal units is (Z x Z/(q-1))^r with
/// generators pi_i (valuation 1 at slot i) and g_i (residue generator at
/// slot i). Vectors of length 2r list the r valuation coordinates first.
TorusPoint point_from_effective(const CoverSpec& spec, const std::vector<mpz_class>& coords);
std::vector<mpz_class> effective_coords(const TorusPoint& t);
TorusPoint effective_generator(const CoverSpec& spec, std::size_t index);  // 0..2r-1

/// Alternating Q/Z-valued pairing on a finite abelian group, stored as a
/// Gram matrix on its invariant-factor generators.
struct AlternatingForm {
    FiniteAbelianGroup group;
    std::vector<std::vector<QmodZ>> gram;

    QmodZ eval(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) const;
    bool is_nondegenerate() const;
};

/// Center data of a split cover, computed on the effective group: zdag is
/// the radical of the commutator form (a sublattice of Z^{2r} containing the
/// (q-1) unit relations), core is the image of the sharp torus, and the
/// quotient T/Z carries the induced nondegenerate alternating pairing.
struct CenterData {
    Lattice zdag;               // in Z^{2r} effective coordinates
    Lattice core;               // ditto
    FiniteAbelianGroup quotient;  // T_eff / zdag
    QuotientResult quotient_proj;
    AlternatingForm pairing;    // commutator pairing on the quotient
    mpz_class zind;             // sqrt of #quotient
    mpz_class cind;             // [zdag : core], 1 in the split case

    /// Class of an effective coordinate vector in the quotient.
    std::vector<mpz_class> project(const std::vector<mpz_class>& coords) const;
};

CenterData center(const CoverSpec& spec);

bool is_central(const CoverSpec& spec, const TorusPoint& t);
bool is_in_core(const CoverSpec& spec, const TorusPoint& t);

/// A Lagrangian decomposition of a finite group with nondegenerate
/// alternating pairing: generators of two isotropic subgroups in perfect
/// duality whose product is the whole group.
struct LagrangianPair {
    std::vector<std::vector<mpz_class>> L;
    std::vector<std::vector<mpz_class>> Lstar;
};

/// Greedy Darboux reduction with deterministic tie-breaking: the
/// lexicographically smallest element of maximal pairing order is split off
/// with its lexicographically smallest dual partner (rescaled to pair as
/// 1/e), then the orthogonal complement is processed the same way.
/// Throws std::invalid_argument if the pairing is degenerate.
LagrangianPair lagrangian_decomposition(const AlternatingForm& form);

/// All elements of the subgroup generated by `gens` inside `group`.
std::vector<std::vector<mpz_class>> subgroup_elements(
    const FiniteAbelianGroup& group, const std::vector<std::vector<mpz_class>>& gens);

}  // namespace bdtori
