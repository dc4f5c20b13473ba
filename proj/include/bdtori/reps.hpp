#pragma once

#include "bdtori/cover.hpp"
#include "bdtori/cyclotomic.hpp"

#include <map>
#include <optional>

namespace bdtori {

/// Finite effective model of a split cover: the base group
/// G = (Z/n x Z/(q-1))^r (valuations mod n, then unit exponents), covered by
/// mu_n with the incarnation cocycle, which factors through valuations mod n.
/// Elements are pairs (g, z) with z the mu_n exponent.
class FiniteCover {
public:
    explicit FiniteCover(const CoverSpec& spec);

    struct Elt {
        std::vector<mpz_class> g;
        mpz_class z;

        bool operator==(const Elt&) const = default;
        bool operator<(const Elt& rhs) const { return g != rhs.g ? g < rhs.g : z < rhs.z; }
    };

    const CoverSpec& spec() const { return spec_; }
    std::size_t rank() const { return spec_.rank(); }
    /// Moduli of the 2r base coordinates: n for valuations, q-1 for units.
    const std::vector<mpz_class>& moduli() const { return moduli_; }
    mpz_class base_order() const;
    mpz_class order() const { return base_order() * spec_.field.n; }
    /// Common character modulus: every element's order divides n(q-1).
    unsigned long char_modulus() const;

    Elt make(std::vector<mpz_class> g, mpz_class z) const;
    Elt identity() const;
    Elt central(const mpz_class& z) const { return make(std::vector<mpz_class>(2 * rank(), 0), z); }

    /// Cocycle exponent, evaluated through the cover's symbol arithmetic on
    /// lifted points (so any symbol option, including the mutation knob,
    /// flows through).
    mpz_class cocycle_exp(const std::vector<mpz_class>& g, const std::vector<mpz_class>& h) const;
    mpz_class commutator_exp(const std::vector<mpz_class>& g,
                             const std::vector<mpz_class>& h) const;

    Elt mul(const Elt& a, const Elt& b) const;
    Elt inv(const Elt& a) const;
    Elt pow(Elt a, mpz_class k) const;

    /// All base-group vectors (use only at small parameters).
    std::vector<std::vector<mpz_class>> base_elements() const;

private:
    CoverSpec spec_;
    std::vector<mpz_class> moduli_;
};

/// A Q/Z-valued character on an abelian subgroup of a finite cover, stored
/// as a complete value table over the subgroup.
class SubgroupCharacter {
public:
    /// The character of the trivial subgroup.
    static SubgroupCharacter trivial(const FiniteCover& G);
    /// epsilon on the central mu_n: (0, z) -> z/n.
    static SubgroupCharacter genuine_seed(const FiniteCover& G);

    bool contains(const FiniteCover::Elt& e) const { return table_.count(e) > 0; }
    const QmodZ& value(const FiniteCover::Elt& e) const;
    const std::map<FiniteCover::Elt, QmodZ>& table() const { return table_; }
    mpz_class subgroup_order() const { return mpz_class(table_.size()); }

    /// Extends by one generator using the smallest-nonnegative-lift rule
    /// (no-op if gen is already in the subgroup). The enlarged subgroup must
    /// stay abelian; this is checked.
    void extend_with(const FiniteCover& G, const FiniteCover::Elt& gen);
    /// Extends with a prescribed value; throws if inconsistent.
    void extend_with_value(const FiniteCover& G, const FiniteCover::Elt& gen, const QmodZ& v);

    bool operator==(const SubgroupCharacter&) const = default;

private:
    std::map<FiniteCover::Elt, QmodZ> table_;
};

/// All genuine characters of the center of the finite cover, in a canonical
/// order. With `unramified_only`, keeps those trivial on unit coordinates.
std::vector<SubgroupCharacter> enumerate_genuine_central_characters(const FiniteCover& G,
                                                                    bool unramified_only);

/// Extension of a character of a subgroup of a finite abelian group to the
/// whole group, generator by generator with smallest nonnegative lifts.
/// Returns the values on the invariant-factor generators of G.
std::vector<QmodZ> extend_character(const FiniteAbelianGroup& G,
                                    const std::vector<std::vector<mpz_class>>& subgroup_gens,
                                    const std::vector<QmodZ>& subgroup_values);

/// Monomial matrix: column j carries scalar e^{2 pi i scalar[j]} into row
/// perm[j].
struct MonomialMatrix {
    std::vector<std::size_t> perm;
    std::vector<QmodZ> scalar;
};

/// Genuine irreducible representation of the finite cover, induced from a
/// character of the preimage of a Lagrangian.
class GenuineIrrep {
public:
    GenuineIrrep(FiniteCover G, SubgroupCharacter chi_M, SubgroupCharacter central_char,
                 std::vector<FiniteCover::Elt> coset_reps);

    mpz_class dimension() const { return mpz_class(coset_reps_.size()); }
    const std::vector<FiniteCover::Elt>& coset_reps() const { return coset_reps_; }
    const SubgroupCharacter& central_char() const { return central_char_; }
    const SubgroupCharacter& inducing_char() const { return chi_M_; }
    const FiniteCover& group() const { return G_; }

    MonomialMatrix act(const FiniteCover::Elt& e) const;
    Cyclotomic trace(const FiniteCover::Elt& e) const;

private:
    FiniteCover G_;
    SubgroupCharacter chi_M_;
    SubgroupCharacter central_char_;
    std::vector<FiniteCover::Elt> coset_reps_;
};

/// Builds the induced irrep for a genuine central character, choosing the
/// canonical Lagrangian decomposition of T/Z.
GenuineIrrep build_irrep(const CoverSpec& spec, const SubgroupCharacter& chi);
/// Same, but with a caller-supplied Lagrangian decomposition of the central
/// quotient (for checking independence of the choice).
GenuineIrrep build_irrep_with_lagrangian(const CoverSpec& spec, const SubgroupCharacter& chi,
                                         const LagrangianPair& lag);

/// Dimension of the subspace fixed by the unit subgroup (exact integer).
mpz_class spherical_fixed_dim(const GenuineIrrep& pi);

/// Core-character data of an irrep: the central character pulled back to the
/// sharp torus along Ysharp -> Y, listed on the 2k generators y(pi), y(g)
/// for y running over the Ysharp basis; fiber_size = [Z : core].
struct PouchData {
    std::vector<QmodZ> pulled_values;
    mpz_class fiber_size = 1;

    bool operator==(const PouchData&) const = default;
};

PouchData pouch_map(const CoverSpec& spec, const GenuineIrrep& pi);

/// Inputs for the global multiplicity bound: split tori short-circuit to 1,
/// otherwise the two Tate-Shafarevich cardinalities must be supplied.
struct GlobalBoundInput {
    bool is_split = false;
    std::optional<mpz_class> ker_sha;
    std::optional<mpz_class> sha_n;
};

mpz_class global_multiplicity_bound(const GlobalBoundInput& input);

}  // namespace bdtori
