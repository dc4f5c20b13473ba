#pragma once

#include "bdtori/intmat.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace bdtori {

/// Element of Q/Z in canonical reduced form, 0 <= num < den, gcd(num, den) = 1.
/// Addition wraps mod 1. Used as the additive model of roots of unity.
class QmodZ {
public:
    QmodZ() : num_(0), den_(1) {}
    QmodZ(const mpz_class& num, const mpz_class& den);
    static QmodZ from_long(long num, long den) { return QmodZ(mpz_class(num), mpz_class(den)); }

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    /// Order of this element in Q/Z (= denominator).
    const mpz_class& order() const { return den_; }

    QmodZ operator+(const QmodZ& rhs) const;
    QmodZ operator-() const;
    QmodZ operator-(const QmodZ& rhs) const { return *this + (-rhs); }
    QmodZ operator*(const mpz_class& k) const;
    bool operator==(const QmodZ& rhs) const = default;
    bool operator<(const QmodZ& rhs) const;  // compares num/den as rationals in [0,1)

private:
    mpz_class num_, den_;
};

/// A sublattice of a fixed ambient Z^r, stored by a canonical (HNF) basis.
/// Rows of `basis` are the generators in ambient coordinates.
class Lattice {
public:
    Lattice() = default;
    /// Rows of `generators` span the lattice; reduced to HNF on construction.
    Lattice(std::size_t ambient_rank, const IntMatrix& generators);
    static Lattice full(std::size_t rank);
    static Lattice zero(std::size_t ambient_rank);

    std::size_t ambient_rank() const { return ambient_rank_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }
    bool is_full() const;

    bool contains(const std::vector<mpz_class>& x) const;
    /// Coordinates c with c^T * basis = x^T, if x lies in the lattice.
    std::optional<std::vector<mpz_class>> coordinates(const std::vector<mpz_class>& x) const;
    bool operator==(const Lattice& rhs) const = default;

private:
    std::size_t ambient_rank_ = 0;
    IntMatrix basis_;  // rank x ambient_rank, HNF
};

Lattice lattice_intersection(const Lattice& a, const Lattice& b);
/// Index [sup : sub] for sub <= sup of equal rank; throws otherwise.
mpz_class lattice_index(const Lattice& sub, const Lattice& sup);

/// Finite abelian group in invariant-factor form: Z/d1 x ... x Z/dk with
/// d1 | d2 | ... and each di >= 2. The trivial group has an empty list.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<mpz_class> invariant_factors);

    const std::vector<mpz_class>& invariant_factors() const { return factors_; }
    std::size_t num_generators() const { return factors_.size(); }
    mpz_class order() const;
    mpz_class exponent() const;
    bool is_trivial() const { return factors_.empty(); }
    /// Order of the n-torsion subgroup: prod gcd(di, n).
    mpz_class torsion_order(const mpz_class& n) const;

    std::vector<mpz_class> normalize(std::vector<mpz_class> element) const;
    std::vector<mpz_class> add(const std::vector<mpz_class>& a,
                               const std::vector<mpz_class>& b) const;
    std::vector<mpz_class> neg(const std::vector<mpz_class>& a) const;
    mpz_class element_order(const std::vector<mpz_class>& a) const;
    /// All elements in lexicographic order (use only for small groups).
    std::vector<std::vector<mpz_class>> elements() const;

    bool operator==(const FiniteAbelianGroup& rhs) const = default;

private:
    std::vector<mpz_class> factors_;
};

/// Presentation of a finitely generated abelian group: Z^gens modulo the
/// row span of `relations`. A lattice Z^r has no relations; a finite group
/// in invariant factors has diagonal relations.
struct Presentation {
    std::size_t gens = 0;
    IntMatrix relations;  // rows in Z^gens; may have 0 rows

    static Presentation free_of_rank(std::size_t r) { return {r, IntMatrix(0, r)}; }
    static Presentation of(const FiniteAbelianGroup& g);
};

/// Homomorphism between presented groups; `matrix` (codomain.gens x domain.gens)
/// acts on column vectors of generator coordinates.
struct GroupHom {
    Presentation domain;
    Presentation codomain;
    IntMatrix matrix;

    std::vector<mpz_class> apply(const std::vector<mpz_class>& x) const { return matrix.apply(x); }
    /// Checks that the relations of the domain map into relations of the codomain.
    bool is_well_defined() const;
};

/// Quotient of Z^ambient by the subgroup spanned by the rows of `sub_rows`,
/// split into a torsion part (invariant factors) and a free part.
struct QuotientResult {
    FiniteAbelianGroup torsion;
    std::size_t free_rank = 0;
    /// Projection data: class of y reads off coordinates (U_inv * y); entry
    /// torsion_rows[i] gives the row of U_inv for the i-th invariant factor,
    /// free_rows likewise for the free part.
    IntMatrix u_inv;
    IntMatrix u;  // section: generator i of the torsion lifts to column torsion_rows[i] of u
    std::vector<std::size_t> torsion_rows;
    std::vector<std::size_t> free_rows;

    std::vector<mpz_class> project_torsion(const std::vector<mpz_class>& y) const;
    std::vector<mpz_class> lift_torsion_generator(std::size_t i) const;
};

QuotientResult quotient_by_rows(const IntMatrix& sub_rows, std::size_t ambient);

/// Cokernel of a homomorphism between free groups (lattices), realizing the
/// quotient codomain / image(f).
struct CokernelResult {
    FiniteAbelianGroup group;
    std::size_t free_rank = 0;
    GroupHom projection;  // codomain -> torsion part, on generator coordinates
};

CokernelResult cokernel(const GroupHom& f);

/// Basis of ker(sigma - 1) for a unimodular finite-order automorphism of Z^r.
Lattice fixed_sublattice(const IntMatrix& sigma);

/// Tate cohomology H^1 of the cyclic group <sigma> (order d) acting on L:
/// ker(Norm) / im(sigma - 1), in invariant factors.
FiniteAbelianGroup tate_h1_cyclic(const Lattice& L, const IntMatrix& sigma, std::size_t d);

/// Solves f(x) = b in the presented codomain; nullopt means b is not in the
/// image (a definitive verdict, decided via SNF).
std::optional<std::vector<mpz_class>> solve_in_image(const GroupHom& f,
                                                     const std::vector<mpz_class>& b);

/// Pontrjagin dual: same invariant factors; pairing of dual generators with
/// group elements lands in Q/Z.
FiniteAbelianGroup character_group(const FiniteAbelianGroup& g);
QmodZ character_pairing(const FiniteAbelianGroup& g, const std::vector<mpz_class>& chi,
                        const std::vector<mpz_class>& elem);

}  // namespace bdtori
