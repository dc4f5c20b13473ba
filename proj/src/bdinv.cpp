#include "bdtori/bdinv.hpp"

namespace bdtori {

void TorusDatum::validate() const {
    if (frobenius.rows() != rank || frobenius.cols() != rank)
        throw std::invalid_argument("torus: frobenius must be rank x rank");
    if (!frobenius.is_unimodular())
        throw std::invalid_argument("torus: frobenius must be unimodular");
    if (order < 1) throw std::invalid_argument("torus: order must be >= 1");
    if (!(frobenius.pow(order) == IntMatrix::identity(rank)))
        throw std::invalid_argument("torus: frobenius^order != identity");
}

TorusDatum TorusDatum::split(std::size_t rank) {
    return {rank, IntMatrix::identity(rank), 1};
}

void BDDatum::validate() const {
    torus.validate();
    if (C.rows() != torus.rank || C.cols() != torus.rank)
        throw std::invalid_argument("datum: C must be rank x rank");
    if (n < 1) throw std::invalid_argument("datum: n must be >= 1");
    // Q must be Frobenius-invariant: sigma^T B sigma = B.
    IntMatrix b = B();
    if (!(torus.frobenius.transpose() * b * torus.frobenius == b))
        throw std::invalid_argument("datum: quadratic form not Frobenius-invariant");
}

mpq_class beta(const BDDatum& d, const std::vector<mpz_class>& y1,
               const std::vector<mpz_class>& y2) {
    std::vector<mpz_class> by2 = d.B().apply(y2);
    mpz_class dot = 0;
    for (std::size_t i = 0; i < y1.size(); ++i) dot += y1[i] * by2[i];
    mpq_class q(dot, d.n);
    q.canonicalize();
    return q;
}

Lattice preimage_mod(const IntMatrix& M, const mpz_class& n) {
    std::size_t rows = M.rows(), cols = M.cols();
    // {y : M y = -n k for some k}: kernel of [M | nI] projected to the y part.
    IntMatrix aug(rows, cols + rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, cols + i) = n;
    }
    IntMatrix ker = kernel_basis_rows(aug);
    IntMatrix gens(ker.rows() + cols, cols);
    for (std::size_t i = 0; i < ker.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) gens.at(i, j) = ker.at(i, j);
    // nZ^cols is always inside the preimage; include it so the lattice has
    // full rank even when the kernel projection degenerates.
    for (std::size_t j = 0; j < cols; ++j) gens.at(ker.rows() + j, j) = n;
    return Lattice(cols, gens);
}

SharpData sharp_lattices(const BDDatum& d) {
    d.validate();
    std::size_t r = d.torus.rank;
    IntMatrix b = d.B();
    SharpData s;
    s.B = b;
    s.n = d.n;
    s.Ysharp = preimage_mod(b, d.n);
    // x = xi/n pairs integrally with Ysharp iff S xi = 0 mod n, S = Ysharp basis.
    s.Xsharp_scaled = preimage_mod(s.Ysharp.basis(), d.n);
    (void)r;
    return s;
}

namespace {

/// Finite quotient sup/sub for equal-rank lattices, in invariant factors,
/// together with the projection data in sup-coordinates.
QuotientResult finite_lattice_quotient(const Lattice& sub, const Lattice& sup) {
    std::size_t k = sup.rank();
    IntMatrix rows(sub.rank(), k);
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        std::vector<mpz_class> v(sub.ambient_rank());
        for (std::size_t c = 0; c < sub.ambient_rank(); ++c) v[c] = sub.basis().at(i, c);
        auto co = sup.coordinates(v);
        if (!co) throw std::invalid_argument("finite_lattice_quotient: not a sublattice");
        for (std::size_t j = 0; j < k; ++j) rows.at(i, j) = (*co)[j];
    }
    QuotientResult q = quotient_by_rows(rows, k);
    if (q.free_rank != 0) throw std::invalid_argument("finite_lattice_quotient: infinite quotient");
    return q;
}

IntMatrix scaled_identity(std::size_t r, const mpz_class& n) {
    IntMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) m.at(i, i) = n;
    return m;
}

/// Order of the sigma-coinvariants of the finite module sup/sub, where sigma
/// acts on the common ambient Z^r and preserves both lattices.
mpz_class coinvariant_order(const Lattice& sub, const Lattice& sup, const IntMatrix& sigma) {
    std::size_t k = sup.rank();
    // Rows: sub in sup-coordinates, plus (sigma - 1) of each sup generator.
    std::vector<std::vector<mpz_class>> rows;
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        std::vector<mpz_class> v(sub.ambient_rank());
        for (std::size_t c = 0; c < sub.ambient_rank(); ++c) v[c] = sub.basis().at(i, c);
        auto co = sup.coordinates(v);
        if (!co) throw std::invalid_argument("coinvariant_order: not a sublattice");
        rows.push_back(*co);
    }
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<mpz_class> g(sup.ambient_rank());
        for (std::size_t c = 0; c < sup.ambient_rank(); ++c) g[c] = sup.basis().at(i, c);
        std::vector<mpz_class> im = sigma.apply(g);
        for (std::size_t c = 0; c < g.size(); ++c) im[c] -= g[c];
        auto co = sup.coordinates(im);
        if (!co) throw std::invalid_argument("coinvariant_order: sup not sigma-stable");
        rows.push_back(*co);
    }
    IntMatrix m(rows.size(), k);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) m.at(i, j) = rows[i][j];
    QuotientResult q = quotient_by_rows(m, k);
    if (q.free_rank != 0) throw std::invalid_argument("coinvariant_order: infinite coinvariants");
    return q.torsion.order();
}

}  // namespace

XqnResult xqn_isomorphism(const BDDatum& d) {
    SharpData s = sharp_lattices(d);
    std::size_t r = d.torus.rank;
    Lattice Y = Lattice::full(r);
    Lattice X_in_scaled(r, scaled_identity(r, d.n));  // X = nZ^r in (1/n)X coords

    QuotientResult qY = finite_lattice_quotient(s.Ysharp, Y);
    QuotientResult qX = finite_lattice_quotient(X_in_scaled, s.Xsharp_scaled);

    FiniteAbelianGroup dom = qY.torsion, cod = qX.torsion;
    // Map each generator of Y/Ysharp through delta: in scaled coordinates
    // delta(y) = B y (an integer vector), then read off its class.
    IntMatrix m(cod.num_generators(), dom.num_generators());
    for (std::size_t j = 0; j < dom.num_generators(); ++j) {
        std::vector<mpz_class> lift = qY.lift_torsion_generator(j);
        std::vector<mpz_class> img = s.B.apply(lift);
        auto co = s.Xsharp_scaled.coordinates(img);
        if (!co) throw std::logic_error("xqn_isomorphism: delta(Y) not inside Xsharp");
        std::vector<mpz_class> cls = qX.project_torsion(*co);
        for (std::size_t i = 0; i < cod.num_generators(); ++i) m.at(i, j) = cls[i];
    }
    GroupHom h{Presentation::of(dom), Presentation::of(cod), m};
    if (!h.is_well_defined()) throw std::logic_error("xqn_isomorphism: map not well-defined");
    if (dom.order() != cod.order()) throw std::logic_error("xqn_isomorphism: order mismatch");
    // Injectivity: the image subgroup has full order. Its order is
    // #codomain / #(codomain / image).
    {
        std::size_t g = cod.num_generators();
        IntMatrix rows(dom.num_generators() + g, g);
        for (std::size_t j = 0; j < dom.num_generators(); ++j)
            for (std::size_t i = 0; i < g; ++i) rows.at(j, i) = m.at(i, j);
        for (std::size_t i = 0; i < g; ++i)
            rows.at(dom.num_generators() + i, i) = cod.invariant_factors()[i];
        QuotientResult q = quotient_by_rows(rows, g);
        mpz_class image_order = cod.order() / q.torsion.order();
        if (image_order != dom.order()) throw std::logic_error("xqn_isomorphism: not bijective");
    }
    return {dom, cod, h};
}

FiniteInvariants finite_invariants(const BDDatum& d) {
    SharpData s = sharp_lattices(d);
    std::size_t r = d.torus.rank;
    Lattice X_in_scaled(r, scaled_identity(r, d.n));
    Lattice nY(r, scaled_identity(r, d.n));
    Lattice scaled_full = Lattice::full(r);

    FiniteInvariants f;
    f.mu = finite_lattice_quotient(X_in_scaled, s.Xsharp_scaled).torsion;
    f.nu = finite_lattice_quotient(s.Xsharp_scaled, scaled_full).torsion;
    f.nu_hat = finite_lattice_quotient(nY, s.Ysharp).torsion;
    f.t_n = finite_lattice_quotient(X_in_scaled, scaled_full).torsion;
    f.t_hat_n = finite_lattice_quotient(nY, scaled_full).torsion;
    // Duality of (Xsharp, Ysharp) inside (n^{-1}X, Y) forces #nu = #nu_hat.
    if (f.nu.order() != f.nu_hat.order())
        throw std::logic_error("finite_invariants: #nu != #nu_hat");
    return f;
}

RGroupData r_group(const BDDatum& d) {
    d.validate();
    std::size_t r = d.torus.rank;
    IntMatrix b = d.B();
    // Relations on X + Y generators: (n*delta(e_i), -n*e_i) = (B e_i, -n e_i).
    IntMatrix rel(r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) rel.at(i, j) = b.at(j, i);
        rel.at(i, r + i) = -d.n;
    }
    QuotientResult q = quotient_by_rows(rel, 2 * r);

    RGroupData out;
    out.V = Presentation{2 * r, rel};
    out.free_rank = q.free_rank;
    out.component_group = q.torsion;
    if (out.free_rank != r) throw std::logic_error("r_group: free rank != rank");

    // p: X -> V, x -> class of (x, 0).
    IntMatrix pm(2 * r, r);
    for (std::size_t i = 0; i < r; ++i) pm.at(i, i) = 1;
    out.map_p = GroupHom{Presentation::free_of_rank(r), out.V, pm};

    // e: V -> (1/n)X scaled coordinates, (xi, y) -> n*xi + B*y; kills rel.
    IntMatrix em(r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        em.at(i, i) = d.n;
        for (std::size_t j = 0; j < r; ++j) em.at(i, r + j) = b.at(i, j);
    }
    out.map_e = GroupHom{out.V, Presentation::free_of_rank(r), em};
    if (!out.map_e.is_well_defined()) throw std::logic_error("r_group: e does not kill relations");
    return out;
}

bool is_sharp(const BDDatum& d) { return sharp_lattices(d).Ysharp.is_full(); }

mpz_class zind_lattice(const BDDatum& d) {
    SharpData s = sharp_lattices(d);
    Lattice fixed = fixed_sublattice(d.torus.frobenius);
    Lattice sharp_fixed = lattice_intersection(s.Ysharp, fixed);
    if (fixed.rank() == 0) return 1;
    return lattice_index(sharp_fixed, fixed);
}

mpz_class cind_bound(const BDDatum& d) {
    SharpData s = sharp_lattices(d);
    std::size_t r = d.torus.rank;
    const IntMatrix& sigma = d.torus.frobenius;
    IntMatrix sigma_x = sigma.unimodular_inverse().transpose();

    FiniteAbelianGroup h1 = tate_h1_cyclic(Lattice::full(r), sigma, d.torus.order);
    mpz_class h1n = h1.torsion_order(d.n);

    Lattice X_in_scaled(r, scaled_identity(r, d.n));
    mpz_class nu_f = coinvariant_order(s.Xsharp_scaled, Lattice::full(r), sigma_x);
    mpz_class mu_f = coinvariant_order(X_in_scaled, s.Xsharp_scaled, sigma_x);
    mpz_class that_f = coinvariant_order(Lattice(r, scaled_identity(r, d.n)),
                                         Lattice::full(r), sigma);

    mpz_class num = h1n * nu_f * mu_f;
    if (num % that_f != 0) throw std::logic_error("cind_bound: non-integral quotient");
    mpz_class out = num / that_f;
    if (out < 1) throw std::logic_error("cind_bound: bound below 1");
    return out;
}

}  // namespace bdtori
