#include "bdtori/zlattice.hpp"

#include <stdexcept>

namespace bdtori {

QmodZ::QmodZ(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("QmodZ: zero denominator");
    mpz_class d = den < 0 ? mpz_class(-den) : den;
    mpz_class n;
    mpz_fdiv_r(n.get_mpz_t(), mpz_class(den < 0 ? -num : num).get_mpz_t(), d.get_mpz_t());
    mpz_class g = gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

QmodZ QmodZ::operator+(const QmodZ& rhs) const {
    return QmodZ(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

QmodZ QmodZ::operator-() const { return QmodZ(-num_, den_); }

QmodZ QmodZ::operator*(const mpz_class& k) const { return QmodZ(num_ * k, den_); }

bool QmodZ::operator<(const QmodZ& rhs) const { return num_ * rhs.den_ < rhs.num_ * den_; }

Lattice::Lattice(std::size_t ambient_rank, const IntMatrix& generators)
    : ambient_rank_(ambient_rank), basis_(hnf_rows(generators)) {
    if (generators.cols() != ambient_rank && !generators.empty())
        throw std::invalid_argument("Lattice: generator width mismatch");
    if (generators.rows() == 0) basis_ = IntMatrix(0, ambient_rank);
}

Lattice Lattice::full(std::size_t rank) { return Lattice(rank, IntMatrix::identity(rank)); }

Lattice Lattice::zero(std::size_t ambient_rank) {
    return Lattice(ambient_rank, IntMatrix(0, ambient_rank));
}

bool Lattice::is_full() const { return basis_ == IntMatrix::identity(ambient_rank_); }

std::optional<std::vector<mpz_class>> Lattice::coordinates(const std::vector<mpz_class>& x) const {
    // c^T basis = x^T  <=>  basis^T c = x
    return solve_integer(basis_.transpose(), x);
}

bool Lattice::contains(const std::vector<mpz_class>& x) const {
    return coordinates(x).has_value();
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw std::invalid_argument("lattice_intersection: ambient mismatch");
    std::size_t r = a.ambient_rank();
    std::size_t ka = a.rank(), kb = b.rank();
    if (ka == 0 || kb == 0) return Lattice::zero(r);
    // x = A^T ca = B^T cb; solve [A^T | -B^T] (ca; cb) = 0.
    IntMatrix stacked(r, ka + kb);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < ka; ++j) stacked.at(i, j) = a.basis().at(j, i);
        for (std::size_t j = 0; j < kb; ++j) stacked.at(i, ka + j) = -b.basis().at(j, i);
    }
    IntMatrix ker = kernel_basis_rows(stacked);
    IntMatrix gens(ker.rows(), r);
    for (std::size_t i = 0; i < ker.rows(); ++i)
        for (std::size_t c = 0; c < r; ++c)
            for (std::size_t j = 0; j < ka; ++j) gens.at(i, c) += ker.at(i, j) * a.basis().at(j, c);
    return Lattice(r, gens);
}

mpz_class lattice_index(const Lattice& sub, const Lattice& sup) {
    if (sub.rank() != sup.rank()) throw std::invalid_argument("lattice_index: rank mismatch");
    if (sub.rank() == 0) return 1;
    // Express sub's basis in sup coordinates; index = |det|.
    std::size_t k = sub.rank();
    IntMatrix coord(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<mpz_class> row(sub.ambient_rank());
        for (std::size_t c = 0; c < sub.ambient_rank(); ++c) row[c] = sub.basis().at(i, c);
        auto co = sup.coordinates(row);
        if (!co) throw std::invalid_argument("lattice_index: sub not contained in sup");
        for (std::size_t j = 0; j < k; ++j) coord.at(i, j) = (*co)[j];
    }
    return abs(coord.det());
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<mpz_class> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw std::invalid_argument("FiniteAbelianGroup: factor < 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw std::invalid_argument("FiniteAbelianGroup: divisibility chain violated");
    }
}

mpz_class FiniteAbelianGroup::order() const {
    mpz_class o = 1;
    for (const auto& d : factors_) o *= d;
    return o;
}

mpz_class FiniteAbelianGroup::exponent() const {
    return factors_.empty() ? mpz_class(1) : factors_.back();
}

mpz_class FiniteAbelianGroup::torsion_order(const mpz_class& n) const {
    mpz_class o = 1;
    for (const auto& d : factors_) o *= gcd(d, n);
    return o;
}

std::vector<mpz_class> FiniteAbelianGroup::normalize(std::vector<mpz_class> element) const {
    if (element.size() != factors_.size())
        throw std::invalid_argument("FiniteAbelianGroup: element size mismatch");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), element[i].get_mpz_t(), factors_[i].get_mpz_t());
        element[i] = r;
    }
    return element;
}

std::vector<mpz_class> FiniteAbelianGroup::add(const std::vector<mpz_class>& a,
                                               const std::vector<mpz_class>& b) const {
    std::vector<mpz_class> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return normalize(std::move(s));
}

std::vector<mpz_class> FiniteAbelianGroup::neg(const std::vector<mpz_class>& a) const {
    std::vector<mpz_class> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
    return normalize(std::move(s));
}

mpz_class FiniteAbelianGroup::element_order(const std::vector<mpz_class>& a) const {
    mpz_class o = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        mpz_class g = gcd(a[i], factors_[i]);
        mpz_class oi = factors_[i] / g;
        o = lcm(o, oi);
    }
    return o;
}

std::vector<std::vector<mpz_class>> FiniteAbelianGroup::elements() const {
    std::vector<std::vector<mpz_class>> out;
    std::vector<mpz_class> cur(factors_.size(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t i = factors_.size();
        while (i > 0) {
            --i;
            cur[i] += 1;
            if (cur[i] < factors_[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (factors_.empty()) return out;
    }
}

Presentation Presentation::of(const FiniteAbelianGroup& g) {
    return {g.num_generators(), IntMatrix::diagonal(g.invariant_factors())};
}

bool GroupHom::is_well_defined() const {
    // Each domain relation must map into the row span of codomain relations.
    for (std::size_t i = 0; i < domain.relations.rows(); ++i) {
        std::vector<mpz_class> rel(domain.gens);
        for (std::size_t j = 0; j < domain.gens; ++j) rel[j] = domain.relations.at(i, j);
        std::vector<mpz_class> img = matrix.apply(rel);
        if (codomain.relations.rows() == 0) {
            for (const auto& v : img)
                if (v != 0) return false;
        } else {
            if (!solve_integer(codomain.relations.transpose(), img)) return false;
        }
    }
    return true;
}

std::vector<mpz_class> QuotientResult::project_torsion(const std::vector<mpz_class>& y) const {
    std::vector<mpz_class> full = u_inv.apply(y);
    std::vector<mpz_class> out(torsion_rows.size());
    const auto& f = torsion.invariant_factors();
    for (std::size_t i = 0; i < torsion_rows.size(); ++i) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), full[torsion_rows[i]].get_mpz_t(), f[i].get_mpz_t());
        out[i] = r;
    }
    return out;
}

std::vector<mpz_class> QuotientResult::lift_torsion_generator(std::size_t i) const {
    std::vector<mpz_class> out(u.rows());
    for (std::size_t r = 0; r < u.rows(); ++r) out[r] = u.at(r, torsion_rows[i]);
    return out;
}

QuotientResult quotient_by_rows(const IntMatrix& sub_rows, std::size_t ambient) {
    if (sub_rows.cols() != ambient && !sub_rows.empty())
        throw std::invalid_argument("quotient_by_rows: width mismatch");
    IntMatrix cols =
        sub_rows.rows() == 0 ? IntMatrix(ambient, 0) : sub_rows.transpose();  // ambient x k
    SmithResult s = smith_normal_form(cols);
    QuotientResult q;
    std::vector<mpz_class> factors;
    for (std::size_t i = 0; i < ambient; ++i) {
        mpz_class d = (i < std::min(cols.rows(), cols.cols())) ? s.D.at(i, i) : mpz_class(0);
        if (d == 0) {
            q.free_rows.push_back(i);
        } else if (d >= 2) {
            factors.push_back(d);
            q.torsion_rows.push_back(i);
        }
    }
    q.free_rank = q.free_rows.size();
    q.torsion = FiniteAbelianGroup(std::move(factors));
    q.u_inv = std::move(s.U_inv);
    q.u = std::move(s.U);
    return q;
}

CokernelResult cokernel(const GroupHom& f) {
    if (f.domain.relations.rows() != 0)
        throw std::invalid_argument("cokernel: domain must be free");
    std::size_t m = f.codomain.gens;
    // Quotient of the codomain presentation by image(f): stack image columns
    // (as rows) with the codomain relations.
    IntMatrix rows(f.domain.gens + f.codomain.relations.rows(), m);
    for (std::size_t j = 0; j < f.domain.gens; ++j)
        for (std::size_t i = 0; i < m; ++i) rows.at(j, i) = f.matrix.at(i, j);
    for (std::size_t j = 0; j < f.codomain.relations.rows(); ++j)
        for (std::size_t i = 0; i < m; ++i)
            rows.at(f.domain.gens + j, i) = f.codomain.relations.at(j, i);
    QuotientResult q = quotient_by_rows(rows, m);
    CokernelResult r;
    r.free_rank = q.free_rank;
    r.group = q.torsion;
    GroupHom proj;
    proj.domain = Presentation::free_of_rank(m);
    proj.codomain = Presentation::of(r.group);
    IntMatrix pm(q.torsion_rows.size(), m);
    for (std::size_t i = 0; i < q.torsion_rows.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) pm.at(i, j) = q.u_inv.at(q.torsion_rows[i], j);
    proj.matrix = std::move(pm);
    r.projection = std::move(proj);
    return r;
}

Lattice fixed_sublattice(const IntMatrix& sigma) {
    if (!sigma.is_unimodular()) throw std::invalid_argument("fixed_sublattice: sigma not unimodular");
    std::size_t r = sigma.rows();
    return Lattice(r, kernel_basis_rows(sigma - IntMatrix::identity(r)));
}

FiniteAbelianGroup tate_h1_cyclic(const Lattice& L, const IntMatrix& sigma, std::size_t d) {
    std::size_t r = L.ambient_rank();
    if (sigma.rows() != r || sigma.cols() != r)
        throw std::invalid_argument("tate_h1_cyclic: dimension mismatch");
    if (d == 0 || !(sigma.pow(d) == IntMatrix::identity(r)))
        throw std::invalid_argument("tate_h1_cyclic: sigma^d != identity");
    // Restrict sigma to L-coordinates (throws if L is not sigma-stable).
    std::size_t k = L.rank();
    IntMatrix sc(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<mpz_class> bi(r);
        for (std::size_t c = 0; c < r; ++c) bi[c] = L.basis().at(i, c);
        auto co = L.coordinates(sigma.apply(bi));
        if (!co) throw std::invalid_argument("tate_h1_cyclic: L not sigma-stable");
        for (std::size_t j = 0; j < k; ++j) sc.at(j, i) = (*co)[j];
    }
    // Norm = sum_{t<d} sigma^t; H^1 = ker(Norm) / im(sigma - 1).
    IntMatrix norm(k, k), p = IntMatrix::identity(k);
    for (std::size_t t = 0; t < d; ++t) {
        norm = norm + p;
        p = p * sc;
    }
    IntMatrix kerN = kernel_basis_rows(norm);  // rows in L-coordinates
    Lattice ker_lat(k, kerN);
    IntMatrix delta = sc - IntMatrix::identity(k);
    // Express the columns of (sigma - 1) in ker(Norm)-coordinates.
    IntMatrix w(k, ker_lat.rank());
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<mpz_class> col(k);
        for (std::size_t i = 0; i < k; ++i) col[i] = delta.at(i, j);
        auto co = ker_lat.coordinates(col);
        if (!co) throw std::logic_error("tate_h1_cyclic: im(sigma-1) not inside ker(Norm)");
        for (std::size_t c = 0; c < ker_lat.rank(); ++c) w.at(j, c) = (*co)[c];
    }
    QuotientResult q = quotient_by_rows(w, ker_lat.rank());
    if (q.free_rank != 0) throw std::logic_error("tate_h1_cyclic: unexpected free part");
    return q.torsion;
}

std::optional<std::vector<mpz_class>> solve_in_image(const GroupHom& f,
                                                     const std::vector<mpz_class>& b) {
    // Solve [A | R_cod] (x; y) = b over Z, where R_cod spans the codomain
    // relations; x is then a preimage modulo relations.
    std::size_t m = f.codomain.gens, n = f.domain.gens;
    std::size_t s = f.codomain.relations.rows();
    IntMatrix A(m, n + s);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) A.at(i, j) = f.matrix.at(i, j);
        for (std::size_t j = 0; j < s; ++j) A.at(i, n + j) = f.codomain.relations.at(j, i);
    }
    auto sol = solve_integer(A, b);
    if (!sol) return std::nullopt;
    std::vector<mpz_class> x(sol->begin(), sol->begin() + n);
    if (f.domain.relations.rows() > 0) {
        // Normalize modulo domain relations when they are diagonal.
        const IntMatrix& rel = f.domain.relations;
        if (rel.rows() == rel.cols()) {
            bool diag = true;
            for (std::size_t i = 0; i < rel.rows() && diag; ++i)
                for (std::size_t j = 0; j < rel.cols() && diag; ++j)
                    if (i != j && rel.at(i, j) != 0) diag = false;
            if (diag)
                for (std::size_t i = 0; i < x.size(); ++i)
                    if (rel.at(i, i) > 0) {
                        mpz_class r;
                        mpz_fdiv_r(r.get_mpz_t(), x[i].get_mpz_t(), rel.at(i, i).get_mpz_t());
                        x[i] = r;
                    }
        }
    }
    return x;
}

FiniteAbelianGroup character_group(const FiniteAbelianGroup& g) { return g; }

QmodZ character_pairing(const FiniteAbelianGroup& g, const std::vector<mpz_class>& chi,
                        const std::vector<mpz_class>& elem) {
    QmodZ v;
    const auto& f = g.invariant_factors();
    for (std::size_t i = 0; i < f.size(); ++i) v = v + QmodZ(chi[i] * elem[i], f[i]);
    return v;
}

}  // namespace bdtori
