#include "bdtori/cover.hpp"

#include <algorithm>
#include <set>

namespace bdtori {

void CoverSpec::validate() const {
    field.validate();
    datum.validate();
    if (datum.n != field.n) throw std::invalid_argument("cover: datum degree != field degree");
}

void CoverSpec::require_split() const {
    if (!datum.torus.is_split())
        throw UnsupportedError("point-level cover arithmetic requires a split torus");
}

CoverElement cover_identity(const CoverSpec& spec) {
    return {torus_identity(spec.rank()), MuN{0}};
}

MuN cocycle(const CoverSpec& spec, const TorusPoint& s, const TorusPoint& t) {
    if (s.rank() != spec.rank() || t.rank() != spec.rank())
        throw std::invalid_argument("cocycle: rank mismatch");
    MuN out{0};
    for (std::size_t i = 0; i < spec.rank(); ++i)
        for (std::size_t j = 0; j < spec.rank(); ++j) {
            const mpz_class& c = spec.datum.C.at(i, j);
            if (c == 0) continue;
            MuN h = hilbert(spec.field, s.coords[i], t.coords[j], spec.symbol);
            out = mun_mul(spec.field, out, mun_pow(spec.field, h, c));
        }
    return out;
}

CoverElement multiply(const CoverSpec& spec, const CoverElement& a, const CoverElement& b) {
    MuN z = mun_mul(spec.field, a.zeta, b.zeta);
    z = mun_mul(spec.field, z, cocycle(spec, a.point, b.point));
    return {torus_mul(spec.field, a.point, b.point), z};
}

CoverElement cover_inverse(const CoverSpec& spec, const CoverElement& a) {
    TorusPoint p = torus_inv(spec.field, a.point);
    // (p, z)(a) = identity: z = -zeta(a) - cocycle(p, a.point).
    MuN z = mun_inv(spec.field, a.zeta);
    z = mun_mul(spec.field, z, mun_inv(spec.field, cocycle(spec, p, a.point)));
    return {p, z};
}

MuN commutator(const CoverSpec& spec, const TorusPoint& t1, const TorusPoint& t2) {
    MuN fwd = cocycle(spec, t1, t2);
    MuN bwd = cocycle(spec, t2, t1);
    return mun_mul(spec.field, fwd, mun_inv(spec.field, bwd));
}

TorusPoint point_from_effective(const CoverSpec& spec, const std::vector<mpz_class>& coords) {
    std::size_t r = spec.rank();
    if (coords.size() != 2 * r) throw std::invalid_argument("point_from_effective: bad length");
    TorusPoint t;
    t.coords.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
        t.coords.push_back(tame_canonical(spec.field, coords[i], coords[r + i]));
    return t;
}

std::vector<mpz_class> effective_coords(const TorusPoint& t) {
    std::size_t r = t.rank();
    std::vector<mpz_class> out(2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        out[i] = t.coords[i].val;
        out[r + i] = t.coords[i].unit_exp;
    }
    return out;
}

TorusPoint effective_generator(const CoverSpec& spec, std::size_t index) {
    std::vector<mpz_class> c(2 * spec.rank(), 0);
    c[index] = 1;
    return point_from_effective(spec, c);
}

QmodZ AlternatingForm::eval(const std::vector<mpz_class>& a,
                            const std::vector<mpz_class>& b) const {
    QmodZ out;
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = 0; j < gram.size(); ++j) out = out + gram[i][j] * (a[i] * b[j]);
    return out;
}

bool AlternatingForm::is_nondegenerate() const {
    std::size_t k = group.num_generators();
    for (const auto& x : group.elements()) {
        bool zero_elt = std::all_of(x.begin(), x.end(), [](const mpz_class& v) { return v == 0; });
        if (zero_elt) continue;
        bool pairs = false;
        for (std::size_t j = 0; j < k && !pairs; ++j) {
            std::vector<mpz_class> gen(k, 0);
            gen[j] = 1;
            if (!eval(x, gen).is_zero()) pairs = true;
        }
        if (!pairs) return false;
    }
    return true;
}

std::vector<mpz_class> CenterData::project(const std::vector<mpz_class>& coords) const {
    return quotient_proj.project_torsion(coords);
}

CenterData center(const CoverSpec& spec) {
    spec.validate();
    spec.require_split();
    std::size_t r = spec.rank();
    const mpz_class& n = spec.field.n;
    mpz_class qm1 = spec.field.q - 1;

    // Gram matrix of the commutator pairing on the effective generators,
    // computed through actual symbol evaluations.
    IntMatrix gram(2 * r, 2 * r);
    for (std::size_t a = 0; a < 2 * r; ++a)
        for (std::size_t b = 0; b < 2 * r; ++b)
            gram.at(a, b) =
                commutator(spec, effective_generator(spec, a), effective_generator(spec, b))
                    .exponent;

    // Radical: coords c with (gram^T c) = 0 mod n, plus the (q-1) relations
    // on unit coordinates.
    Lattice rad = preimage_mod(gram.transpose(), n);
    IntMatrix zgens(rad.rank() + r, 2 * r);
    for (std::size_t i = 0; i < rad.rank(); ++i)
        for (std::size_t j = 0; j < 2 * r; ++j) zgens.at(i, j) = rad.basis().at(i, j);
    for (std::size_t i = 0; i < r; ++i) zgens.at(rad.rank() + i, 2 * r - r + i) = qm1;
    Lattice zdag(2 * r, zgens);

    // Core: image of the sharp torus, generated by y(pi) and y(g) for y in a
    // basis of Ysharp, plus the unit relations.
    SharpData sharp = sharp_lattices(spec.datum);
    std::size_t k = sharp.Ysharp.rank();
    IntMatrix cgens(2 * k + r, 2 * r);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            cgens.at(i, j) = sharp.Ysharp.basis().at(i, j);
            cgens.at(k + i, r + j) = sharp.Ysharp.basis().at(i, j);
        }
    for (std::size_t i = 0; i < r; ++i) cgens.at(2 * k + i, r + i) = qm1;
    Lattice core(2 * r, cgens);

    CenterData out;
    out.zdag = zdag;
    out.core = core;
    out.cind = lattice_index(core, zdag);

    QuotientResult q = quotient_by_rows(zdag.basis(), 2 * r);
    if (q.free_rank != 0) throw std::logic_error("center: quotient not finite");
    out.quotient = q.torsion;
    out.quotient_proj = q;

    std::size_t g = out.quotient.num_generators();
    out.pairing.group = out.quotient;
    out.pairing.gram.assign(g, std::vector<QmodZ>(g));
    for (std::size_t i = 0; i < g; ++i) {
        TorusPoint pi = point_from_effective(spec, q.lift_torsion_generator(i));
        for (std::size_t j = 0; j < g; ++j) {
            TorusPoint pj = point_from_effective(spec, q.lift_torsion_generator(j));
            out.pairing.gram[i][j] = QmodZ(commutator(spec, pi, pj).exponent, n);
        }
    }

    mpz_class order = out.quotient.order();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), order.get_mpz_t());
    if (root * root != order) throw std::logic_error("center: quotient order not a square");
    out.zind = root;
    return out;
}

bool is_central(const CoverSpec& spec, const TorusPoint& t) {
    spec.require_split();
    for (std::size_t a = 0; a < 2 * spec.rank(); ++a)
        if (!commutator(spec, t, effective_generator(spec, a)).is_trivial()) return false;
    return true;
}

bool is_in_core(const CoverSpec& spec, const TorusPoint& t) {
    CenterData c = center(spec);
    return c.core.contains(effective_coords(t));
}

std::vector<std::vector<mpz_class>> subgroup_elements(
    const FiniteAbelianGroup& group, const std::vector<std::vector<mpz_class>>& gens) {
    std::set<std::vector<mpz_class>> seen;
    seen.insert(group.normalize(std::vector<mpz_class>(group.num_generators(), 0)));
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& x : std::vector<std::vector<mpz_class>>(seen.begin(), seen.end()))
            for (const auto& g : gens) {
                auto y = group.add(x, group.normalize(g));
                if (seen.insert(y).second) grew = true;
            }
    }
    return {seen.begin(), seen.end()};
}

LagrangianPair lagrangian_decomposition(const AlternatingForm& form) {
    const FiniteAbelianGroup& grp = form.group;
    std::vector<std::vector<mpz_class>> S = grp.elements();
    std::sort(S.begin(), S.end());
    LagrangianPair out;

    for (;;) {
        // Pairing order of each element restricted to the current complement.
        mpz_class best = 1;
        std::vector<mpz_class> a;
        for (const auto& x : S) {
            mpz_class ord = 1;
            for (const auto& y : S) ord = lcm(ord, form.eval(x, y).order());
            if (ord > best) {
                best = ord;
                a = x;
            }
        }
        if (best == 1) break;  // pairing trivial on S

        const mpz_class& e = best;
        std::vector<mpz_class> b;
        for (const auto& y : S)
            if (form.eval(a, y).order() == e) {
                b = y;
                break;
            }
        // Rescale b so that <a, b> = 1/e.
        QmodZ v = form.eval(a, b);  // c/e with gcd(c, e) = 1
        mpz_class minv;
        if (mpz_invert(minv.get_mpz_t(), v.num().get_mpz_t(), e.get_mpz_t()) == 0)
            throw std::logic_error("lagrangian_decomposition: non-invertible pairing value");
        std::vector<mpz_class> bs(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) bs[i] = b[i] * minv;
        bs = grp.normalize(bs);

        out.L.push_back(a);
        out.Lstar.push_back(bs);

        std::vector<std::vector<mpz_class>> next;
        for (const auto& x : S)
            if (form.eval(a, x).is_zero() && form.eval(bs, x).is_zero()) next.push_back(x);
        S = std::move(next);
    }

    if (S.size() != 1) throw std::invalid_argument("lagrangian_decomposition: degenerate pairing");
    return out;
}

}  // namespace bdtori
