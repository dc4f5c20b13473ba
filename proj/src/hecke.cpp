#include "bdtori/hecke.hpp"

namespace bdtori {

namespace {
mpz_class bilinear(const IntMatrix& C, const std::vector<mpz_class>& y1,
                   const std::vector<mpz_class>& y2) {
    std::vector<mpz_class> cy2 = C.apply(y2);
    mpz_class out = 0;
    for (std::size_t i = 0; i < y1.size(); ++i) out += y1[i] * cy2[i];
    return out;
}
}  // namespace

HeckeSpec HeckeSpec::standard(const CoverSpec& cover) {
    cover.validate();
    SharpData s = sharp_lattices(cover.datum);
    Lattice fixed = fixed_sublattice(cover.datum.torus.frobenius);
    return {cover, lattice_intersection(s.Ysharp, fixed)};
}

HeckeSpec HeckeSpec::with_lambda(const CoverSpec& cover, Lattice lambda) {
    cover.validate();
    return {cover, std::move(lambda)};
}

void HeckeSpec::require_member(const std::vector<mpz_class>& y) const {
    if (!lambda.contains(y)) throw std::invalid_argument("hecke: vector outside Lambda");
}

TorusPoint lambda_rep(const HeckeSpec& spec, const std::vector<mpz_class>& y) {
    TorusPoint t;
    t.coords.reserve(y.size());
    for (const auto& v : y) t.coords.push_back(TameElement{v, 0});
    return t;
}

MuN cocycle_closed(const HeckeSpec& spec, const std::vector<mpz_class>& y1,
                   const std::vector<mpz_class>& y2) {
    spec.require_member(y1);
    spec.require_member(y2);
    mpz_class e = spec.cover.field.minus_one_exp() * bilinear(spec.cover.datum.C, y1, y2);
    if (spec.cover.symbol.convention == SymbolConvention::inverse) e = -e;
    return mun_canonical(spec.cover.field, e);
}

MuN cocycle_oracle(const HeckeSpec& spec, const std::vector<mpz_class>& y1,
                   const std::vector<mpz_class>& y2) {
    spec.require_member(y1);
    spec.require_member(y2);
    spec.cover.require_split();
    CoverElement a{lambda_rep(spec, y1), MuN{0}}, b{lambda_rep(spec, y2), MuN{0}};
    CoverElement prod = multiply(spec.cover, a, b);
    // The canonical representative of y1 + y2 equals the point product
    // exactly (valuations add, unit parts stay trivial), so the cocycle is
    // the zeta part of the product.
    std::vector<mpz_class> sum(y1.size());
    for (std::size_t i = 0; i < y1.size(); ++i) sum[i] = y1[i] + y2[i];
    if (!(prod.point == lambda_rep(spec, sum)))
        throw std::logic_error("cocycle_oracle: representative drift");
    return prod.zeta;
}

MuN cocycle_oracle_with_units(const HeckeSpec& spec, const std::vector<mpz_class>& y1,
                              const std::vector<mpz_class>& y2,
                              const std::vector<mpz_class>& w1,
                              const std::vector<mpz_class>& w2,
                              const std::vector<mpz_class>& w12) {
    spec.require_member(y1);
    spec.require_member(y2);
    spec.cover.require_split();
    std::size_t r = y1.size();
    auto make = [&](const std::vector<mpz_class>& y, const std::vector<mpz_class>& w) {
        TorusPoint t;
        for (std::size_t i = 0; i < r; ++i)
            t.coords.push_back(tame_canonical(spec.cover.field, y[i], w[i]));
        return t;
    };
    TorusPoint s = make(y1, w1), t = make(y2, w2);
    MuN full = cocycle(spec.cover, s, t);
    // st = rep'(y1+y2) * t0 with t0 the leftover unit point; peel off the
    // section's trivialization over T-degree-zero units.
    std::vector<mpz_class> sum(r), rest(r);
    for (std::size_t i = 0; i < r; ++i) {
        sum[i] = y1[i] + y2[i];
        rest[i] = w1[i] + w2[i] - w12[i];
    }
    TorusPoint rep12 = make(sum, w12);
    TorusPoint t0;
    for (std::size_t i = 0; i < r; ++i)
        t0.coords.push_back(tame_canonical(spec.cover.field, 0, rest[i]));
    MuN correction = cocycle(spec.cover, rep12, t0);
    return mun_mul(spec.cover.field, full, mun_inv(spec.cover.field, correction));
}

TameElement residue_uniformizer_symbol(const LocalFieldSpec& field, const mpz_class& a,
                                       const mpz_class& b) {
    return tame_canonical(field, 0, a * b * field.minus_one_exp());
}

MuN cocycle_bd(const HeckeSpec& spec, const std::vector<mpz_class>& y1,
               const std::vector<mpz_class>& y2) {
    spec.require_member(y1);
    spec.require_member(y2);
    const LocalFieldSpec& f = spec.cover.field;
    // C-weighted product of residues of {u^{y1_i}, u^{y2_j}}, then h_n.
    TameElement res{0, 0};
    for (std::size_t i = 0; i < y1.size(); ++i)
        for (std::size_t j = 0; j < y2.size(); ++j) {
            const mpz_class& c = spec.cover.datum.C.at(i, j);
            if (c == 0) continue;
            res = tame_mul(f, res, tame_pow(f, residue_uniformizer_symbol(f, y1[i], y2[j]), c));
        }
    mpz_class e = res.unit_exp;  // h_n: g^u -> zeta^u
    if (spec.cover.symbol.convention == SymbolConvention::inverse) e = -e;
    return mun_canonical(f, e);
}

Cyclotomic epsilon(const HeckeSpec& spec, const MuN& z) {
    return Cyclotomic::root_of_unity(spec.cover.field.n.get_ui(), z.exponent);
}

HeckeElement hecke_delta(const HeckeSpec& spec, const std::vector<mpz_class>& y) {
    spec.require_member(y);
    HeckeElement e;
    e.support[y] = Cyclotomic::from_rational(spec.cover.field.n.get_ui(), 1);
    return e;
}

HeckeElement hecke_add(const HeckeSpec& spec, const HeckeElement& a, const HeckeElement& b) {
    (void)spec;
    HeckeElement out = a;
    for (const auto& [y, c] : b.support) {
        auto it = out.support.find(y);
        if (it == out.support.end()) {
            out.support[y] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) out.support.erase(it);
        }
    }
    return out;
}

HeckeElement hecke_scale(const HeckeSpec& spec, const Cyclotomic& s, const HeckeElement& a) {
    (void)spec;
    HeckeElement out;
    for (const auto& [y, c] : a.support) {
        Cyclotomic v = c * s;
        if (!v.is_zero()) out.support[y] = v;
    }
    return out;
}

HeckeElement convolve(const HeckeSpec& spec, const HeckeElement& f1, const HeckeElement& f2) {
    HeckeElement out;
    for (const auto& [y1, c1] : f1.support)
        for (const auto& [y2, c2] : f2.support) {
            std::vector<mpz_class> sum(y1.size());
            for (std::size_t i = 0; i < y1.size(); ++i) sum[i] = y1[i] + y2[i];
            Cyclotomic v = c1 * c2 * epsilon(spec, cocycle_closed(spec, y1, y2));
            auto it = out.support.find(sum);
            if (it == out.support.end()) {
                if (!v.is_zero()) out.support[sum] = v;
            } else {
                it->second = it->second + v;
                if (it->second.is_zero()) out.support.erase(it);
            }
        }
    return out;
}

std::vector<std::vector<mpz_class>> lambda_box(const HeckeSpec& spec, long bound) {
    std::size_t r = spec.lambda.ambient_rank();
    std::vector<std::vector<mpz_class>> out;
    std::vector<long> cur(r, -bound);
    for (;;) {
        std::vector<mpz_class> v(cur.begin(), cur.end());
        if (spec.lambda.contains(v)) out.push_back(v);
        std::size_t i = 0;
        while (i < r) {
            if (++cur[i] <= bound) break;
            cur[i] = -bound;
            ++i;
        }
        if (i == r) break;
    }
    return out;
}

bool is_commutative(const HeckeSpec& spec, long bound) {
    std::vector<std::vector<mpz_class>> pts = lambda_box(spec, bound);
    std::size_t r = spec.lambda.ambient_rank();
    // Representatives must be central against the unit subgroup: otherwise
    // the algebra of bi-invariant functions does not even contain the deltas.
    for (const auto& y : pts) {
        TorusPoint rep = lambda_rep(spec, y);
        for (std::size_t j = 0; j < r; ++j) {
            TorusPoint g = effective_generator(spec.cover, r + j);
            if (!commutator(spec.cover, rep, g).is_trivial()) return false;
        }
    }
    for (const auto& y1 : pts)
        for (const auto& y2 : pts) {
            HeckeElement a = convolve(spec, hecke_delta(spec, y1), hecke_delta(spec, y2));
            HeckeElement b = convolve(spec, hecke_delta(spec, y2), hecke_delta(spec, y1));
            if (!(a == b)) return false;
        }
    return true;
}

std::optional<TorusPoint> support_witness(const HeckeSpec& spec, const TorusPoint& t) {
    if (spec.lambda.contains(val_T(t))) return std::nullopt;
    std::size_t r = spec.cover.rank();
    for (std::size_t j = 0; j < r; ++j) {
        TorusPoint g = effective_generator(spec.cover, r + j);
        if (!commutator(spec.cover, g, t).is_trivial()) return g;
    }
    // Nondegeneracy of the symbol guarantees a generator witness; reaching
    // this point would mean val_T(t) pairs integrally with everything yet
    // lies outside Lambda.
    throw std::logic_error("support_witness: no unit witness found");
}

MuN automorphism_action_hilbert(const HeckeSpec& spec, const std::vector<mpz_class>& x,
                                const TameElement& w, const std::vector<mpz_class>& y) {
    const LocalFieldSpec& f = spec.cover.field;
    if (w.val != 0) throw std::invalid_argument("automorphism_action: w must be a unit");
    spec.require_member(y);
    TorusPoint rep = lambda_rep(spec, y);
    TorusPoint wx;
    for (std::size_t i = 0; i < x.size(); ++i) wx.coords.push_back(tame_pow(f, w, x[i]));
    return hilbert_pairing_T(f, rep, wx, spec.cover.symbol);
}

MuN automorphism_action_bd(const HeckeSpec& spec, const std::vector<mpz_class>& x,
                           const TameElement& w, const std::vector<mpz_class>& y) {
    const LocalFieldSpec& f = spec.cover.field;
    if (w.val != 0) throw std::invalid_argument("automorphism_action: w must be a unit");
    spec.require_member(y);
    mpz_class pairing = 0;
    for (std::size_t i = 0; i < x.size(); ++i) pairing += x[i] * y[i];
    // Theta(w)^{<x,y>} as a residue unit, pushed to mu_n by h_n.
    TameElement res = tame_canonical(f, 0, pairing * w.unit_exp);
    return mun_canonical(f, res.unit_exp);
}

MuN automorphism_action(const HeckeSpec& spec, const std::vector<mpz_class>& x,
                        const TameElement& w, const std::vector<mpz_class>& y) {
    MuN a = automorphism_action_hilbert(spec, x, w, y);
    MuN b = automorphism_action_bd(spec, x, w, y);
    if (!(a == b)) throw std::logic_error("automorphism_action: path disagreement");
    return a;
}

}  // namespace bdtori
