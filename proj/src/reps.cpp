#include "bdtori/reps.hpp"

#include <algorithm>

namespace bdtori {

namespace {
mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}
}  // namespace

FiniteCover::FiniteCover(const CoverSpec& spec) : spec_(spec) {
    spec_.validate();
    spec_.require_split();
    std::size_t r = spec_.rank();
    moduli_.reserve(2 * r);
    for (std::size_t i = 0; i < r; ++i) moduli_.push_back(spec_.field.n);
    for (std::size_t i = 0; i < r; ++i) moduli_.push_back(spec_.field.q - 1);
}

mpz_class FiniteCover::base_order() const {
    mpz_class o = 1;
    for (const auto& m : moduli_) o *= m;
    return o;
}

unsigned long FiniteCover::char_modulus() const {
    return mpz_class(spec_.field.n * (spec_.field.q - 1)).get_ui();
}

FiniteCover::Elt FiniteCover::make(std::vector<mpz_class> g, mpz_class z) const {
    if (g.size() != moduli_.size()) throw std::invalid_argument("FiniteCover: bad coordinates");
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = mod_pos(g[i], moduli_[i]);
    return {std::move(g), mod_pos(z, spec_.field.n)};
}

FiniteCover::Elt FiniteCover::identity() const {
    return {std::vector<mpz_class>(moduli_.size(), 0), 0};
}

mpz_class FiniteCover::cocycle_exp(const std::vector<mpz_class>& g,
                                   const std::vector<mpz_class>& h) const {
    TorusPoint a = point_from_effective(spec_, g);
    TorusPoint b = point_from_effective(spec_, h);
    return cocycle(spec_, a, b).exponent;
}

mpz_class FiniteCover::commutator_exp(const std::vector<mpz_class>& g,
                                      const std::vector<mpz_class>& h) const {
    TorusPoint a = point_from_effective(spec_, g);
    TorusPoint b = point_from_effective(spec_, h);
    return commutator(spec_, a, b).exponent;
}

FiniteCover::Elt FiniteCover::mul(const Elt& a, const Elt& b) const {
    std::vector<mpz_class> g(a.g.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = a.g[i] + b.g[i];
    return make(std::move(g), a.z + b.z + cocycle_exp(a.g, b.g));
}

FiniteCover::Elt FiniteCover::inv(const Elt& a) const {
    std::vector<mpz_class> g(a.g.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = -a.g[i];
    Elt b = make(std::move(g), 0);
    b.z = mod_pos(-(a.z + cocycle_exp(b.g, a.g)), spec_.field.n);
    return b;
}

FiniteCover::Elt FiniteCover::pow(Elt a, mpz_class k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    Elt out = identity();
    for (mpz_class i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

std::vector<std::vector<mpz_class>> FiniteCover::base_elements() const {
    std::vector<std::vector<mpz_class>> out;
    std::vector<mpz_class> cur(moduli_.size(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t i = moduli_.size();
        bool done = true;
        while (i > 0) {
            --i;
            cur[i] += 1;
            if (cur[i] < moduli_[i]) {
                done = false;
                break;
            }
            cur[i] = 0;
        }
        if (done) break;
    }
    return out;
}

SubgroupCharacter SubgroupCharacter::trivial(const FiniteCover& G) {
    SubgroupCharacter c;
    c.table_[G.identity()] = QmodZ();
    return c;
}

SubgroupCharacter SubgroupCharacter::genuine_seed(const FiniteCover& G) {
    SubgroupCharacter c = trivial(G);
    c.extend_with_value(G, G.central(1), QmodZ(1, G.spec().field.n));
    return c;
}

const QmodZ& SubgroupCharacter::value(const FiniteCover::Elt& e) const {
    auto it = table_.find(e);
    if (it == table_.end()) throw std::invalid_argument("character: element outside subgroup");
    return it->second;
}

namespace {
/// Smallest s >= 1 with gen^s inside the table; returns (s, gen^s).
std::pair<mpz_class, FiniteCover::Elt> entry_power(
    const FiniteCover& G, const std::map<FiniteCover::Elt, QmodZ>& table,
    const FiniteCover::Elt& gen) {
    FiniteCover::Elt p = gen;
    mpz_class s = 1;
    while (table.find(p) == table.end()) {
        p = G.mul(p, gen);
        ++s;
        if (s > G.order()) throw std::logic_error("character: generator power never lands");
    }
    return {s, p};
}
}  // namespace

void SubgroupCharacter::extend_with(const FiniteCover& G, const FiniteCover::Elt& gen) {
    if (contains(gen)) return;
    auto [s, ps] = entry_power(G, table_, gen);
    const QmodZ& target = table_.at(ps);
    extend_with_value(G, gen, QmodZ(target.num(), target.den() * s));
}

void SubgroupCharacter::extend_with_value(const FiniteCover& G, const FiniteCover::Elt& gen,
                                          const QmodZ& v) {
    if (contains(gen)) {
        if (!(value(gen) == v)) throw std::invalid_argument("character: conflicting value");
        return;
    }
    auto [s, ps] = entry_power(G, table_, gen);
    if (!(v * s == table_.at(ps)))
        throw std::invalid_argument("character: value incompatible with subgroup");
    for (const auto& [h, hv] : table_)
        if (!(G.mul(gen, h) == G.mul(h, gen)))
            throw std::invalid_argument("character: enlarged subgroup not abelian");
    std::map<FiniteCover::Elt, QmodZ> next = table_;
    FiniteCover::Elt p = gen;
    for (mpz_class t = 1; t < s; ++t) {
        for (const auto& [h, hv] : table_) {
            auto [it, fresh] = next.emplace(G.mul(h, p), hv + v * t);
            if (!fresh) throw std::logic_error("character: coset collision during extension");
        }
        p = G.mul(p, gen);
    }
    table_ = std::move(next);
}

std::vector<SubgroupCharacter> enumerate_genuine_central_characters(const FiniteCover& G,
                                                                    bool unramified_only) {
    CenterData cd = center(G.spec());
    std::vector<FiniteCover::Elt> gens;
    for (std::size_t i = 0; i < cd.zdag.rank(); ++i) {
        std::vector<mpz_class> row(cd.zdag.ambient_rank());
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = cd.zdag.basis().at(i, j);
        gens.push_back(G.make(std::move(row), 0));
    }

    std::vector<SubgroupCharacter> out;
    std::vector<SubgroupCharacter> stack{SubgroupCharacter::genuine_seed(G)};
    std::vector<std::size_t> depth{0};
    while (!stack.empty()) {
        SubgroupCharacter cur = std::move(stack.back());
        stack.pop_back();
        std::size_t d = depth.back();
        depth.pop_back();
        while (d < gens.size() && cur.contains(gens[d])) ++d;
        if (d == gens.size()) {
            out.push_back(std::move(cur));
            continue;
        }
        auto [s, ps] = [&] {
            FiniteCover::Elt p = gens[d];
            mpz_class ss = 1;
            while (!cur.contains(p)) {
                p = G.mul(p, gens[d]);
                ++ss;
            }
            return std::make_pair(ss, p);
        }();
        QmodZ target = cur.value(ps);
        for (mpz_class j = 0; j < s; ++j) {
            SubgroupCharacter branch = cur;
            branch.extend_with_value(G, gens[d],
                                     QmodZ(target.num() + j * target.den(), target.den() * s));
            stack.push_back(std::move(branch));
            depth.push_back(d + 1);
        }
    }

    if (unramified_only) {
        std::size_t r = G.rank();
        std::vector<SubgroupCharacter> kept;
        for (const auto& chi : out) {
            bool ok = true;
            for (const auto& [e, v] : chi.table()) {
                bool units_only = e.z == 0;
                for (std::size_t i = 0; i < r && units_only; ++i)
                    if (e.g[i] != 0) units_only = false;
                if (units_only && !v.is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok) kept.push_back(chi);
        }
        out = std::move(kept);
    }

    std::sort(out.begin(), out.end(), [](const SubgroupCharacter& a, const SubgroupCharacter& b) {
        auto ia = a.table().begin();
        auto ib = b.table().begin();
        for (; ia != a.table().end() && ib != b.table().end(); ++ia, ++ib) {
            if (ia->first < ib->first) return true;
            if (ib->first < ia->first) return false;
            if (ia->second < ib->second) return true;
            if (ib->second < ia->second) return false;
        }
        return a.table().size() < b.table().size();
    });
    return out;
}

std::vector<QmodZ> extend_character(const FiniteAbelianGroup& G,
                                    const std::vector<std::vector<mpz_class>>& subgroup_gens,
                                    const std::vector<QmodZ>& subgroup_values) {
    if (subgroup_gens.size() != subgroup_values.size())
        throw std::invalid_argument("extend_character: generator/value count mismatch");
    std::map<std::vector<mpz_class>, QmodZ> table;
    table[G.normalize(std::vector<mpz_class>(G.num_generators(), 0))] = QmodZ();

    auto add_gen = [&](const std::vector<mpz_class>& gen_raw, std::optional<QmodZ> forced) {
        std::vector<mpz_class> gen = G.normalize(gen_raw);
        if (auto it = table.find(gen); it != table.end()) {
            if (forced && !(it->second == *forced))
                throw std::invalid_argument("extend_character: conflicting value");
            return;
        }
        std::vector<mpz_class> p = gen;
        mpz_class s = 1;
        while (table.find(p) == table.end()) {
            p = G.add(p, gen);
            ++s;
        }
        QmodZ target = table.at(p);
        QmodZ v = forced ? *forced : QmodZ(target.num(), target.den() * s);
        if (!(v * s == target))
            throw std::invalid_argument("extend_character: value incompatible with subgroup");
        std::map<std::vector<mpz_class>, QmodZ> next = table;
        std::vector<mpz_class> q = gen;
        for (mpz_class t = 1; t < s; ++t) {
            for (const auto& [h, hv] : table) next.emplace(G.add(h, q), hv + v * t);
            q = G.add(q, gen);
        }
        table = std::move(next);
    };

    for (std::size_t i = 0; i < subgroup_gens.size(); ++i)
        add_gen(subgroup_gens[i], subgroup_values[i]);
    std::vector<QmodZ> out(G.num_generators());
    for (std::size_t i = 0; i < G.num_generators(); ++i) {
        std::vector<mpz_class> e(G.num_generators(), 0);
        e[i] = 1;
        add_gen(e, std::nullopt);
        out[i] = table.at(G.normalize(e));
    }
    return out;
}

GenuineIrrep::GenuineIrrep(FiniteCover G, SubgroupCharacter chi_M, SubgroupCharacter central_char,
                           std::vector<FiniteCover::Elt> coset_reps)
    : G_(std::move(G)),
      chi_M_(std::move(chi_M)),
      central_char_(std::move(central_char)),
      coset_reps_(std::move(coset_reps)) {
    // Transversal check: distinct representatives lie in distinct cosets,
    // and the cosets exhaust the group.
    for (std::size_t i = 0; i < coset_reps_.size(); ++i)
        for (std::size_t j = i + 1; j < coset_reps_.size(); ++j)
            if (chi_M_.contains(G_.mul(G_.inv(coset_reps_[i]), coset_reps_[j])))
                throw std::logic_error("irrep: coset representatives collide");
    if (chi_M_.subgroup_order() * mpz_class(coset_reps_.size()) != G_.order())
        throw std::logic_error("irrep: cosets do not exhaust the group");
}

MonomialMatrix GenuineIrrep::act(const FiniteCover::Elt& e) const {
    std::size_t d = coset_reps_.size();
    MonomialMatrix m;
    m.perm.assign(d, d);
    m.scalar.assign(d, QmodZ());
    for (std::size_t j = 0; j < d; ++j) {
        FiniteCover::Elt u = G_.mul(e, coset_reps_[j]);
        for (std::size_t i = 0; i < d; ++i) {
            FiniteCover::Elt rest = G_.mul(G_.inv(coset_reps_[i]), u);
            if (chi_M_.contains(rest)) {
                m.perm[j] = i;
                m.scalar[j] = chi_M_.value(rest);
                break;
            }
        }
        if (m.perm[j] == d) throw std::logic_error("irrep: element escapes the coset space");
    }
    return m;
}

Cyclotomic GenuineIrrep::trace(const FiniteCover::Elt& e) const {
    unsigned long N = G_.char_modulus();
    MonomialMatrix m = act(e);
    Cyclotomic tr(N);
    for (std::size_t j = 0; j < m.perm.size(); ++j) {
        if (m.perm[j] != j) continue;
        const QmodZ& v = m.scalar[j];
        mpz_class exp = v.num() * (mpz_class(N) / v.den());
        tr = tr + Cyclotomic::root_of_unity(N, exp);
    }
    return tr;
}

GenuineIrrep build_irrep(const CoverSpec& spec, const SubgroupCharacter& chi) {
    CenterData cd = center(spec);
    return build_irrep_with_lagrangian(spec, chi, lagrangian_decomposition(cd.pairing));
}

GenuineIrrep build_irrep_with_lagrangian(const CoverSpec& spec, const SubgroupCharacter& chi,
                                         const LagrangianPair& lag) {
    FiniteCover G(spec);
    CenterData cd = center(spec);
    if (!(chi.value(G.central(1)) == QmodZ(1, spec.field.n)) && spec.field.n > 1)
        throw std::invalid_argument("build_irrep: character is not genuine");

    auto lift = [&](const std::vector<mpz_class>& cls) {
        std::vector<mpz_class> v(2 * spec.rank(), 0);
        for (std::size_t i = 0; i < cls.size(); ++i) {
            std::vector<mpz_class> gi = cd.quotient_proj.lift_torsion_generator(i);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += cls[i] * gi[j];
        }
        return G.make(std::move(v), 0);
    };

    SubgroupCharacter chi_M = chi;
    for (const auto& gen : lag.L) chi_M.extend_with(G, lift(gen));

    std::vector<std::vector<mpz_class>> lstar = subgroup_elements(cd.quotient, lag.Lstar);
    std::sort(lstar.begin(), lstar.end());
    std::vector<FiniteCover::Elt> reps;
    reps.reserve(lstar.size());
    for (const auto& cls : lstar) reps.push_back(lift(cls));

    GenuineIrrep pi(std::move(G), std::move(chi_M), chi, std::move(reps));
    if (pi.dimension() != cd.zind) throw std::logic_error("build_irrep: dimension != zind");
    return pi;
}

mpz_class spherical_fixed_dim(const GenuineIrrep& pi) {
    const FiniteCover& G = pi.group();
    std::size_t r = G.rank();
    mpz_class qm1 = G.spec().field.q - 1;

    std::vector<mpz_class> cur(r, 0);
    Cyclotomic sum(G.char_modulus());
    mpz_class count = 0;
    for (;;) {
        std::vector<mpz_class> g(2 * r, 0);
        for (std::size_t i = 0; i < r; ++i) g[r + i] = cur[i];
        sum = sum + pi.trace(G.make(std::move(g), 0));
        ++count;
        std::size_t i = 0;
        while (i < r) {
            cur[i] += 1;
            if (cur[i] < qm1) break;
            cur[i] = 0;
            ++i;
        }
        if (i == r) break;
    }
    Cyclotomic avg = sum * mpq_class(1, count.get_ui());
    if (!avg.is_rational()) throw std::logic_error("spherical_fixed_dim: non-rational average");
    mpq_class v = avg.rational_part();
    if (v.get_den() != 1) throw std::logic_error("spherical_fixed_dim: non-integral average");
    return v.get_num();
}

PouchData pouch_map(const CoverSpec& spec, const GenuineIrrep& pi) {
    CenterData cd = center(spec);
    SharpData sharp = sharp_lattices(spec.datum);
    const FiniteCover& G = pi.group();
    std::size_t r = spec.rank();

    PouchData out;
    out.fiber_size = cd.cind;
    for (std::size_t i = 0; i < sharp.Ysharp.rank(); ++i) {
        std::vector<mpz_class> v(2 * r, 0);
        for (std::size_t j = 0; j < r; ++j) v[j] = sharp.Ysharp.basis().at(i, j);
        out.pulled_values.push_back(pi.central_char().value(G.make(std::move(v), 0)));
    }
    for (std::size_t i = 0; i < sharp.Ysharp.rank(); ++i) {
        std::vector<mpz_class> v(2 * r, 0);
        for (std::size_t j = 0; j < r; ++j) v[r + j] = sharp.Ysharp.basis().at(i, j);
        out.pulled_values.push_back(pi.central_char().value(G.make(std::move(v), 0)));
    }
    return out;
}

mpz_class global_multiplicity_bound(const GlobalBoundInput& input) {
    if (input.is_split) return 1;
    if (!input.ker_sha || !input.sha_n)
        throw std::invalid_argument(
            "global_multiplicity_bound: nonsplit input needs ker_sha and sha_n");
    if (*input.ker_sha < 1 || *input.sha_n < 1)
        throw std::invalid_argument("global_multiplicity_bound: cardinalities must be >= 1");
    return *input.ker_sha * *input.sha_n;
}

}  // namespace bdtori
