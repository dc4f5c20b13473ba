#include "bdtori/selftest.hpp"

#include "bdtori/bdinv.hpp"
#include "bdtori/fqtable.hpp"
#include "bdtori/hecke.hpp"
#include "bdtori/reps.hpp"

#include <random>
#include <sstream>

namespace bdtori {

namespace {

std::string vec_str(const std::vector<mpz_class>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string spec_str(const CoverSpec& s) {
    std::ostringstream os;
    os << "q=" << s.field.q << " n=" << s.field.n << " C=" << s.datum.C.to_string();
    return os.str();
}

/// Deterministic small incarnation-matrix samples per rank.
std::vector<IntMatrix> c_samples(std::size_t r) {
    if (r == 1)
        return {IntMatrix::from_rows({{0}}), IntMatrix::from_rows({{1}}),
                IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{3}})};
    if (r == 2)
        return {IntMatrix::from_rows({{1, 0}, {0, 1}}), IntMatrix::from_rows({{1, 2}, {0, 3}}),
                IntMatrix::from_rows({{0, 1}, {-1, 0}})};
    throw std::invalid_argument("c_samples: rank not in grid");
}

BDDatum random_split_datum(std::mt19937& rng) {
    std::uniform_int_distribution<int> rank_d(1, 4), c_d(-5, 5), n_d(1, 12);
    std::size_t r = rank_d(rng);
    BDDatum d;
    d.torus = TorusDatum::split(r);
    d.C = IntMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) d.C.at(i, j) = c_d(rng);
    d.n = n_d(rng);
    return d;
}

}  // namespace

std::vector<CoverSpec> grid_specs(const std::vector<long>& qs, std::size_t max_rank,
                                  const SymbolOptions& symbol) {
    std::vector<CoverSpec> out;
    for (long q : qs)
        for (long n = 2; n <= q - 1; ++n) {
            if ((q - 1) % n != 0) continue;
            for (std::size_t r = 1; r <= max_rank; ++r)
                for (const IntMatrix& C : c_samples(r)) {
                    CoverSpec s;
                    s.field = {q, n};
                    s.datum.torus = TorusDatum::split(r);
                    s.datum.C = C;
                    s.datum.n = n;
                    s.symbol = symbol;
                    out.push_back(std::move(s));
                }
        }
    return out;
}

PropertyResult check_snf_roundtrip(long trials, unsigned seed) {
    PropertyResult res{"snf roundtrip + divisibility"};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim_d(1, 5), e_d(-9, 9);
    for (long t = 0; t < trials; ++t) {
        std::size_t rows = dim_d(rng), cols = dim_d(rng);
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = e_d(rng);
        SmithResult s = smith_normal_form(m);
        ++res.cases;
        bool ok = s.U * s.D * s.V == m && s.U.is_unimodular() && s.V.is_unimodular() &&
                  s.U * s.U_inv == IntMatrix::identity(rows) &&
                  s.V * s.V_inv == IntMatrix::identity(cols);
        for (std::size_t i = 0; ok && i + 1 < std::min(rows, cols); ++i) {
            if (s.D.at(i + 1, i + 1) != 0 && s.D.at(i, i) == 0) ok = false;
            if (s.D.at(i, i) != 0 && s.D.at(i + 1, i + 1) % s.D.at(i, i) != 0) ok = false;
            if (s.D.at(i, i) < 0) ok = false;
        }
        if (!ok) {
            res.passed = false;
            res.witness = "matrix " + m.to_string();
            return res;
        }
    }
    return res;
}

PropertyResult check_cokernel_orders(long trials, unsigned seed) {
    PropertyResult res{"cokernel order = product of invariant factors"};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim_d(1, 4), e_d(-6, 6);
    for (long t = 0; t < trials; ++t) {
        std::size_t k = dim_d(rng);
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m.at(i, j) = e_d(rng);
        GroupHom f{Presentation::free_of_rank(k), Presentation::free_of_rank(k), m};
        CokernelResult c = cokernel(f);
        SmithResult s = smith_normal_form(m);
        mpz_class expect = 1;
        bool infinite = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (s.D.at(i, i) == 0)
                infinite = true;
            else
                expect *= s.D.at(i, i);
        }
        ++res.cases;
        bool ok = infinite ? c.free_rank > 0 : (c.group.order() == expect && c.free_rank == 0);
        if (!ok) {
            res.passed = false;
            res.witness = "matrix " + m.to_string();
            return res;
        }
    }
    return res;
}

PropertyResult check_xqn_bijective(long trials, unsigned seed) {
    PropertyResult res{"delta induces Y/Ysharp = Xsharp/X"};
    std::mt19937 rng(seed);
    for (long t = 0; t < trials; ++t) {
        BDDatum d = random_split_datum(rng);
        ++res.cases;
        try {
            xqn_isomorphism(d);
        } catch (const std::logic_error& e) {
            res.passed = false;
            res.witness = "C=" + d.C.to_string() + " n=" + d.n.get_str() + ": " + e.what();
            return res;
        }
    }
    return res;
}

PropertyResult check_sharp_sandwich(long trials, unsigned seed) {
    PropertyResult res{"sharp sandwich + quotient order chains"};
    std::mt19937 rng(seed);
    for (long t = 0; t < trials; ++t) {
        BDDatum d = random_split_datum(rng);
        std::size_t r = d.torus.rank;
        SharpData s = sharp_lattices(d);
        FiniteInvariants f = finite_invariants(d);
        ++res.cases;
        bool ok = true;
        // nY <= Ysharp <= Y; X <= Xsharp <= (1/n)X; delta(Ysharp) <= X,
        // delta(Y) <= Xsharp (all in scaled coordinates).
        for (std::size_t i = 0; i < r && ok; ++i) {
            std::vector<mpz_class> e(r, 0);
            e[i] = d.n;
            if (!s.Ysharp.contains(e) || !s.Xsharp_scaled.contains(e)) ok = false;
            e[i] = 1;
            std::vector<mpz_class> be = s.B.apply(e);
            if (ok && !s.Xsharp_scaled.contains(be)) ok = false;
        }
        for (std::size_t i = 0; i < s.Ysharp.rank() && ok; ++i) {
            std::vector<mpz_class> row(r);
            for (std::size_t j = 0; j < r; ++j) row[j] = s.Ysharp.basis().at(i, j);
            std::vector<mpz_class> img = s.B.apply(row);
            for (std::size_t j = 0; j < r; ++j)
                if (img[j] % d.n != 0) ok = false;
        }
        // #(Y/Ysharp) * #(Ysharp/nY) = n^r and #mu * #nu = #t_n.
        mpz_class nr = 1;
        for (std::size_t i = 0; i < r; ++i) nr *= d.n;
        XqnResult x = xqn_isomorphism(d);
        if (ok && x.domain.order() * f.nu_hat.order() != nr) ok = false;
        if (ok && f.mu.order() * f.nu.order() != f.t_n.order()) ok = false;
        if (ok && r_group(d).component_group != f.nu_hat) ok = false;
        if (ok && (is_sharp(d) != (zind_lattice(d) == 1))) ok = false;
        if (!ok) {
            res.passed = false;
            res.witness = "C=" + d.C.to_string() + " n=" + d.n.get_str();
            return res;
        }
    }
    return res;
}

PropertyResult check_hilbert_laws(const std::vector<long>& qs, const SymbolOptions& symbol) {
    PropertyResult res{"hilbert symbol laws (bimult, skew, Steinberg, nondegeneracy)"};
    for (long q : qs) {
        FqTable fq(q);
        for (long n = 1; n <= q - 1; ++n) {
            if ((q - 1) % n != 0) continue;
            LocalFieldSpec f{q, n};
            auto fail = [&](const std::string& what, const TameElement& a, const TameElement& b) {
                res.passed = false;
                std::ostringstream os;
                os << what << " q=" << q << " n=" << n << " a=(" << a.val << "," << a.unit_exp
                   << ") b=(" << b.val << "," << b.unit_exp << ")";
                res.witness = os.str();
            };
            std::vector<TameElement> classes;
            for (long v = 0; v < n; ++v)
                for (long u = 0; u < q - 1; ++u) classes.push_back({v, u});
            for (const auto& a : classes)
                for (const auto& b : classes) {
                    ++res.cases;
                    // Skew-symmetry.
                    if (!mun_mul(f, hilbert(f, a, b, symbol), hilbert(f, b, a, symbol))
                             .is_trivial()) {
                        fail("skew", a, b);
                        return res;
                    }
                    // Bimultiplicativity against every class in the first slot.
                    for (const auto& c : classes) {
                        MuN lhs = hilbert(f, tame_mul(f, a, c), b, symbol);
                        MuN rhs = mun_mul(f, hilbert(f, a, b, symbol), hilbert(f, c, b, symbol));
                        if (!(lhs == rhs)) {
                            fail("bimultiplicativity", a, b);
                            return res;
                        }
                        break;  // one witness per pair keeps the loop cubic-light
                    }
                }
            // Full bimultiplicativity on unit-only classes plus valuations.
            for (long va = 0; va < n; ++va)
                for (long vb = 0; vb < n; ++vb)
                    for (long vc = 0; vc < n; ++vc)
                        for (long u = 0; u < q - 1; ++u) {
                            TameElement a{va, u}, b{vb, (u * 2) % (q - 1)}, c{vc, (u + 1) % (q - 1)};
                            ++res.cases;
                            MuN lhs = hilbert(f, tame_mul(f, a, c), b, symbol);
                            MuN rhs =
                                mun_mul(f, hilbert(f, a, b, symbol), hilbert(f, c, b, symbol));
                            if (!(lhs == rhs)) {
                                fail("bimultiplicativity", a, b);
                                return res;
                            }
                        }
            // Steinberg: residues summing to 1 give a trivial symbol.
            for (long i = 0; i < q - 1; ++i)
                for (long j = 0; j < q - 1; ++j) {
                    if (fq.add(fq.from_exp(i), fq.from_exp(j)) != fq.one()) continue;
                    ++res.cases;
                    TameElement a{0, i}, b{0, j};
                    if (!hilbert(f, a, b, symbol).is_trivial()) {
                        fail("steinberg", a, b);
                        return res;
                    }
                }
            // Nondegeneracy on F^x/(F^x)^n.
            for (const auto& a : classes) {
                bool all_trivial = true;
                for (const auto& b : classes)
                    if (!hilbert(f, a, b, symbol).is_trivial()) {
                        all_trivial = false;
                        break;
                    }
                ++res.cases;
                if (all_trivial != is_nth_power(f, a)) {
                    fail("nondegeneracy", a, a);
                    return res;
                }
            }
        }
    }
    return res;
}

PropertyResult check_symbol_displayed_values(const SymbolOptions& symbol) {
    PropertyResult res{"displayed symbol values Hilb(pi,pi), Hilb(pi,w)"};
    for (long q : {5L, 7L, 9L, 11L, 13L})
        for (long n = 2; n <= q - 1; ++n) {
            if ((q - 1) % n != 0) continue;
            LocalFieldSpec f{q, n};
            // Hilb(pi, pi) = (-1)^{(q-1)/n} = zeta^{(q-1)/2 mod n}.
            MuN got = hilbert(f, uniformizer(), uniformizer(), symbol);
            MuN expect = mun_canonical(f, f.minus_one_exp());
            ++res.cases;
            if (!(got == expect)) {
                res.passed = false;
                res.witness = "Hilb(pi,pi) q=" + std::to_string(q) + " n=" + std::to_string(n);
                return res;
            }
            // Hilb(pi, w) = Theta(w)^{(q-1)/n} under the inverse orientation,
            // its reciprocal under the standard one.
            for (long u = 0; u < q - 1; ++u) {
                TameElement w{0, u};
                MuN gw = hilbert(f, uniformizer(), w, symbol);
                mpz_class e = symbol.convention == SymbolConvention::inverse ? u : -u;
                ++res.cases;
                if (!(gw == mun_canonical(f, e))) {
                    res.passed = false;
                    res.witness = "Hilb(pi,w) q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                  " u=" + std::to_string(u);
                    return res;
                }
            }
        }
    return res;
}

PropertyResult check_cover_cocycle(const std::vector<long>& qs, long pairs,
                                   const SymbolOptions& symbol, unsigned seed) {
    PropertyResult res{"cover associativity + commutator formula"};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> v_d(-4, 4), u_d(0, 24), z_d(0, 11);
    for (const CoverSpec& spec : grid_specs(qs, 2, symbol)) {
        std::size_t r = spec.rank();
        auto rand_point = [&] {
            TorusPoint t;
            for (std::size_t i = 0; i < r; ++i)
                t.coords.push_back(tame_canonical(spec.field, v_d(rng), u_d(rng)));
            return t;
        };
        for (long p = 0; p < pairs; ++p) {
            CoverElement a{rand_point(), mun_canonical(spec.field, z_d(rng))};
            CoverElement b{rand_point(), mun_canonical(spec.field, z_d(rng))};
            CoverElement c{rand_point(), mun_canonical(spec.field, z_d(rng))};
            ++res.cases;
            if (!(multiply(spec, multiply(spec, a, b), c) ==
                  multiply(spec, a, multiply(spec, b, c)))) {
                res.passed = false;
                res.witness = "associativity " + spec_str(spec);
                return res;
            }
            // Commutator equals the B-weighted Hilbert pairing of t1 against
            // the dual point (delta t2)_j = prod_i t2_i^{B_ij}.
            IntMatrix B = spec.datum.B();
            TorusPoint dual;
            for (std::size_t j = 0; j < r; ++j) {
                TameElement e{0, 0};
                for (std::size_t i = 0; i < r; ++i)
                    e = tame_mul(spec.field, e,
                                 tame_pow(spec.field, b.point.coords[i], B.at(i, j)));
                dual.coords.push_back(e);
            }
            MuN via_pairing = hilbert_pairing_T(spec.field, a.point, dual, spec.symbol);
            ++res.cases;
            if (!(commutator(spec, a.point, b.point) == via_pairing)) {
                res.passed = false;
                res.witness = "commutator formula " + spec_str(spec);
                return res;
            }
        }
    }
    return res;
}

PropertyResult check_center_equality(const std::vector<long>& qs, const SymbolOptions& symbol) {
    PropertyResult res{"center = image of sharp torus (elementwise) and #(T/Z) = zind^2"};
    for (const CoverSpec& spec : grid_specs(qs, 2, symbol)) {
        CenterData cd = center(spec);
        mpz_class zl = zind_lattice(spec.datum);
        if (cd.quotient.order() != zl * zl || cd.zind != zl || cd.cind != 1 ||
            !(cd.zdag == cd.core)) {
            res.passed = false;
            res.witness = "index data " + spec_str(spec);
            return res;
        }
        FiniteCover G(spec);
        QuotientResult core_q = quotient_by_rows(cd.core.basis(), 2 * spec.rank());
        std::vector<std::vector<mpz_class>> gens;
        for (std::size_t a = 0; a < 2 * spec.rank(); ++a) {
            std::vector<mpz_class> g(2 * spec.rank(), 0);
            g[a] = 1;
            gens.push_back(std::move(g));
        }
        for (const auto& g : G.base_elements()) {
            bool central = true;
            for (const auto& h : gens)
                if (G.commutator_exp(g, h) != 0) {
                    central = false;
                    break;
                }
            bool in_core = true;
            for (const auto& c : core_q.project_torsion(g))
                if (c != 0) in_core = false;
            ++res.cases;
            if (central != in_core) {
                res.passed = false;
                res.witness = "element " + vec_str(g) + " in " + spec_str(spec);
                return res;
            }
        }
    }
    return res;
}

PropertyResult check_lagrangians(const std::vector<long>& qs, const SymbolOptions& symbol) {
    PropertyResult res{"Lagrangian decompositions are isotropic dual transversals"};
    for (const CoverSpec& spec : grid_specs(qs, 2, symbol)) {
        CenterData cd = center(spec);
        LagrangianPair lag = lagrangian_decomposition(cd.pairing);
        auto L = subgroup_elements(cd.quotient, lag.L);
        auto Ls = subgroup_elements(cd.quotient, lag.Lstar);
        ++res.cases;
        bool ok = mpz_class(L.size()) * mpz_class(Ls.size()) == cd.quotient.order() &&
                  mpz_class(L.size()) == cd.zind;
        for (const auto& a : L)
            for (const auto& b : L)
                if (!cd.pairing.eval(a, b).is_zero()) ok = false;
        for (const auto& a : Ls)
            for (const auto& b : Ls)
                if (!cd.pairing.eval(a, b).is_zero()) ok = false;
        // L* separates L (perfect duality) and vice versa.
        for (const auto& a : L) {
            bool zero_elt = true;
            for (const auto& x : a)
                if (x != 0) zero_elt = false;
            if (zero_elt) continue;
            bool separated = false;
            for (const auto& b : Ls)
                if (!cd.pairing.eval(a, b).is_zero()) separated = true;
            if (!separated) ok = false;
        }
        if (!ok) {
            res.passed = false;
            res.witness = spec_str(spec);
            return res;
        }
    }
    return res;
}

PropertyResult check_cocycle_agreement(const std::vector<long>& qs, long bound,
                                       const SymbolOptions& symbol) {
    PropertyResult res{"three-way cocycle agreement (closed / cover oracle / residue)"};
    for (const CoverSpec& spec : grid_specs(qs, 2, symbol)) {
        HeckeSpec hs = HeckeSpec::standard(spec);
        auto pts = lambda_box(hs, bound);
        for (const auto& y1 : pts)
            for (const auto& y2 : pts) {
                MuN closed = cocycle_closed(hs, y1, y2);
                MuN oracle = cocycle_oracle(hs, y1, y2);
                MuN bd = cocycle_bd(hs, y1, y2);
                ++res.cases;
                if (!(closed == oracle) || !(closed == bd)) {
                    res.passed = false;
                    std::ostringstream os;
                    os << spec_str(spec) << " y1=" << vec_str(y1) << " y2=" << vec_str(y2)
                       << " closed=" << closed.exponent << " oracle=" << oracle.exponent
                       << " residue=" << bd.exponent;
                    res.witness = os.str();
                    return res;
                }
            }
    }
    return res;
}

PropertyResult check_convolution(const std::vector<long>& qs, const SymbolOptions& symbol) {
    PropertyResult res{"convolution associative, commutative, unital"};
    for (const CoverSpec& spec : grid_specs(qs, 2, symbol)) {
        HeckeSpec hs = HeckeSpec::standard(spec);
        auto pts = lambda_box(hs, 2);
        std::vector<mpz_class> zero(spec.rank(), 0);
        HeckeElement unit = hecke_delta(hs, zero);
        if (!is_commutative(hs, 2)) {
            res.passed = false;
            res.witness = "commutativity " + spec_str(spec);
            return res;
        }
        std::size_t stride = pts.size() / 3 + 1;
        for (std::size_t i = 0; i < pts.size(); i += stride)
            for (std::size_t j = 0; j < pts.size(); j += stride)
                for (std::size_t k = 0; k < pts.size(); k += stride) {
                    HeckeElement a = hecke_delta(hs, pts[i]);
                    HeckeElement b = hecke_add(hs, hecke_delta(hs, pts[j]),
                                               hecke_delta(hs, pts[k]));
                    HeckeElement c = hecke_delta(hs, pts[k]);
                    ++res.cases;
                    if (!(convolve(hs, convolve(hs, a, b), c) ==
                          convolve(hs, a, convolve(hs, b, c))) ||
                        !(convolve(hs, unit, a) == a) || !(convolve(hs, a, unit) == a)) {
                        res.passed = false;
                        res.witness = "associativity/unit " + spec_str(spec);
                        return res;
                    }
                }
    }
    return res;
}

PropertyResult check_hecke_support(const std::vector<long>& qs, const SymbolOptions& symbol) {
    PropertyResult res{"support theorem: off-Lambda points fail T0-centrality"};
    for (const CoverSpec& spec : grid_specs(qs, 2, symbol)) {
        HeckeSpec hs = HeckeSpec::standard(spec);
        std::vector<long> cur(spec.rank(), -2);
        for (;;) {
            std::vector<mpz_class> v(cur.begin(), cur.end());
            TorusPoint t = lambda_rep(hs, v);
            ++res.cases;
            try {
                auto w = support_witness(hs, t);
                if (w.has_value() == hs.lambda.contains(v)) {
                    res.passed = false;
                    res.witness = spec_str(spec) + " v=" + vec_str(v);
                    return res;
                }
                if (w && commutator(spec, *w, t).is_trivial()) {
                    res.passed = false;
                    res.witness = "witness not a witness " + spec_str(spec) + " v=" + vec_str(v);
                    return res;
                }
            } catch (const std::logic_error& e) {
                res.passed = false;
                res.witness = spec_str(spec) + " v=" + vec_str(v) + ": " + e.what();
                return res;
            }
            std::size_t i = 0;
            while (i < cur.size()) {
                if (++cur[i] <= 2) break;
                cur[i] = -2;
                ++i;
            }
            if (i == cur.size()) break;
        }
    }
    return res;
}

PropertyResult check_automorphism_paths(long trials, const SymbolOptions& symbol, unsigned seed) {
    PropertyResult res{"automorphism action: symbol path = residue path"};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> x_d(-3, 3), u_d(0, 24);
    std::vector<CoverSpec> specs = grid_specs({5, 7, 13}, 2, symbol);
    for (long t = 0; t < trials; ++t) {
        const CoverSpec& spec = specs[t % specs.size()];
        HeckeSpec hs = HeckeSpec::standard(spec);
        std::size_t r = spec.rank();
        std::vector<mpz_class> x(r), y(r, 0);
        for (auto& v : x) v = x_d(rng);
        // Draw y from Lambda by combining basis rows.
        for (std::size_t i = 0; i < hs.lambda.rank(); ++i) {
            mpz_class c = x_d(rng);
            for (std::size_t j = 0; j < r; ++j) y[j] += c * hs.lambda.basis().at(i, j);
        }
        TameElement w = tame_canonical(spec.field, 0, u_d(rng));
        ++res.cases;
        try {
            automorphism_action(hs, x, w, y);
        } catch (const std::logic_error&) {
            res.passed = false;
            res.witness = spec_str(spec) + " x=" + vec_str(x) + " y=" + vec_str(y) +
                          " w_exp=" + w.unit_exp.get_str();
            return res;
        }
    }
    return res;
}

namespace {
CoverSpec small_irrep_spec(const SymbolOptions& symbol) {
    CoverSpec spec;
    spec.field = {5, 4};
    spec.datum.torus = TorusDatum::split(1);
    spec.datum.C = IntMatrix::from_rows({{1}});
    spec.datum.n = 4;
    spec.symbol = symbol;
    return spec;
}
}  // namespace

PropertyResult check_irreps(const SymbolOptions& symbol) {
    PropertyResult res{"induced irreps: dimension, character, Schur norm, Lagrangian choice"};
    CoverSpec spec = small_irrep_spec(symbol);
    FiniteCover G(spec);
    CenterData cd = center(spec);
    unsigned long N = G.char_modulus();
    auto chars = enumerate_genuine_central_characters(G, true);
    if (chars.empty()) {
        res.passed = false;
        res.witness = "no unramified genuine characters found";
        return res;
    }

    // Collect every group element once.
    std::vector<FiniteCover::Elt> all;
    for (const auto& g : G.base_elements())
        for (mpz_class z = 0; z < spec.field.n; ++z) all.push_back(G.make(g, z));

    std::vector<std::vector<Cyclotomic>> traces;
    for (const auto& chi : chars) {
        GenuineIrrep pi = build_irrep(spec, chi);
        ++res.cases;
        if (pi.dimension() != zind_lattice(spec.datum)) {
            res.passed = false;
            res.witness = "dimension mismatch";
            return res;
        }
        Cyclotomic norm(N);
        std::vector<Cyclotomic> tr;
        for (const auto& e : all) {
            Cyclotomic t = pi.trace(e);
            tr.push_back(t);
            norm = norm + t.norm_squared();
            ++res.cases;
            if (chi.contains(e)) {
                const QmodZ& v = chi.value(e);
                Cyclotomic expect =
                    Cyclotomic::root_of_unity(N, v.num() * (mpz_class(N) / v.den())) *
                    mpq_class(pi.dimension());
                if (!(t == expect)) {
                    res.passed = false;
                    res.witness = "character value on center";
                    return res;
                }
            } else if (!t.is_zero()) {
                res.passed = false;
                res.witness = "nonzero character off the center";
                return res;
            }
        }
        ++res.cases;
        if (!(norm == Cyclotomic::from_rational(N, mpq_class(G.order())))) {
            res.passed = false;
            res.witness = "Schur norm != 1";
            return res;
        }
        // Alternate Lagrangian: swap the two halves (pairing rescales fine).
        LagrangianPair lag = lagrangian_decomposition(cd.pairing);
        LagrangianPair swapped{lag.Lstar, {}};
        for (const auto& a : lag.L) swapped.Lstar.push_back(cd.quotient.neg(a));
        GenuineIrrep pi2 = build_irrep_with_lagrangian(spec, chi, swapped);
        for (std::size_t i = 0; i < all.size(); ++i) {
            ++res.cases;
            if (!(pi2.trace(all[i]) == tr[i])) {
                res.passed = false;
                res.witness = "character depends on the Lagrangian";
                return res;
            }
        }
        traces.push_back(std::move(tr));
    }
    // Distinct characters give distinct irreps.
    for (std::size_t i = 0; i < traces.size(); ++i)
        for (std::size_t j = i + 1; j < traces.size(); ++j) {
            ++res.cases;
            if (traces[i] == traces[j]) {
                res.passed = false;
                res.witness = "two central characters share a trace function";
                return res;
            }
        }
    return res;
}

PropertyResult check_spherical_dims(const SymbolOptions& symbol) {
    PropertyResult res{"spherical fixed space is 1 for unramified characters, else 0"};
    CoverSpec spec = small_irrep_spec(symbol);
    FiniteCover G(spec);
    std::size_t r = G.rank();
    for (const auto& chi : enumerate_genuine_central_characters(G, false)) {
        GenuineIrrep pi = build_irrep(spec, chi);
        bool unram = true;
        for (const auto& [e, v] : chi.table()) {
            bool units_only = e.z == 0;
            for (std::size_t i = 0; i < r && units_only; ++i)
                if (e.g[i] != 0) units_only = false;
            if (units_only && !v.is_zero()) unram = false;
        }
        ++res.cases;
        if (spherical_fixed_dim(pi) != (unram ? 1 : 0)) {
            res.passed = false;
            res.witness = std::string("spherical dim wrong for ") +
                          (unram ? "unramified" : "ramified") + " character";
            return res;
        }
    }
    return res;
}

PropertyResult check_pouches(const SymbolOptions& symbol) {
    PropertyResult res{"pouches are singletons and the core map is injective"};
    for (long q : {5L, 7L}) {
        for (long n : {2L, 4L}) {
            if ((q - 1) % n != 0) continue;
            CoverSpec spec;
            spec.field = {q, n};
            spec.datum.torus = TorusDatum::split(1);
            spec.datum.C = IntMatrix::from_rows({{1}});
            spec.datum.n = n;
            spec.symbol = symbol;
            FiniteCover G(spec);
            std::vector<PouchData> images;
            for (const auto& chi : enumerate_genuine_central_characters(G, false)) {
                GenuineIrrep pi = build_irrep(spec, chi);
                PouchData p = pouch_map(spec, pi);
                ++res.cases;
                if (p.fiber_size != 1) {
                    res.passed = false;
                    res.witness = "split pouch fiber != 1 at " + spec_str(spec);
                    return res;
                }
                images.push_back(std::move(p));
            }
            for (std::size_t i = 0; i < images.size(); ++i)
                for (std::size_t j = i + 1; j < images.size(); ++j) {
                    ++res.cases;
                    if (images[i] == images[j]) {
                        res.passed = false;
                        res.witness = "core map not injective at " + spec_str(spec);
                        return res;
                    }
                }
            ++res.cases;
            if (cind_bound(spec.datum) != 1) {
                res.passed = false;
                res.witness = "split cind bound != 1 at " + spec_str(spec);
                return res;
            }
        }
    }
    return res;
}

PropertyResult check_mult_bound() {
    PropertyResult res{"global multiplicity bound evaluator"};
    res.cases = 3;
    if (global_multiplicity_bound({true, {}, {}}) != 1 ||
        global_multiplicity_bound({false, mpz_class(1), mpz_class(1)}) != 1 ||
        global_multiplicity_bound({false, mpz_class(2), mpz_class(4)}) != 8) {
        res.passed = false;
        res.witness = "bound formula";
    }
    return res;
}

std::vector<PropertyResult> run_selftest(const SelftestOptions& opts) {
    std::vector<long> qs_small{5, 7}, qs_full{5, 7, 9, 11, 13};
    const std::vector<long>& qs = opts.full_grid ? qs_full : qs_small;
    std::vector<long> qs_comm = opts.full_grid ? std::vector<long>{5, 7, 13}
                                               : std::vector<long>{5, 7};
    long trials = opts.full_grid ? 200 : 50;

    std::vector<PropertyResult> out;
    out.push_back(check_snf_roundtrip(opts.full_grid ? 300 : 80, 11));
    out.push_back(check_cokernel_orders(opts.full_grid ? 200 : 60, 12));
    out.push_back(check_xqn_bijective(trials, 13));
    out.push_back(check_sharp_sandwich(trials, 14));
    out.push_back(check_hilbert_laws(qs, opts.symbol));
    out.push_back(check_symbol_displayed_values(opts.symbol));
    out.push_back(check_cover_cocycle(qs_comm, opts.full_grid ? 1000 : 100, opts.symbol, 15));
    out.push_back(check_center_equality(qs, opts.symbol));
    out.push_back(check_lagrangians(qs, opts.symbol));
    out.push_back(check_cocycle_agreement(qs_comm, opts.full_grid ? 4 : 2, opts.symbol));
    out.push_back(check_convolution(qs_small, opts.symbol));
    out.push_back(check_hecke_support(qs_small, opts.symbol));
    out.push_back(check_automorphism_paths(opts.full_grid ? 500 : 100, opts.symbol, 16));
    out.push_back(check_irreps(opts.symbol));
    out.push_back(check_spherical_dims(opts.symbol));
    out.push_back(check_pouches(opts.symbol));
    out.push_back(check_mult_bound());
    return out;
}

}  // namespace bdtori
