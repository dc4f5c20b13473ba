#include "bdtori/localfield.hpp"

namespace bdtori {

namespace {
mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}
}  // namespace

TameElement tame_canonical(const LocalFieldSpec& spec, const mpz_class& val,
                           const mpz_class& unit_exp) {
    return {val, mod_pos(unit_exp, spec.q - 1)};
}

TameElement tame_mul(const LocalFieldSpec& spec, const TameElement& a, const TameElement& b) {
    return tame_canonical(spec, a.val + b.val, a.unit_exp + b.unit_exp);
}

TameElement tame_inv(const LocalFieldSpec& spec, const TameElement& a) {
    return tame_canonical(spec, -a.val, -a.unit_exp);
}

TameElement tame_pow(const LocalFieldSpec& spec, const TameElement& a, const mpz_class& k) {
    return tame_canonical(spec, a.val * k, a.unit_exp * k);
}

MuN mun_canonical(const LocalFieldSpec& spec, const mpz_class& exponent) {
    return {mod_pos(exponent, spec.n)};
}

MuN mun_mul(const LocalFieldSpec& spec, const MuN& a, const MuN& b) {
    return mun_canonical(spec, a.exponent + b.exponent);
}

MuN mun_inv(const LocalFieldSpec& spec, const MuN& a) {
    return mun_canonical(spec, -a.exponent);
}

MuN mun_pow(const LocalFieldSpec& spec, const MuN& a, const mpz_class& k) {
    return mun_canonical(spec, a.exponent * k);
}

MuN hilbert(const LocalFieldSpec& spec, const TameElement& a, const TameElement& b,
            const SymbolOptions& opts) {
    // c = (-1)^{v(a)v(b)} u_a^{v(b)} u_b^{-v(a)} = g^E in the residue field;
    // the symbol is c^{(q-1)/n} = zeta^E with zeta = g^{(q-1)/n}.
    mpz_class e1 = spec.minus_one_exp();
    mpz_class E = b.val * a.unit_exp - a.val * b.unit_exp;
    if (!opts.mutate_vv_sign) E += a.val * b.val * e1;
    E = mod_pos(E, spec.q - 1);
    if (opts.convention == SymbolConvention::inverse) E = -E;
    return mun_canonical(spec, E);
}

bool is_nth_power(const LocalFieldSpec& spec, const TameElement& a) {
    return a.val % spec.n == 0 && a.unit_exp % spec.n == 0;
}

TorusPoint torus_identity(std::size_t rank) {
    return {std::vector<TameElement>(rank, TameElement{0, 0})};
}

TorusPoint torus_mul(const LocalFieldSpec& spec, const TorusPoint& a, const TorusPoint& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("torus_mul: rank mismatch");
    TorusPoint out;
    out.coords.reserve(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
        out.coords.push_back(tame_mul(spec, a.coords[i], b.coords[i]));
    return out;
}

TorusPoint torus_inv(const LocalFieldSpec& spec, const TorusPoint& a) {
    TorusPoint out;
    out.coords.reserve(a.rank());
    for (const auto& c : a.coords) out.coords.push_back(tame_inv(spec, c));
    return out;
}

std::vector<mpz_class> val_T(const TorusPoint& t) {
    std::vector<mpz_class> v;
    v.reserve(t.rank());
    for (const auto& c : t.coords) v.push_back(c.val);
    return v;
}

TameElement evaluate_character(const LocalFieldSpec& spec, const std::vector<mpz_class>& x,
                               const TorusPoint& t) {
    if (x.size() != t.rank()) throw std::invalid_argument("evaluate_character: rank mismatch");
    TameElement out{0, 0};
    for (std::size_t i = 0; i < x.size(); ++i)
        out = tame_mul(spec, out, tame_pow(spec, t.coords[i], x[i]));
    return out;
}

MuN hilbert_pairing_T(const LocalFieldSpec& spec, const TorusPoint& t, const TorusPoint& t_hat,
                      const SymbolOptions& opts) {
    if (t.rank() != t_hat.rank()) throw std::invalid_argument("hilbert_pairing_T: rank mismatch");
    MuN out{0};
    for (std::size_t i = 0; i < t.rank(); ++i)
        out = mun_mul(spec, out, hilbert(spec, t.coords[i], t_hat.coords[i], opts));
    return out;
}

}  // namespace bdtori
