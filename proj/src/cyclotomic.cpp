#include "bdtori/cyclotomic.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace bdtori {

namespace {

/// Exact division of integer polynomials (ascending coefficients); the
/// remainder must vanish.
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                         const std::vector<mpz_class>& den) {
    if (den.empty() || den.back() != 1)
        throw std::invalid_argument("poly_divide_exact: divisor must be monic");
    if (num.size() < den.size()) throw std::invalid_argument("poly_divide_exact: degree");
    std::vector<mpz_class> quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class c = num[i + den.size() - 1];
        quot[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return quot;
}

const std::vector<mpz_class>& phi_cached(unsigned long N) {
    static std::map<unsigned long, std::vector<mpz_class>> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    // x^N - 1 divided by the product of Phi_d over proper divisors d of N.
    std::vector<mpz_class> num(N + 1, 0);
    num[0] = -1;
    num[N] = 1;
    for (unsigned long d = 1; d < N; ++d)
        if (N % d == 0) num = poly_divide_exact(std::move(num), phi_cached(d));
    return cache.emplace(N, std::move(num)).first->second;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned long N) {
    if (N == 0) throw std::invalid_argument("cyclotomic_polynomial: N must be >= 1");
    return phi_cached(N);
}

Cyclotomic::Cyclotomic(unsigned long N) : N_(N) {
    if (N == 0) throw std::invalid_argument("Cyclotomic: N must be >= 1");
    coeffs_.assign(phi_cached(N).size() - 1, mpq_class(0));
    if (coeffs_.empty()) coeffs_.assign(1, mpq_class(0));  // N = 1: degree-1 field Q
}

Cyclotomic Cyclotomic::from_rational(unsigned long N, const mpq_class& q) {
    Cyclotomic z(N);
    z.coeffs_[0] = q;
    z.coeffs_[0].canonicalize();
    return z;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned long N, const mpz_class& k) {
    mpz_class kk;
    mpz_class n(static_cast<unsigned long>(N));
    mpz_fdiv_r(kk.get_mpz_t(), k.get_mpz_t(), n.get_mpz_t());
    unsigned long e = kk.get_ui();
    // x^e reduced mod Phi_N, by repeated use of the monic relation.
    const std::vector<mpz_class>& phi = phi_cached(N);
    std::size_t d = phi.size() - 1;
    Cyclotomic z(N);
    if (d == 0) {  // N = 1 handled via degree-1 storage
        z.coeffs_[0] = 1;
        return z;
    }
    std::vector<mpq_class> poly(e + 1, mpq_class(0));
    poly[e] = 1;
    for (std::size_t i = poly.size(); i-- > d;) {
        mpq_class c = poly[i];
        if (c == 0) continue;
        poly[i] = 0;
        for (std::size_t j = 0; j < d; ++j) poly[i - d + j] -= c * mpq_class(phi[j]);
    }
    for (std::size_t j = 0; j < d && j < poly.size(); ++j) {
        z.coeffs_[j] = poly[j];
        z.coeffs_[j].canonicalize();
    }
    return z;
}

void Cyclotomic::check_compatible(const Cyclotomic& rhs) const {
    if (N_ != rhs.N_) throw std::invalid_argument("Cyclotomic: modulus mismatch");
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    check_compatible(rhs);
    Cyclotomic z(N_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        z.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
        z.coeffs_[i].canonicalize();
    }
    return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z(N_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) z.coeffs_[i] = -coeffs_[i];
    return z;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    check_compatible(rhs);
    std::size_t d = coeffs_.size();
    std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    const std::vector<mpz_class>& phi = phi_cached(N_);
    std::size_t deg = phi.size() - 1;
    if (deg > 0)
        for (std::size_t i = prod.size(); i-- > deg;) {
            mpq_class c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (std::size_t j = 0; j < deg; ++j) prod[i - deg + j] -= c * mpq_class(phi[j]);
        }
    Cyclotomic z(N_);
    for (std::size_t i = 0; i < z.coeffs_.size() && i < prod.size(); ++i) {
        z.coeffs_[i] = prod[i];
        z.coeffs_[i].canonicalize();
    }
    return z;
}

Cyclotomic Cyclotomic::operator*(const mpq_class& s) const {
    Cyclotomic z(N_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        z.coeffs_[i] = coeffs_[i] * s;
        z.coeffs_[i].canonicalize();
    }
    return z;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic z(N_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        z = z + root_of_unity(N_, -mpz_class(static_cast<unsigned long>(i))) * coeffs_[i];
    }
    return z;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace bdtori
