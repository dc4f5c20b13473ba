#pragma once

#include <stdexcept>
#include <vector>

namespace bdtori {

/// Explicit arithmetic table for a small finite field F_q (q <= ~100),
/// including prime powers. Elements are packed base-p coefficient vectors of
/// polynomials modulo an irreducible polynomial; a multiplicative generator
/// is found by search, and exp/log tables identify F_q^x with Z/(q-1).
///
/// Used only where genuine additive structure is needed (the Steinberg
/// relation); everything else in the tame model is exponent arithmetic.
class FqTable {
public:
    explicit FqTable(long q) : q_(q) {
        long p = smallest_prime_factor(q);
        long k = 0;
        long t = q;
        while (t > 1) {
            if (t % p != 0) throw std::invalid_argument("FqTable: q not a prime power");
            t /= p;
            ++k;
        }
        p_ = p;
        k_ = k;
        modulus_ = irreducible_poly(p, k);
        build_tables();
    }

    long q() const { return q_; }
    long zero() const { return 0; }
    long one() const { return 1; }

    long add(long a, long b) const {
        long out = 0, place = 1;
        for (int i = 0; i < k_; ++i) {
            out += ((a % p_ + b % p_) % p_) * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return out;
    }

    long mul(long a, long b) const {
        std::vector<long> pa = unpack(a), pb = unpack(b), prod(2 * k_ - 1, 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
        reduce(prod);
        return pack(prod);
    }

    /// g^e for the fixed generator; e taken mod q-1.
    long from_exp(long e) const {
        e %= q_ - 1;
        if (e < 0) e += q_ - 1;
        return exp_[e];
    }

    /// Discrete log of a nonzero element with respect to the fixed generator.
    long to_exp(long x) const {
        if (x == 0 || log_[x] < 0) throw std::invalid_argument("FqTable: log of zero");
        return log_[x];
    }

private:
    static long smallest_prime_factor(long q) {
        for (long d = 2; d * d <= q; ++d)
            if (q % d == 0) return d;
        return q;
    }

    /// Finds a monic irreducible degree-k polynomial over F_p by testing
    /// candidates for roots... no: by testing that x^(p^k) = x and
    /// x^(p^(k/l)) != x in the quotient ring for prime divisors l of k.
    /// For the tiny degrees needed here (k <= 3), brute force over candidates
    /// checking for absence of roots (k = 2, 3 suffices: no roots means
    /// irreducible for degree 2 and 3).
    std::vector<long> irreducible_poly(long p, int k) {
        std::vector<long> poly(k + 1, 0);
        poly[k] = 1;
        if (k == 1) return poly;  // x itself; unused beyond structure
        if (k > 3) throw std::invalid_argument("FqTable: degree > 3 not supported");
        long count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (long c = 0; c < count; ++c) {
            long t = c;
            for (int i = 0; i < k; ++i) {
                poly[i] = t % p;
                t /= p;
            }
            bool has_root = false;
            for (long x = 0; x < p && !has_root; ++x) {
                long v = 0, xp = 1;
                for (int i = 0; i <= k; ++i) {
                    v = (v + poly[i] * xp) % p;
                    xp = (xp * x) % p;
                }
                if (v == 0) has_root = true;
            }
            if (!has_root) return poly;
        }
        throw std::logic_error("FqTable: no irreducible polynomial found");
    }

    std::vector<long> unpack(long a) const {
        std::vector<long> out(k_, 0);
        for (int i = 0; i < k_; ++i) {
            out[i] = a % p_;
            a /= p_;
        }
        return out;
    }

    long pack(const std::vector<long>& v) const {
        long out = 0, place = 1;
        for (int i = 0; i < k_; ++i) {
            out += v[i] * place;
            place *= p_;
        }
        return out;
    }

    void reduce(std::vector<long>& poly) const {
        for (int d = static_cast<int>(poly.size()) - 1; d >= k_; --d) {
            long lead = poly[d] % p_;
            if (lead == 0) continue;
            for (int i = 0; i <= k_; ++i) {
                long idx = d - k_ + i;
                poly[idx] = ((poly[idx] - lead * modulus_[i]) % p_ + p_) % p_;
            }
        }
        poly.resize(k_);
    }

    void build_tables() {
        // Find a multiplicative generator by direct order computation.
        for (long g = 1; g < q_; ++g) {
            long x = g;
            long order = 1;
            while (x != 1) {
                x = mul(x, g);
                ++order;
                if (order > q_) throw std::logic_error("FqTable: broken multiplication");
            }
            if (order == q_ - 1) {
                gen_ = g;
                break;
            }
        }
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, -1);
        long x = 1;
        for (long e = 0; e < q_ - 1; ++e) {
            exp_[e] = x;
            log_[x] = e;
            x = mul(x, gen_);
        }
    }

    long q_, p_ = 0, gen_ = 0;
    int k_ = 0;
    std::vector<long> modulus_;
    std::vector<long> exp_;
    std::vector<long> log_;
};

}  // namespace bdtori
