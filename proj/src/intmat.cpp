#include "bdtori/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace bdtori {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("IntMatrix: entry count mismatch");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

IntMatrix IntMatrix::diagonal(const std::vector<mpz_class>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix m(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) m.at(i, j) += a * rhs.at(k, j);
        }
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + rhs.data_[i];
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - rhs.data_[i];
    return m;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
    std::vector<mpz_class> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

mpz_class IntMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("IntMatrix::det: not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = q;
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
    if (!is_square()) return false;
    mpz_class d = det();
    return d == 1 || d == -1;
}

IntMatrix IntMatrix::pow(std::size_t k) const {
    if (!is_square()) throw std::invalid_argument("IntMatrix::pow: not square");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::size_t IntMatrix::multiplicative_order(std::size_t limit) const {
    IntMatrix id = identity(rows_);
    IntMatrix p = *this;
    for (std::size_t k = 1; k <= limit; ++k) {
        if (p == id) return k;
        p = p * (*this);
    }
    return 0;
}

IntMatrix IntMatrix::unimodular_inverse() const {
    if (!is_unimodular()) throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
    SmithResult s = smith_normal_form(*this);
    // M = U D V with D = I, so M^{-1} = V^{-1} U^{-1}.
    for (std::size_t i = 0; i < rows_; ++i)
        if (s.D.at(i, i) != 1) throw std::logic_error("unimodular_inverse: SNF not identity");
    return s.V_inv * s.U_inv;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            os << at(i, j);
            if (j + 1 < cols_) os << ",";
        }
        os << "]";
        if (i + 1 < rows_) os << ",";
    }
    os << "]";
    return os.str();
}

namespace {

// Elementary operation helpers that keep the invariant M = U * A * V, with
// U_inv = U^{-1} and V_inv = V^{-1} tracked alongside.
struct SnfWork {
    IntMatrix A, U, V, U_inv, V_inv;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A.at(i, c), A.at(j, c));
        for (std::size_t r = 0; r < U.rows(); ++r) std::swap(U.at(r, i), U.at(r, j));
        for (std::size_t c = 0; c < U_inv.cols(); ++c) std::swap(U_inv.at(i, c), U_inv.at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A.at(r, i), A.at(r, j));
        for (std::size_t c = 0; c < V.cols(); ++c) std::swap(V.at(i, c), V.at(j, c));
        for (std::size_t r = 0; r < V_inv.rows(); ++r) std::swap(V_inv.at(r, i), V_inv.at(r, j));
    }
    // row i += k * row j
    void add_row(std::size_t i, std::size_t j, const mpz_class& k) {
        if (k == 0) return;
        for (std::size_t c = 0; c < A.cols(); ++c) A.at(i, c) += k * A.at(j, c);
        for (std::size_t r = 0; r < U.rows(); ++r) U.at(r, j) -= k * U.at(r, i);
        for (std::size_t c = 0; c < U_inv.cols(); ++c) U_inv.at(i, c) += k * U_inv.at(j, c);
    }
    // col i += k * col j
    void add_col(std::size_t i, std::size_t j, const mpz_class& k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < A.rows(); ++r) A.at(r, i) += k * A.at(r, j);
        for (std::size_t c = 0; c < V.cols(); ++c) V.at(j, c) -= k * V.at(i, c);
        for (std::size_t r = 0; r < V_inv.rows(); ++r) V_inv.at(r, i) += k * V_inv.at(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < A.cols(); ++c) A.at(i, c) = -A.at(i, c);
        for (std::size_t r = 0; r < U.rows(); ++r) U.at(r, i) = -U.at(r, i);
        for (std::size_t c = 0; c < U_inv.cols(); ++c) U_inv.at(i, c) = -U_inv.at(i, c);
    }
};

// Pivot choice: smallest nonzero |entry| in the trailing submatrix, row-major
// tie-break. Makes the output deterministic.
bool find_pivot(const IntMatrix& A, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < A.rows(); ++i)
        for (std::size_t j = t; j < A.cols(); ++j) {
            if (A.at(i, j) == 0) continue;
            mpz_class v = abs(A.at(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& M) {
    std::size_t m = M.rows(), n = M.cols();
    SnfWork w{M, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m),
              IntMatrix::identity(n)};
    std::size_t lim = std::min(m, n);

    for (std::size_t t = 0; t < lim; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(w.A, t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        for (;;) {
            // Clear column t below the pivot.
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.A.at(i, t) == 0) continue;
                mpz_class q = w.A.at(i, t) / w.A.at(t, t);  // truncated division is fine
                w.add_row(i, t, -q);
                if (w.A.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.A.at(t, j) == 0) continue;
                mpz_class q = w.A.at(t, j) / w.A.at(t, t);
                w.add_col(j, t, -q);
                if (w.A.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // Remainders shrank; promote the new smallest entry and retry.
                std::size_t qi, qj;
                find_pivot(w.A, t, qi, qj);
                w.swap_rows(t, qi);
                w.swap_cols(t, qj);
                continue;
            }
            // Pivot divides the whole trailing submatrix?
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (w.A.at(i, j) % w.A.at(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
    }

    SmithResult r;
    r.rank = 0;
    for (std::size_t t = 0; t < lim; ++t) {
        if (w.A.at(t, t) < 0) w.negate_row(t);
        if (w.A.at(t, t) != 0) ++r.rank;
    }
    r.U = std::move(w.U);
    r.D = std::move(w.A);
    r.V = std::move(w.V);
    r.U_inv = std::move(w.U_inv);
    r.V_inv = std::move(w.V_inv);
    return r;
}

IntMatrix hnf_rows(const IntMatrix& M) {
    std::size_t m = M.rows(), n = M.cols();
    IntMatrix a = M;
    std::size_t row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        // gcd the column below `row` into a single entry
        std::size_t nz = row;
        while (nz < m && a.at(nz, col) == 0) ++nz;
        if (nz == m) continue;
        for (std::size_t c = 0; c < n; ++c) std::swap(a.at(row, c), a.at(nz, c));
        for (;;) {
            std::size_t best = row;
            for (std::size_t i = row + 1; i < m; ++i)
                if (a.at(i, col) != 0 &&
                    (a.at(best, col) == 0 || abs(a.at(i, col)) < abs(a.at(best, col))))
                    best = i;
            if (best != row)
                for (std::size_t c = 0; c < n; ++c) std::swap(a.at(row, c), a.at(best, c));
            bool clean = true;
            for (std::size_t i = row + 1; i < m; ++i) {
                if (a.at(i, col) == 0) continue;
                mpz_class q = a.at(i, col) / a.at(row, col);
                for (std::size_t c = 0; c < n; ++c) a.at(i, c) -= q * a.at(row, c);
                if (a.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a.at(row, col) < 0)
            for (std::size_t c = 0; c < n; ++c) a.at(row, c) = -a.at(row, c);
        pivot_cols.push_back(col);
        ++row;
    }
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
        std::size_t col = pivot_cols[k];
        for (std::size_t i = 0; i < k; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(k, col).get_mpz_t());
            if (q != 0)
                for (std::size_t c = 0; c < n; ++c) a.at(i, c) -= q * a.at(k, c);
        }
    }
    IntMatrix out(row, n);
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = a.at(i, j);
    return out;
}

std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& A,
                                                    const std::vector<mpz_class>& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("solve_integer: size mismatch");
    SmithResult s = smith_normal_form(A);
    std::vector<mpz_class> c = s.U_inv.apply(b);
    std::size_t n = A.cols();
    std::vector<mpz_class> w(n);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const mpz_class& d = i < std::min(A.rows(), n) ? s.D.at(i, i) : mpz_class(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            if (i < n) w[i] = c[i] / d;
        }
    }
    return s.V_inv.apply(w);
}

IntMatrix kernel_basis_rows(const IntMatrix& A) {
    SmithResult s = smith_normal_form(A);
    std::size_t n = A.cols();
    std::size_t k = n - s.rank;
    IntMatrix basis(k, n);
    // Kernel is spanned by V^{-1} e_i for diagonal positions with d_i = 0.
    for (std::size_t idx = 0; idx < k; ++idx) {
        std::size_t i = s.rank + idx;
        for (std::size_t rr = 0; rr < n; ++rr) basis.at(idx, rr) = s.V_inv.at(rr, i);
    }
    return hnf_rows(basis);
}

}  // namespace bdtori
