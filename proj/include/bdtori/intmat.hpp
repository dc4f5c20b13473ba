#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bdtori {

/// Dense matrix over the integers (arbitrary precision).
/// Row-major storage; matrices act on column vectors.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);
    static IntMatrix diagonal(const std::vector<mpz_class>& d);
    /// Builds from nested initializer-style data, e.g. {{2,4},{6,8}}.
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    std::vector<mpz_class> apply(const std::vector<mpz_class>& x) const;

    /// Fraction-free determinant (Bareiss). Square matrices only.
    mpz_class det() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_unimodular() const;
    /// Smallest k >= 1 with M^k = I, or 0 if none up to `limit`.
    std::size_t multiplicative_order(std::size_t limit = 1024) const;
    IntMatrix pow(std::size_t k) const;

    /// Inverse of a unimodular matrix (integral).
    IntMatrix unimodular_inverse() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

/// M = U * D * V with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
/// U_inv and V_inv are the tracked inverses (exact).
struct SmithResult {
    IntMatrix U, D, V;
    IntMatrix U_inv, V_inv;
    std::size_t rank = 0;  // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& M);

/// Row-style Hermite normal form: returns the canonical basis (as rows) of the
/// row space of M. Pivots positive, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
IntMatrix hnf_rows(const IntMatrix& M);

/// Solves A x = b over the integers; nullopt if no integral solution.
std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& A,
                                                    const std::vector<mpz_class>& b);

/// Basis (as rows, HNF-canonical) of {x : A x = 0}.
IntMatrix kernel_basis_rows(const IntMatrix& A);

}  // namespace bdtori
