#ifndef OHK_MATRIX_HPP
#define OHK_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ohk/field.hpp"

namespace ohk {

/// Hard ceiling on any dimension produced by tensor powers.
inline constexpr std::size_t kTensorCap = 4096;
/// Hard ceiling on carrier dimensions.
inline constexpr std::size_t kCarrierCap = 64;

/// Dense matrix over a fixed ground field. Rows and columns are
/// zero-indexed; all entries are kept in canonical form for the field.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);
    static Matrix zero(Field f, std::size_t rows, std::size_t cols) {
        return Matrix(f, rows, cols);
    }
    /// The braiding on K^m (x) K^n: e_i (x) e_j -> e_j (x) e_i.
    static Matrix swap(Field f, std::size_t m, std::size_t n);
    /// Row-permutation matrix: e_j -> e_{perm[j]}.
    static Matrix permutation(Field f, const std::vector<std::size_t>& perm);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Rat& v) {
        data_[r * cols_ + c] = field_.canon(v);
    }

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rat& c) const;
    Matrix transpose() const;

    std::vector<Rat> column(std::size_t c) const;
    std::vector<Rat> row_vec(std::size_t r) const;
    Matrix apply(const std::vector<Rat>& v) const = delete;
    std::vector<Rat> mul_vec(const std::vector<Rat>& v) const;

    /// Stacks o below this matrix (same column count).
    Matrix vstack(const Matrix& o) const;
    /// Builds a matrix whose columns are the given vectors.
    static Matrix from_columns(Field f, std::size_t rows,
                               const std::vector<std::vector<Rat>>& cols);
    static Matrix from_rows(Field f, std::size_t cols,
                            const std::vector<std::vector<Rat>>& rows);

    std::size_t rank() const;
    /// Inverse of a square matrix; throws ShapeError if singular.
    Matrix inverse() const;
    bool is_invertible() const;

    /// Solves this * x = b; returns std::nullopt if inconsistent.
    /// When the system is underdetermined an arbitrary solution is
    /// returned (free variables set to zero).
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
    /// Columnwise solve: finds x with this * x = rhs, if it exists.
    std::optional<Matrix> solve_matrix(const Matrix& rhs) const;

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

/// Reduced row echelon form; the row space is preserved.
Matrix rref(const Matrix& m);

/// Kronecker product with the row-major pairing (i,j) -> i*cols_b + j.
Matrix tensor(const Matrix& a, const Matrix& b);
Matrix tensor_many(const std::vector<Matrix>& ms);
/// n-fold Kronecker power.
Matrix tensor_power(const Matrix& a, std::size_t n);

/// A subspace of K^ambient, canonically represented by the RREF basis
/// matrix of its row span. Equality is entry-wise on the basis.
class Subspace {
  public:
    Subspace(Field f, std::size_t ambient_dim);
    /// Row span of the given matrix.
    static Subspace from_rows(const Matrix& rows);
    /// Column span of the given matrix.
    static Subspace from_columns(const Matrix& cols) {
        return from_rows(cols.transpose());
    }
    static Subspace full(Field f, std::size_t ambient_dim) {
        return from_rows(Matrix::identity(f, ambient_dim));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const Field& field() const { return basis_.field(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& o) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    /// Surjective map q: K^ambient -> K^(ambient-dim) with kernel exactly
    /// this subspace; the complement is spanned by the non-pivot
    /// coordinates, so the choice is deterministic.
    Matrix quotient_map() const;
    /// Section of quotient_map(): the inclusion of the non-pivot
    /// coordinates; quotient_map() * section() = identity.
    Matrix section() const;
    /// Inclusion K^dim -> K^ambient with columns the basis vectors.
    Matrix inclusion() const { return basis_.transpose(); }

  private:
    std::size_t ambient_;
    Matrix basis_; // RREF, full row rank
    std::vector<std::size_t> pivots_;
};

/// Null space of m acting on column vectors of length cols(m).
Subspace kernel_basis(const Matrix& m);
/// Column span of m.
Subspace image(const Matrix& m);

} // namespace ohk

#endif
