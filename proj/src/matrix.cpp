#include "ohk/matrix.hpp"

#include <algorithm>
#include <string>

namespace ohk {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    // Guards runaway allocations from nested tensor products.
    if (rows > kTensorCap * kTensorCap || cols > kTensorCap * kTensorCap ||
        (rows != 0 && cols != 0 && rows * cols > std::size_t(1) << 26))
        throw CapError("matrix of shape " + std::to_string(rows) + "x" +
                       std::to_string(cols) + " exceeds the desk-scale cap");
}

} // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    data_.assign(rows * cols, Rat(0));
}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::swap(Field f, std::size_t m, std::size_t n) {
    Matrix r(f, m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r.data_[(j * m + i) * (m * n) + (i * n + j)] = 1;
    return r;
}

Matrix Matrix::permutation(Field f, const std::vector<std::size_t>& perm) {
    Matrix r(f, perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j)
        r.data_[perm[j] * perm.size() + j] = 1;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           data_ == o.data_;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rat& x) { return x == 0; });
}

Matrix Matrix::operator*(const Matrix& o) const {
    field_.require_same(o.field_);
    if (cols_ != o.rows_)
        throw ShapeError("matrix product shape mismatch: " +
                         std::to_string(cols_) + " vs " + std::to_string(o.rows_));
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = data_[i * cols_ + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& b = o.data_[k * o.cols_ + j];
                if (b == 0) continue;
                r.data_[i * o.cols_ + j] = field_.add(r.data_[i * o.cols_ + j],
                                                      field_.mul(a, b));
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    field_.require_same(o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    field_.require_same(o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::scaled(const Rat& c) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = field_.mul(data_[i], c);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.data_[j * rows_ + i] = data_[i * cols_ + j];
    return r;
}

std::vector<Rat> Matrix::column(std::size_t c) const {
    std::vector<Rat> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = data_[i * cols_ + c];
    return v;
}

std::vector<Rat> Matrix::row_vec(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

std::vector<Rat> Matrix::mul_vec(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (data_[i * cols_ + j] == 0 || v[j] == 0) continue;
            r[i] = field_.add(r[i], field_.mul(data_[i * cols_ + j], v[j]));
        }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    field_.require_same(o.field_);
    if (cols_ != o.cols_) throw ShapeError("vstack column mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    std::copy(data_.begin(), data_.end(), r.data_.begin());
    std::copy(o.data_.begin(), o.data_.end(), r.data_.begin() + data_.size());
    return r;
}

Matrix Matrix::from_columns(Field f, std::size_t rows,
                            const std::vector<std::vector<Rat>>& cols) {
    Matrix r(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw ShapeError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) r.set(i, j, cols[j][i]);
    }
    return r;
}

Matrix Matrix::from_rows(Field f, std::size_t cols,
                         const std::vector<std::vector<Rat>>& rows) {
    Matrix r(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) r.set(i, j, rows[i][j]);
    }
    return r;
}

Matrix rref(const Matrix& m) {
    Matrix r = m;
    const Field& f = r.field();
    std::size_t lead = 0;
    for (std::size_t row = 0; row < r.rows() && lead < r.cols(); ++row) {
        std::size_t pivot_row = row;
        while (pivot_row < r.rows() && r.at(pivot_row, lead) == 0) ++pivot_row;
        if (pivot_row == r.rows()) {
            ++lead;
            --row;
            continue;
        }
        if (pivot_row != row)
            for (std::size_t j = 0; j < r.cols(); ++j) {
                Rat tmp = r.at(row, j);
                r.set(row, j, r.at(pivot_row, j));
                r.set(pivot_row, j, tmp);
            }
        Rat piv_inv = f.inv(r.at(row, lead));
        for (std::size_t j = lead; j < r.cols(); ++j)
            r.set(row, j, f.mul(r.at(row, j), piv_inv));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, lead) == 0) continue;
            Rat factor = r.at(i, lead);
            for (std::size_t j = lead; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(row, j))));
        }
        ++lead;
    }
    return r;
}

std::size_t Matrix::rank() const {
    Matrix r = rref(*this);
    std::size_t rk = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (r.at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) ++rk;
    }
    return rk;
}

bool Matrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw ShapeError("inverse of non-square matrix");
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_ + i, Rat(1));
    }
    Matrix red = rref(aug);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (red.at(i, j) != Rat(i == j ? 1 : 0))
                throw ShapeError("matrix is singular");
    Matrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.set(i, j, red.at(i, cols_ + j));
    return inv;
}

std::optional<std::vector<Rat>> Matrix::solve(const std::vector<Rat>& b) const {
    if (b.size() != rows_) throw ShapeError("solve rhs length mismatch");
    Matrix aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_, b[i]);
    }
    Matrix red = rref(aug);
    std::vector<Rat> x(cols_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t lead = 0;
        while (lead < cols_ + 1 && red.at(i, lead) == 0) ++lead;
        if (lead == cols_ + 1) continue;         // zero row
        if (lead == cols_) return std::nullopt;  // 0 = 1
        x[lead] = red.at(i, cols_);
    }
    return x;
}

std::optional<Matrix> Matrix::solve_matrix(const Matrix& rhs) const {
    if (rhs.rows() != rows_) throw ShapeError("solve_matrix rhs shape mismatch");
    std::vector<std::vector<Rat>> cols;
    cols.reserve(rhs.cols());
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        auto x = solve(rhs.column(c));
        if (!x) return std::nullopt;
        cols.push_back(std::move(*x));
    }
    return Matrix::from_columns(field_, cols_, cols);
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    a.field().require_same(b.field());
    std::size_t rows = a.rows() * b.rows(), cols = a.cols() * b.cols();
    if (rows > kTensorCap * kCarrierCap || cols > kTensorCap * kCarrierCap)
        throw CapError("tensor power exceeds the total-dimension cap");
    Matrix r(a.field(), rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rat& av = a.at(i, j);
            if (av == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Rat& bv = b.at(k, l);
                    if (bv == 0) continue;
                    r.set(i * b.rows() + k, j * b.cols() + l, a.field().mul(av, bv));
                }
        }
    return r;
}

Matrix tensor_many(const std::vector<Matrix>& ms) {
    if (ms.empty()) throw ShapeError("tensor_many of empty list");
    Matrix r = ms[0];
    for (std::size_t i = 1; i < ms.size(); ++i) r = tensor(r, ms[i]);
    return r;
}

Matrix tensor_power(const Matrix& a, std::size_t n) {
    Matrix r = Matrix::identity(a.field(), 1);
    for (std::size_t i = 0; i < n; ++i) r = tensor(r, a);
    return r;
}

Subspace::Subspace(Field f, std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(f, 0, ambient_dim) {}

Subspace Subspace::from_rows(const Matrix& rows) {
    Matrix red = rref(rows);
    Subspace s(rows.field(), rows.cols());
    std::vector<std::vector<Rat>> keep;
    for (std::size_t i = 0; i < red.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < red.cols() && red.at(i, lead) == 0) ++lead;
        if (lead == red.cols()) continue;
        keep.push_back(red.row_vec(i));
        s.pivots_.push_back(lead);
    }
    s.basis_ = Matrix::from_rows(rows.field(), rows.cols(), keep);
    return s;
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    if (v.size() != ambient_) throw ShapeError("vector/ambient mismatch");
    // Reduce v against the RREF basis.
    std::vector<Rat> w = v;
    const Field& f = basis_.field();
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t p = pivots_[i];
        if (w[p] == 0) continue;
        Rat c = w[p];
        for (std::size_t j = 0; j < ambient_; ++j)
            w[j] = f.sub(w[j], f.mul(c, basis_.at(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw ShapeError("ambient mismatch");
    for (std::size_t i = 0; i < o.basis_.rows(); ++i)
        if (!contains(o.basis_.row_vec(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw ShapeError("ambient mismatch");
    return from_rows(basis_.vstack(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw ShapeError("ambient mismatch");
    // Zassenhaus: row-reduce [U U; V 0]; rows with zero left block give
    // the intersection in the right block.
    const Field& f = basis_.field();
    std::size_t r1 = basis_.rows(), r2 = o.basis_.rows();
    Matrix big(f, r1 + r2, 2 * ambient_);
    for (std::size_t i = 0; i < r1; ++i)
        for (std::size_t j = 0; j < ambient_; ++j) {
            big.set(i, j, basis_.at(i, j));
            big.set(i, ambient_ + j, basis_.at(i, j));
        }
    for (std::size_t i = 0; i < r2; ++i)
        for (std::size_t j = 0; j < ambient_; ++j)
            big.set(r1 + i, j, o.basis_.at(i, j));
    Matrix red = rref(big);
    std::vector<std::vector<Rat>> inter_rows;
    for (std::size_t i = 0; i < red.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < ambient_ && left_zero; ++j)
            if (red.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<Rat> row(ambient_);
        bool nonzero = false;
        for (std::size_t j = 0; j < ambient_; ++j) {
            row[j] = red.at(i, ambient_ + j);
            if (row[j] != 0) nonzero = true;
        }
        if (nonzero) inter_rows.push_back(std::move(row));
    }
    return from_rows(Matrix::from_rows(f, ambient_, inter_rows));
}

Matrix Subspace::quotient_map() const {
    const Field& f = basis_.field();
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> nonpivot;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!is_pivot[j]) nonpivot.push_back(j);
    Matrix q(f, nonpivot.size(), ambient_);
    for (std::size_t c = 0; c < nonpivot.size(); ++c) q.set(c, nonpivot[c], Rat(1));
    // Pivot coordinates map to minus the non-pivot tail of their basis row.
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t c = 0; c < nonpivot.size(); ++c)
            q.set(c, pivots_[i], f.neg(basis_.at(i, nonpivot[c])));
    return q;
}

Matrix Subspace::section() const {
    const Field& f = basis_.field();
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> nonpivot;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!is_pivot[j]) nonpivot.push_back(j);
    Matrix s(f, ambient_, nonpivot.size());
    for (std::size_t c = 0; c < nonpivot.size(); ++c) s.set(nonpivot[c], c, Rat(1));
    return s;
}

Subspace kernel_basis(const Matrix& m) {
    Matrix red = rref(m);
    std::size_t n = m.cols();
    std::vector<std::size_t> pivot_of_col(n, SIZE_MAX);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t j = 0; j < n && row < red.rows(); ++j) {
        if (red.at(row, j) != 0) {
            pivot_of_col[j] = row;
            pivots.push_back(j);
            ++row;
        }
    }
    const Field& f = m.field();
    std::vector<std::vector<Rat>> basis_rows;
    for (std::size_t j = 0; j < n; ++j) {
        if (pivot_of_col[j] != SIZE_MAX) continue;
        std::vector<Rat> v(n, Rat(0));
        v[j] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = f.neg(red.at(k, j));
        basis_rows.push_back(std::move(v));
    }
    return Subspace::from_rows(Matrix::from_rows(f, n, basis_rows));
}

Subspace image(const Matrix& m) { return Subspace::from_columns(m); }

} // namespace ohk
