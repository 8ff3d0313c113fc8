#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t n);
Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

/// Dense row-major matrix over one exact field.
class Matrix {
public:
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& f, std::size_t n);
    /// Throws DomainError on ragged input.
    static Matrix from_rows(const FieldSpec& f, const std::vector<Vector>& rows);
    /// Integer convenience constructor, mostly for tests and the catalog.
    static Matrix from_ints(const FieldSpec& f, const std::vector<std::vector<long>>& rows);
    static Matrix from_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vector>& cols);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    /// Row-major flattening.
    const Vector& entries() const noexcept { return entries_; }
    /// Inverse of entries(): reshape a length rows*cols vector.
    static Matrix reshape(const FieldSpec& f, std::size_t rows, std::size_t cols, const Vector& flat);

    Matrix transpose() const;
    bool is_zero() const;
    Vector apply(const Vector& v) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    Vector entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank;
};

/// Gauss-Jordan elimination, taking the first nonzero entry in each column as pivot.
RrefResult rref(const Matrix& m);

/// A linear subspace of F^m stored by its reduced row-echelon basis.
///
/// The basis is unique for a given subspace, so equality is entry-wise
/// comparison of bases.
class Subspace {
public:
    static Subspace zero(const FieldSpec& f, std::size_t ambient_dim);
    static Subspace full(const FieldSpec& f, std::size_t ambient_dim);
    /// Span of arbitrary generators, each of length ambient_dim.
    static Subspace span(const FieldSpec& f, std::size_t ambient_dim, const std::vector<Vector>& generators);

    const FieldSpec& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    /// dim() x ambient_dim() matrix in reduced row-echelon form.
    const Matrix& basis_matrix() const noexcept { return basis_; }
    std::vector<Vector> basis() const;
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vector& v) const;
    /// Coordinates of v with respect to basis(). Throws DomainError if v is outside.
    Vector coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace nullspace(const Matrix& m);
/// Span of the columns of m.
Subspace column_space(const Matrix& m);

bool subspace_contains(const Subspace& s, const Vector& v);
bool subspace_equal(const Subspace& a, const Subspace& b);
bool subspace_includes(const Subspace& outer, const Subspace& inner);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

}  // namespace leibniz
