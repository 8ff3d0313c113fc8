#include "leibniz/linalg.hpp"

#include <ostream>
#include <string>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

void require_same_length(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw DomainError("vector length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch");
    if (!(a.field() == b.field())) throw FieldError("matrices over different fields");
}

void require_compatible(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DomainError("ambient dimension mismatch: " + std::to_string(a.ambient_dim()) + " vs " +
                          std::to_string(b.ambient_dim()));
    if (!(a.field() == b.field())) throw FieldError("subspaces over different fields");
}

}  // namespace

Vector zero_vector(const FieldSpec& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
    auto v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    require_same_length(a, b);
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    require_same_length(a, b);
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
    Vector r = v;
    for (auto& x : r) x = s * x;
    return r;
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DomainError("ragged rows in matrix literal");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!(rows[r][c].field() == f)) throw FieldError("matrix entry over the wrong field");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_ints(const FieldSpec& f, const std::vector<std::vector<long>>& rows) {
    std::vector<Vector> converted;
    converted.reserve(rows.size());
    for (const auto& row : rows) {
        Vector v;
        v.reserve(row.size());
        for (long x : row) v.push_back(Scalar::from_int(f, x));
        converted.push_back(std::move(v));
    }
    return from_rows(f, converted);
}

Matrix Matrix::from_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DomainError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::reshape(const FieldSpec& f, std::size_t rows, std::size_t cols, const Vector& flat) {
    if (flat.size() != rows * cols) throw DomainError("reshape: wrong number of entries");
    Matrix m(f, rows, cols);
    m.entries_ = flat;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const { return leibniz::is_zero(entries_); }

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw DomainError("apply: vector length does not match column count");
    auto out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimensions differ");
    if (!(a.field_ == b.field_)) throw FieldError("matrices over different fields");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
        }
    return r;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.entries_) x = s * x;
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.entries_) x = -x;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
        os << "]\n";
    }
    return os;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < a.rows() && a(found, col).is_zero()) ++found;
        if (found == a.rows()) continue;
        if (found != pivot_row)
            for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(found, c), a(pivot_row, c));

        const Scalar inv = a(pivot_row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;

        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a(r, col).is_zero()) continue;
            const Scalar factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (!a(pivot_row, c).is_zero()) a(r, c) -= factor * a(pivot_row, c);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    const std::size_t rank = pivots.size();
    return {std::move(a), std::move(pivots), rank};
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient_dim) {
    return Subspace(Matrix(f, 0, ambient_dim), {});
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient_dim) {
    std::vector<std::size_t> pivots(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
    return Subspace(Matrix::identity(f, ambient_dim), std::move(pivots));
}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient_dim, const std::vector<Vector>& generators) {
    Matrix g(f, generators.size(), ambient_dim);
    for (std::size_t r = 0; r < generators.size(); ++r) {
        if (generators[r].size() != ambient_dim) throw DomainError("generator length does not match ambient dimension");
        for (std::size_t c = 0; c < ambient_dim; ++c) {
            if (!(generators[r][c].field() == f)) throw FieldError("generator over the wrong field");
            g(r, c) = generators[r][c];
        }
    }
    auto reduced = rref(g);
    Matrix basis(f, reduced.rank, ambient_dim);
    for (std::size_t r = 0; r < reduced.rank; ++r)
        for (std::size_t c = 0; c < ambient_dim; ++c) basis(r, c) = reduced.reduced(r, c);
    return Subspace(std::move(basis), std::move(reduced.pivot_columns));
}

std::vector<Vector> Subspace::basis() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
    return out;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_dim()) throw DomainError("membership test: vector length does not match ambient dimension");
    Vector residual = v;
    for (std::size_t r = 0; r < dim(); ++r) {
        const Scalar factor = residual[pivots_[r]];
        if (factor.is_zero()) continue;
        for (std::size_t c = 0; c < ambient_dim(); ++c)
            if (!basis_(r, c).is_zero()) residual[c] -= factor * basis_(r, c);
    }
    return leibniz::is_zero(residual);
}

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) throw DomainError("coordinates requested for a vector outside the subspace");
    Vector coords;
    coords.reserve(dim());
    for (auto p : pivots_) coords.push_back(v[p]);
    return coords;
}

bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

Subspace nullspace(const Matrix& m) {
    const auto reduced = rref(m);
    const auto& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : reduced.pivot_columns) is_pivot[p] = true;

    std::vector<Vector> generators;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        auto v = unit_vector(f, m.cols(), free);
        for (std::size_t r = 0; r < reduced.rank; ++r) v[reduced.pivot_columns[r]] = -reduced.reduced(r, free);
        generators.push_back(std::move(v));
    }
    return Subspace::span(f, m.cols(), generators);
}

Subspace column_space(const Matrix& m) {
    std::vector<Vector> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return Subspace::span(m.field(), m.rows(), cols);
}

bool subspace_contains(const Subspace& s, const Vector& v) { return s.contains(v); }

bool subspace_equal(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    return a == b;
}

bool subspace_includes(const Subspace& outer, const Subspace& inner) {
    require_compatible(outer, inner);
    for (const auto& v : inner.basis())
        if (!outer.contains(v)) return false;
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    auto gens = a.basis();
    for (auto& v : b.basis()) gens.push_back(std::move(v));
    return Subspace::span(a.field(), a.ambient_dim(), gens);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    const auto& f = a.field();
    const std::size_t m = a.ambient_dim();
    // Columns are the basis vectors of a followed by the negated basis vectors of b;
    // a kernel vector (lambda, mu) gives lambda . basis(a) = mu . basis(b).
    Matrix stacked(f, m, a.dim() + b.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < m; ++c) stacked(c, r) = a.basis_matrix()(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < m; ++c) stacked(c, a.dim() + r) = -b.basis_matrix()(r, c);

    std::vector<Vector> gens;
    for (const auto& kernel_vec : nullspace(stacked).basis()) {
        auto v = zero_vector(f, m);
        for (std::size_t r = 0; r < a.dim(); ++r)
            if (!kernel_vec[r].is_zero()) v = v + kernel_vec[r] * a.basis_matrix().row(r);
        gens.push_back(std::move(v));
    }
    return Subspace::span(f, m, gens);
}

}  // namespace leibniz
