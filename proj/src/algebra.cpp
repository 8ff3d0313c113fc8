#include "leibniz/algebra.hpp"

#include <sstream>

namespace leibniz {

namespace {

std::string render(const Vector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

std::string violation_message(const std::array<std::size_t, 3>& t, const Vector& lhs, const Vector& rhs) {
    std::ostringstream os;
    os << "right Leibniz identity fails on basis triple (" << t[0] + 1 << ", " << t[1] + 1 << ", " << t[2] + 1
       << "): [[e" << t[0] + 1 << ",e" << t[1] + 1 << "],e" << t[2] + 1 << "] = " << render(lhs) << " but [[e"
       << t[0] + 1 << ",e" << t[2] + 1 << "],e" << t[1] + 1 << "] + [e" << t[0] + 1 << ",[e" << t[1] + 1 << ",e"
       << t[2] + 1 << "]] = " << render(rhs);
    return os.str();
}

// Bracket through a raw table; used before an algebra object exists.
Vector table_bracket(const FieldSpec& f, std::size_t n, const std::vector<Vector>& table, const Vector& x,
                     const Vector& y) {
    auto out = zero_vector(f, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const auto& e = table[i * n + j];
            if (is_zero(e)) continue;
            const Scalar w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!e[k].is_zero()) out[k] += w * e[k];
        }
    }
    return out;
}

SeriesResult iterate_series(const LeibnizAlgebra& L, bool derived) {
    const auto whole = Subspace::full(L.field(), L.dim());
    SeriesResult result;
    result.terms.push_back(whole);
    // Dimensions strictly drop until stabilization, so dim+1 steps always suffice.
    for (std::size_t step = 0; step <= L.dim(); ++step) {
        const auto& last = result.terms.back();
        if (last.dim() == 0) break;
        auto next = bracket_subspaces(L, last, derived ? last : whole);
        const bool stable = next == last;
        result.terms.push_back(std::move(next));
        if (stable) break;
    }
    if (result.terms.back().dim() == 0) result.class_index = result.terms.size() - 1;
    return result;
}

}  // namespace

IdentityViolation::IdentityViolation(std::array<std::size_t, 3> triple, Vector lhs, Vector rhs)
    : InvariantError(violation_message(triple, lhs, rhs)), triple_(triple), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

std::optional<std::array<std::size_t, 3>> find_right_identity_violation(const FieldSpec& field, std::size_t dim,
                                                                        const std::vector<Vector>& table) {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                const auto ei = unit_vector(field, dim, i);
                const auto lhs = table_bracket(field, dim, table, table[i * dim + j], unit_vector(field, dim, k));
                const auto rhs = table_bracket(field, dim, table, table[i * dim + k], unit_vector(field, dim, j)) +
                                 table_bracket(field, dim, table, ei, table[j * dim + k]);
                if (lhs != rhs) return std::array<std::size_t, 3>{i, j, k};
            }
    return std::nullopt;
}

LeibnizAlgebra::LeibnizAlgebra(FieldSpec field, std::size_t dim, std::vector<Vector> table,
                               std::vector<std::string> names)
    : field_(field), dim_(dim), table_(std::move(table)), names_(std::move(names)) {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!is_zero(table_[i * dim_ + j])) nonzero_.emplace_back(i, j);

    bool left = true;
    for (std::size_t i = 0; i < dim_ && left; ++i)
        for (std::size_t j = 0; j < dim_ && left; ++j)
            for (std::size_t k = 0; k < dim_ && left; ++k) {
                const auto ei = basis_vector(i), ej = basis_vector(j);
                left = bracket(ei, basis_bracket(j, k)) ==
                       bracket(basis_bracket(i, j), basis_vector(k)) + bracket(ej, basis_bracket(i, k));
            }

    bool antisymmetric = true;
    for (std::size_t i = 0; i < dim_ && antisymmetric; ++i)
        for (std::size_t j = i; j < dim_ && antisymmetric; ++j)
            antisymmetric = is_zero(basis_bracket(i, j) + basis_bracket(j, i));

    profile_.is_right = true;
    profile_.is_left = left;
    profile_.is_symmetric = left;
    profile_.is_lie = antisymmetric;
}

LeibnizAlgebra LeibnizAlgebra::build(const FieldSpec& field, std::size_t dim, const std::vector<BracketEntry>& entries,
                                     std::vector<std::string> names) {
    if (dim == 0) throw DomainError("algebra dimension must be positive");
    std::vector<Vector> table(dim * dim, zero_vector(field, dim));
    std::vector<bool> seen(dim * dim, false);
    for (const auto& e : entries) {
        if (e.left >= dim || e.right >= dim)
            throw DomainError("bracket index out of range: (" + std::to_string(e.left + 1) + ", " +
                              std::to_string(e.right + 1) + ") in dimension " + std::to_string(dim));
        if (e.value.size() != dim)
            throw DomainError("bracket value has length " + std::to_string(e.value.size()) + ", expected " +
                              std::to_string(dim));
        for (const auto& s : e.value)
            if (!(s.field() == field)) throw FieldError("bracket coefficient over the wrong field");
        const auto slot = e.left * dim + e.right;
        if (seen[slot])
            throw DomainError("bracket (" + std::to_string(e.left + 1) + ", " + std::to_string(e.right + 1) +
                              ") listed twice");
        seen[slot] = true;
        table[slot] = e.value;
    }

    if (names.empty())
        for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    if (names.size() != dim) throw DomainError("expected " + std::to_string(dim) + " basis names");

    if (auto bad = find_right_identity_violation(field, dim, table)) {
        const auto [i, j, k] = *bad;
        const auto lhs = table_bracket(field, dim, table, table[i * dim + j], unit_vector(field, dim, k));
        const auto rhs = table_bracket(field, dim, table, table[i * dim + k], unit_vector(field, dim, j)) +
                         table_bracket(field, dim, table, unit_vector(field, dim, i), table[j * dim + k]);
        throw IdentityViolation(*bad, lhs, rhs);
    }
    return LeibnizAlgebra(field, dim, std::move(table), std::move(names));
}

std::vector<BracketEntry> LeibnizAlgebra::table() const {
    std::vector<BracketEntry> out;
    for (auto [i, j] : nonzero_) out.push_back({i, j, basis_bracket(i, j)});
    return out;
}

Vector LeibnizAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DomainError("bracket: vector length does not match dimension");
    for (const auto& s : x)
        if (!(s.field() == field_)) throw FieldError("bracket: vector over the wrong field");
    for (const auto& s : y)
        if (!(s.field() == field_)) throw FieldError("bracket: vector over the wrong field");
    auto out = zero_vector(field_, dim_);
    for (auto [i, j] : nonzero_) {
        if (x[i].is_zero() || y[j].is_zero()) continue;
        const Scalar w = x[i] * y[j];
        const auto& e = table_[i * dim_ + j];
        for (std::size_t k = 0; k < dim_; ++k)
            if (!e[k].is_zero()) out[k] += w * e[k];
    }
    return out;
}

Matrix LeibnizAlgebra::ad(const Vector& x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim_; ++j) cols.push_back(bracket(basis_vector(j), x));
    return Matrix::from_columns(field_, dim_, cols);
}

Matrix LeibnizAlgebra::Ad(const Vector& x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim_; ++j) cols.push_back(bracket(x, basis_vector(j)));
    return Matrix::from_columns(field_, dim_, cols);
}

Subspace bracket_subspaces(const LeibnizAlgebra& L, const Subspace& a, const Subspace& b) {
    std::vector<Vector> gens;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) gens.push_back(L.bracket(x, y));
    return Subspace::span(L.field(), L.dim(), gens);
}

Subspace leibniz_kernel(const LeibnizAlgebra& L) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        gens.push_back(L.basis_bracket(i, i));
        for (std::size_t j = i + 1; j < L.dim(); ++j) gens.push_back(L.basis_bracket(i, j) + L.basis_bracket(j, i));
    }
    return Subspace::span(L.field(), L.dim(), gens);
}

Subspace left_center(const LeibnizAlgebra& L) {
    const auto n = L.dim();
    // Row (j, m), column i: coefficient of x_i in the e_m coordinate of [x, e_j].
    Matrix system(L.field(), n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t i = 0; i < n; ++i) system(j * n + m, i) = L.structure_constant(i, j, m);
    return nullspace(system);
}

Subspace right_center(const LeibnizAlgebra& L) {
    const auto n = L.dim();
    // Row (i, m), column j: coefficient of x_j in the e_m coordinate of [e_i, x].
    Matrix system(L.field(), n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t j = 0; j < n; ++j) system(i * n + m, j) = L.structure_constant(i, j, m);
    return nullspace(system);
}

Subspace center(const LeibnizAlgebra& L) { return subspace_intersect(left_center(L), right_center(L)); }

SeriesResult lower_central_series(const LeibnizAlgebra& L) { return iterate_series(L, false); }

SeriesResult derived_series(const LeibnizAlgebra& L) { return iterate_series(L, true); }

}  // namespace leibniz
