#include "leibniz/bider.hpp"

#include <functional>

namespace leibniz {

namespace {

Matrix unit_matrix(const FieldSpec& f, std::size_t n, std::size_t flat_index) {
    Matrix e(f, n, n);
    e(flat_index / n, flat_index % n) = Scalar::one(f);
    return e;
}

// The system whose column u is residual(E_u) for the unit matrices E_u.
// `residual` must be linear in its argument.
Matrix linearize(const FieldSpec& f, std::size_t n, const std::function<Vector(const Matrix&)>& residual) {
    std::vector<Vector> cols;
    cols.reserve(n * n);
    for (std::size_t u = 0; u < n * n; ++u) cols.push_back(residual(unit_matrix(f, n, u)));
    return Matrix::from_columns(f, cols.front().size(), cols);
}

void append_entries(Vector& out, const Matrix& m) {
    out.insert(out.end(), m.entries().begin(), m.entries().end());
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

bool BiderSpace::contains(const BiderPair& p) const { return space.contains(flatten(p)); }

Vector flatten(const BiderPair& p) {
    Vector v = p.d.entries();
    append_entries(v, p.D);
    return v;
}

BiderPair unflatten_pair(const FieldSpec& f, std::size_t n, const Vector& flat) {
    if (flat.size() != 2 * n * n) throw DomainError("pair vector must have length 2n^2");
    const auto mid = flat.begin() + static_cast<std::ptrdiff_t>(n * n);
    return {Matrix::reshape(f, n, n, Vector(flat.begin(), mid)), Matrix::reshape(f, n, n, Vector(mid, flat.end()))};
}

MapSpace make_map_space(std::size_t n, Subspace space) {
    MapSpace out{n, std::move(space), {}};
    for (const auto& v : out.space.basis()) out.generators.push_back(Matrix::reshape(out.space.field(), n, n, v));
    return out;
}

BiderSpace make_bider_space(std::size_t n, Subspace space) {
    BiderSpace out{n, std::move(space), {}};
    for (const auto& v : out.space.basis()) out.generators.push_back(unflatten_pair(out.space.field(), n, v));
    return out;
}

bool is_derivation(const LeibnizAlgebra& L, const Matrix& d) {
    const auto n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto ei = L.basis_vector(i), ej = L.basis_vector(j);
            if (d.apply(L.basis_bracket(i, j)) != L.bracket(d.apply(ei), ej) + L.bracket(ei, d.apply(ej)))
                return false;
        }
    return true;
}

bool is_anti_derivation(const LeibnizAlgebra& L, const Matrix& D) {
    const auto n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto ei = L.basis_vector(i), ej = L.basis_vector(j);
            if (D.apply(L.basis_bracket(i, j)) != L.bracket(D.apply(ei), ej) - L.bracket(D.apply(ej), ei))
                return false;
        }
    return true;
}

bool is_compatible(const LeibnizAlgebra& L, const Matrix& d, const Matrix& D) {
    const auto n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto ei = L.basis_vector(i), ej = L.basis_vector(j);
            if (L.bracket(ei, d.apply(ej)) != L.bracket(ei, D.apply(ej))) return false;
        }
    return true;
}

bool is_biderivation(const LeibnizAlgebra& L, const BiderPair& p) {
    return p.d.rows() == L.dim() && p.d.cols() == L.dim() && p.D.rows() == L.dim() && p.D.cols() == L.dim() &&
           is_derivation(L, p.d) && is_anti_derivation(L, p.D) && is_compatible(L, p.d, p.D);
}

Matrix derivation_system(const LeibnizAlgebra& L) {
    const auto n = L.dim();
    Matrix sys(L.field(), n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                const auto row = (i * n + j) * n + m;
                for (std::size_t k = 0; k < n; ++k) {
                    // e_m coordinate of d([e_i,e_j]) - [d(e_i),e_j] - [e_i,d(e_j)].
                    sys(row, m * n + k) += L.structure_constant(i, j, k);
                    sys(row, k * n + i) -= L.structure_constant(k, j, m);
                    sys(row, k * n + j) -= L.structure_constant(i, k, m);
                }
            }
    return sys;
}

Matrix anti_derivation_system(const LeibnizAlgebra& L) {
    const auto n = L.dim();
    Matrix sys(L.field(), n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                const auto row = (i * n + j) * n + m;
                for (std::size_t k = 0; k < n; ++k) {
                    // e_m coordinate of D([e_i,e_j]) - [D(e_i),e_j] + [D(e_j),e_i].
                    sys(row, m * n + k) += L.structure_constant(i, j, k);
                    sys(row, k * n + i) -= L.structure_constant(k, j, m);
                    sys(row, k * n + j) += L.structure_constant(k, i, m);
                }
            }
    return sys;
}

Matrix derivation_system_adjoint(const LeibnizAlgebra& L) {
    const auto n = L.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad(L.basis_vector(i)));
    return linearize(L.field(), n, [&](const Matrix& d) {
        Vector out;
        for (std::size_t i = 0; i < n; ++i) append_entries(out, commutator(d, ads[i]) - L.ad(d.column(i)));
        return out;
    });
}

Matrix anti_derivation_system_adjoint(const LeibnizAlgebra& L) {
    const auto n = L.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad(L.basis_vector(i)));
    return linearize(L.field(), n, [&](const Matrix& D) {
        Vector out;
        for (std::size_t i = 0; i < n; ++i) append_entries(out, commutator(D, ads[i]) + L.Ad(D.column(i)));
        return out;
    });
}

Matrix biderivation_system(const LeibnizAlgebra& L) {
    const auto n = L.dim();
    const auto n2 = n * n;
    const auto der = derivation_system(L);
    const auto anti = anti_derivation_system(L);
    Matrix sys(L.field(), der.rows() + anti.rows() + n * n * n, 2 * n2);
    for (std::size_t r = 0; r < der.rows(); ++r)
        for (std::size_t c = 0; c < n2; ++c) sys(r, c) = der(r, c);
    for (std::size_t r = 0; r < anti.rows(); ++r)
        for (std::size_t c = 0; c < n2; ++c) sys(der.rows() + r, n2 + c) = anti(r, c);
    const auto base = der.rows() + anti.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                const auto row = base + (i * n + j) * n + m;
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& c = L.structure_constant(i, k, m);
                    if (c.is_zero()) continue;
                    sys(row, k * n + j) += c;
                    sys(row, n2 + k * n + j) -= c;
                }
            }
    return sys;
}

MapSpace derivations(const LeibnizAlgebra& L) { return make_map_space(L.dim(), nullspace(derivation_system(L))); }

MapSpace derivations_via_adjoint(const LeibnizAlgebra& L) {
    return make_map_space(L.dim(), nullspace(derivation_system_adjoint(L)));
}

MapSpace anti_derivations(const LeibnizAlgebra& L) {
    return make_map_space(L.dim(), nullspace(anti_derivation_system(L)));
}

MapSpace anti_derivations_via_adjoint(const LeibnizAlgebra& L) {
    return make_map_space(L.dim(), nullspace(anti_derivation_system_adjoint(L)));
}

BiderSpace biderivations(const LeibnizAlgebra& L) {
    return make_bider_space(L.dim(), nullspace(biderivation_system(L)));
}

BiderPair inner_biderivation(const LeibnizAlgebra& L, const Vector& x) { return {-L.ad(x), L.Ad(x)}; }

BiderSpace inner_biderivations(const LeibnizAlgebra& L) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < L.dim(); ++i) gens.push_back(flatten(inner_biderivation(L, L.basis_vector(i))));
    return make_bider_space(L.dim(), Subspace::span(L.field(), 2 * L.dim() * L.dim(), gens));
}

BiderPair bider_bracket(const LeibnizAlgebra& L, const BiderPair& p, const BiderPair& q) {
    if (!is_biderivation(L, p)) throw InvariantError("bider_bracket: first argument is not a biderivation");
    if (!is_biderivation(L, q)) throw InvariantError("bider_bracket: second argument is not a biderivation");
    BiderPair out{p.d * q.d - q.d * p.d, p.D * q.d - q.d * p.D};
    if (!is_biderivation(L, out)) throw InvariantError("bider_bracket: result is not a biderivation");
    return out;
}

BiderStructure bider_structure(const LeibnizAlgebra& L) {
    const auto space = biderivations(L);
    const auto& f = L.field();
    const auto N = space.dim();
    if (N == 0) throw InvariantError("Bider(L) is zero");
    std::vector<BracketEntry> table;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            const auto& p = space.generators[a];
            const auto& q = space.generators[b];
            // Closure is checked against the span rather than through bider_bracket.
            const BiderPair r{p.d * q.d - q.d * p.d, p.D * q.d - q.d * p.D};
            const auto flat = flatten(r);
            if (!space.space.contains(flat))
                throw InvariantError("closure failure: [b" + std::to_string(a + 1) + ", b" + std::to_string(b + 1) +
                                     "] lies outside Bider(L)");
            auto coords = space.space.coordinates(flat);
            if (!is_zero(coords)) table.push_back({a, b, std::move(coords)});
        }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < N; ++a) names.push_back("b" + std::to_string(a + 1));
    auto algebra = LeibnizAlgebra::build(f, N, table, names);
    auto profile = algebra.profile();
    return {std::move(algebra), profile};
}

Matrix der_module_action(const LeibnizAlgebra& L, const Matrix& d, const Matrix& D) {
    if (!is_derivation(L, d)) throw InvariantError("der_module_action: d is not a derivation");
    if (!is_anti_derivation(L, D)) throw InvariantError("der_module_action: D is not an anti-derivation");
    Matrix out = D * d - d * D;
    if (!is_anti_derivation(L, out)) throw InvariantError("der_module_action: result is not an anti-derivation");
    return out;
}

bool check_inner_morphism(const LeibnizAlgebra& L) {
    const auto n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto image = inner_biderivation(L, L.basis_bracket(i, j));
            const auto product = bider_bracket(L, inner_biderivation(L, L.basis_vector(i)),
                                               inner_biderivation(L, L.basis_vector(j)));
            if (!(image == product)) return false;
        }
    return true;
}

}  // namespace leibniz
