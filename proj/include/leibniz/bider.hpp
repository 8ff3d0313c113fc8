#pragma once

#include <cstddef>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

// Conventions: a linear map acts on column coordinate vectors, so d(e_j) is
// column j of d. Maps are flattened row-major; a pair (d, D) flattens to
// d's entries followed by D's.

/// A space of n x n matrices, as a subspace of F^(n*n).
struct MapSpace {
    std::size_t n = 0;
    Subspace space;
    /// The canonical basis reshaped into matrices.
    std::vector<Matrix> generators;

    std::size_t dim() const noexcept { return space.dim(); }
    bool contains(const Matrix& m) const { return space.contains(m.entries()); }
};

struct BiderPair {
    Matrix d;
    Matrix D;

    friend bool operator==(const BiderPair&, const BiderPair&) = default;
};

/// A space of pairs of n x n matrices, as a subspace of F^(2*n*n).
struct BiderSpace {
    std::size_t n = 0;
    Subspace space;
    std::vector<BiderPair> generators;

    std::size_t dim() const noexcept { return space.dim(); }
    bool contains(const BiderPair& p) const;
};

Vector flatten(const BiderPair& p);
BiderPair unflatten_pair(const FieldSpec& f, std::size_t n, const Vector& flat);
MapSpace make_map_space(std::size_t n, Subspace space);
BiderSpace make_bider_space(std::size_t n, Subspace space);

// Membership oracles, evaluated straight from the defining identities on basis pairs.
bool is_derivation(const LeibnizAlgebra& L, const Matrix& d);
bool is_anti_derivation(const LeibnizAlgebra& L, const Matrix& D);
/// [x, d(y)] = [x, D(y)] for all basis x, y.
bool is_compatible(const LeibnizAlgebra& L, const Matrix& d, const Matrix& D);
bool is_biderivation(const LeibnizAlgebra& L, const BiderPair& p);

/// Linear systems whose kernels are the solution spaces. Columns index the
/// flattened unknowns; rows are individual scalar equations.
Matrix derivation_system(const LeibnizAlgebra& L);
Matrix derivation_system_adjoint(const LeibnizAlgebra& L);
Matrix anti_derivation_system(const LeibnizAlgebra& L);
Matrix anti_derivation_system_adjoint(const LeibnizAlgebra& L);
/// Derivation rows on d, anti-derivation rows on D, then sum_k (d - D)_{kj} c[i][k][m] = 0.
Matrix biderivation_system(const LeibnizAlgebra& L);

/// Der(L) from d([e_i,e_j]) = [d(e_i),e_j] + [e_i,d(e_j)].
MapSpace derivations(const LeibnizAlgebra& L);
/// Der(L) from [d, ad_{e_i}] = ad_{d(e_i)}.
MapSpace derivations_via_adjoint(const LeibnizAlgebra& L);
/// Anti-derivations from D([e_i,e_j]) = [D(e_i),e_j] - [D(e_j),e_i].
MapSpace anti_derivations(const LeibnizAlgebra& L);
/// Anti-derivations from [D, ad_{e_i}] = -Ad_{D(e_i)}.
MapSpace anti_derivations_via_adjoint(const LeibnizAlgebra& L);

BiderSpace biderivations(const LeibnizAlgebra& L);

/// x -> (-ad_x, Ad_x).
BiderPair inner_biderivation(const LeibnizAlgebra& L, const Vector& x);
/// Span of the inner biderivations of the basis vectors.
BiderSpace inner_biderivations(const LeibnizAlgebra& L);

/// [(d,D),(d',D')] = (d d' - d' d, D d' - d' D). Inputs and result are
/// checked to be biderivations; InvariantError otherwise.
BiderPair bider_bracket(const LeibnizAlgebra& L, const BiderPair& p, const BiderPair& q);

struct BiderStructure {
    /// Bider(L) with basis the canonical generators, named b1..bN.
    LeibnizAlgebra algebra;
    IdentityProfile profile;
};

/// Structure constants of Bider(L) in its canonical basis. Throws
/// InvariantError if a bracket of generators leaves the span, and
/// IdentityViolation if the resulting table is not right Leibniz.
BiderStructure bider_structure(const LeibnizAlgebra& L);

/// d . D = D d - d D. Inputs are checked for membership, and the result is
/// checked to be an anti-derivation; InvariantError otherwise.
Matrix der_module_action(const LeibnizAlgebra& L, const Matrix& d, const Matrix& D);

/// x -> (-ad_x, Ad_x) preserves brackets on every basis pair.
bool check_inner_morphism(const LeibnizAlgebra& L);

}  // namespace leibniz
