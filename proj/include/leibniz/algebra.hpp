#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

/// One nonzero entry of a multiplication table: [e_left, e_right] = value (0-based indices).
struct BracketEntry {
    std::size_t left;
    std::size_t right;
    Vector value;
};

struct IdentityProfile {
    bool is_right = true;
    bool is_left = false;
    bool is_symmetric = false;
    /// Antisymmetric bracket.
    bool is_lie = false;

    friend bool operator==(const IdentityProfile&, const IdentityProfile&) = default;
};

/// The right Leibniz identity fails on a basis triple.
class IdentityViolation : public InvariantError {
public:
    IdentityViolation(std::array<std::size_t, 3> triple, Vector lhs, Vector rhs);

    /// 0-based (i, j, k) with [[e_i,e_j],e_k] != [[e_i,e_k],e_j] + [e_i,[e_j,e_k]].
    const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }
    const Vector& lhs() const noexcept { return lhs_; }
    const Vector& rhs() const noexcept { return rhs_; }

private:
    std::array<std::size_t, 3> triple_;
    Vector lhs_;
    Vector rhs_;
};

/// A finite-dimensional right Leibniz algebra given by structure constants.
///
/// Immutable once built. build() checks the right Leibniz identity on all
/// basis triples, so every instance is a genuine right Leibniz algebra.
class LeibnizAlgebra {
public:
    /// Unlisted pairs bracket to zero; listing a pair twice is an error.
    /// Empty names default to e1..en. Throws IdentityViolation, DomainError, FieldError.
    static LeibnizAlgebra build(const FieldSpec& field, std::size_t dim, const std::vector<BracketEntry>& table,
                                std::vector<std::string> names = {});

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// [e_i, e_j] as a coordinate vector.
    const Vector& basis_bracket(std::size_t i, std::size_t j) const { return table_.at(i * dim_ + j); }
    /// c[i][j][k], the e_k coordinate of [e_i, e_j].
    const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return table_.at(i * dim_ + j).at(k);
    }
    /// Nonzero entries of the multiplication table in (i, j) order.
    std::vector<BracketEntry> table() const;

    Vector bracket(const Vector& x, const Vector& y) const;
    Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim_, i); }

    /// ad_x = [-, x]; column j is [e_j, x].
    Matrix ad(const Vector& x) const;
    /// Ad_x = [x, -]; column j is [x, e_j].
    Matrix Ad(const Vector& x) const;

    const IdentityProfile& profile() const noexcept { return profile_; }
    bool is_abelian() const noexcept { return nonzero_.empty(); }

private:
    LeibnizAlgebra(FieldSpec field, std::size_t dim, std::vector<Vector> table, std::vector<std::string> names);

    FieldSpec field_;
    std::size_t dim_;
    std::vector<Vector> table_;
    std::vector<std::pair<std::size_t, std::size_t>> nonzero_;
    std::vector<std::string> names_;
    IdentityProfile profile_;
};

/// First basis triple breaking the right identity for a raw table, or nullopt.
/// `table` holds dim*dim vectors indexed i*dim + j.
std::optional<std::array<std::size_t, 3>> find_right_identity_violation(const FieldSpec& field, std::size_t dim,
                                                                        const std::vector<Vector>& table);

/// span{[a, b] : a in A, b in B}.
Subspace bracket_subspaces(const LeibnizAlgebra& L, const Subspace& a, const Subspace& b);

/// Leib(L), spanned by [e_i,e_i] and [e_i,e_j] + [e_j,e_i].
Subspace leibniz_kernel(const LeibnizAlgebra& L);
/// {x : [x, L] = 0}.
Subspace left_center(const LeibnizAlgebra& L);
/// {x : [L, x] = 0}.
Subspace right_center(const LeibnizAlgebra& L);
Subspace center(const LeibnizAlgebra& L);

struct SeriesResult {
    /// terms[0] = L. Ends with a zero term, or with two equal terms when the series stabilizes above zero.
    std::vector<Subspace> terms;
    /// n with terms[n-1] != 0 and terms[n] = 0; nullopt when the series never reaches zero.
    std::optional<std::size_t> class_index;
};

/// L^(k+1) = [L^(k), L].
SeriesResult lower_central_series(const LeibnizAlgebra& L);
/// L^{k+1} = [L^k, L^k].
SeriesResult derived_series(const LeibnizAlgebra& L);

}  // namespace leibniz
