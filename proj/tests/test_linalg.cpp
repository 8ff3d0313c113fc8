#include <doctest.h>

#include <algorithm>
#include <random>

#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"

using namespace leibniz;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Vector ints(const FieldSpec& f, std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.push_back(Scalar::from_int(f, x));
    return v;
}

Matrix random_matrix(std::mt19937_64& rng, const FieldSpec& f, std::size_t r, std::size_t c, int sparsity) {
    std::uniform_int_distribution<long> val(-3, 3);
    std::uniform_int_distribution<int> keep(0, 9);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (keep(rng) >= sparsity) m(i, j) = Scalar::from_int(f, val(rng));
    return m;
}

}  // namespace

TEST_CASE("rref examples") {
    auto id = rref(Matrix::identity(Q, 2));
    CHECK(id.reduced == Matrix::identity(Q, 2));
    CHECK(id.pivot_columns == std::vector<std::size_t>{0, 1});
    CHECK(id.rank == 2);

    auto prop = rref(Matrix::from_ints(Q, {{2, 4}, {1, 2}}));
    CHECK(prop.reduced == Matrix::from_ints(Q, {{1, 2}, {0, 0}}));
    CHECK(prop.rank == 1);
    CHECK(prop.pivot_columns == std::vector<std::size_t>{0});

    const auto F5 = FieldSpec::prime(5);
    auto tri = rref(Matrix::from_ints(F5, {{2, 1}, {0, 3}}));
    CHECK(tri.reduced == Matrix::identity(F5, 2));
    CHECK(tri.rank == 2);
}

TEST_CASE("nullspace examples") {
    auto k = nullspace(Matrix::from_ints(Q, {{1, 2}}));
    CHECK(k.dim() == 1);
    CHECK(k == Subspace::span(Q, 2, {ints(Q, {-2, 1})}));

    CHECK(nullspace(Matrix::identity(Q, 4)).dim() == 0);
    CHECK(nullspace(Matrix::identity(Q, 4)) == Subspace::zero(Q, 4));

    auto full = nullspace(Matrix(Q, 2, 3));
    CHECK(full.dim() == 3);
    CHECK(full == Subspace::full(Q, 3));
}

TEST_CASE("column space examples") {
    CHECK(column_space(Matrix::identity(Q, 3)) == Subspace::full(Q, 3));
    CHECK(column_space(Matrix(Q, 3, 2)) == Subspace::zero(Q, 3));
    auto s = column_space(Matrix::from_columns(Q, 3, {ints(Q, {1, 0, 0}), ints(Q, {1, 0, 0})}));
    CHECK(s.dim() == 1);
    CHECK(s == Subspace::span(Q, 3, {unit_vector(Q, 3, 0)}));
}

TEST_CASE("subspace operations") {
    auto line = Subspace::span(Q, 2, {ints(Q, {-2, 1})});
    CHECK(subspace_contains(line, ints(Q, {-4, 2})));
    CHECK_FALSE(subspace_contains(line, ints(Q, {1, 1})));

    auto a = Subspace::span(Q, 3, {ints(Q, {1, 1, 0}), ints(Q, {0, 0, 1})});
    auto b = Subspace::span(Q, 3, {ints(Q, {1, -1, 0}), ints(Q, {0, 0, 1})});
    CHECK(subspace_intersect(a, b) == Subspace::span(Q, 3, {ints(Q, {0, 0, 1})}));
    CHECK(subspace_sum(a, b) == Subspace::full(Q, 3));
    CHECK(subspace_equal(subspace_sum(a, Subspace::zero(Q, 3)), a));
    CHECK(subspace_includes(a, subspace_intersect(a, b)));
    CHECK_FALSE(subspace_includes(a, b));

    auto c = a.coordinates(ints(Q, {2, 2, 5}));
    CHECK(c == ints(Q, {2, 5}));
    CHECK_THROWS_AS(a.coordinates(ints(Q, {1, 0, 0})), DomainError);
}

TEST_CASE("matrix basics") {
    auto m = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
    CHECK(m.transpose() == Matrix::from_ints(Q, {{1, 3}, {2, 4}}));
    CHECK(m * Matrix::identity(Q, 2) == m);
    CHECK(m.apply(ints(Q, {1, 1})) == ints(Q, {3, 7}));
    CHECK(m.column(1) == ints(Q, {2, 4}));
    CHECK(Matrix::reshape(Q, 2, 2, m.entries()) == m);
    CHECK((m - m).is_zero());
    CHECK_THROWS_AS(Matrix::from_rows(Q, {ints(Q, {1, 2}), ints(Q, {1})}), DomainError);
}

TEST_CASE("rank-nullity and kernel vectors on random matrices") {
    std::mt19937_64 rng(99);
    for (const auto& f : {Q, FieldSpec::prime(3), FieldSpec::prime(7)}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<std::size_t> size(1, 7);
            const auto r = size(rng), c = size(rng);
            const auto m = random_matrix(rng, f, r, c, trial % 8);
            const auto red = rref(m);
            const auto k = nullspace(m);
            CHECK(red.rank + k.dim() == c);
            CHECK(column_space(m).dim() == red.rank);
            for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
            CHECK(rref(red.reduced).reduced == red.reduced);
        }
    }
}

TEST_CASE("equality agrees with mutual containment") {
    std::mt19937_64 rng(5);
    const auto f = FieldSpec::prime(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ma = random_matrix(rng, f, 2, 3, 5);
        const auto mb = random_matrix(rng, f, 2, 3, 5);
        const auto a = column_space(ma.transpose());
        const auto b = column_space(mb.transpose());
        const bool mutual = subspace_includes(a, b) && subspace_includes(b, a);
        CHECK(subspace_equal(a, b) == mutual);
        CHECK(subspace_equal(a, b) == subspace_equal(b, a));
        CHECK(subspace_equal(a, a));
        const auto s = subspace_sum(a, b);
        const auto i = subspace_intersect(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        CHECK(subspace_includes(s, a));
        CHECK(subspace_includes(a, i));
        CHECK(subspace_includes(b, i));
    }
}

TEST_CASE("span is independent of generator order") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = random_matrix(rng, Q, 4, 5, 4);
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < 4; ++i) rows.push_back(m.row(i));
        const auto a = Subspace::span(Q, 5, rows);
        std::reverse(rows.begin(), rows.end());
        rows.push_back(rows[0] + Scalar::from_int(Q, 3) * rows[1]);
        CHECK(Subspace::span(Q, 5, rows) == a);
    }
}
