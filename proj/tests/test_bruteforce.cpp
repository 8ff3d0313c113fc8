#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "leibniz/bider.hpp"
#include "leibniz/catalog.hpp"
#include "support.hpp"

using namespace leibniz;
using testing_support::for_each_vector;
using testing_support::ints;

namespace {

using IntMatrix = std::vector<long>;  // row-major n x n residues

// Integer model of an algebra over GF(p), independent of the library's solvers.
struct Model {
    std::size_t n;
    long p;
    std::vector<long> c;

    explicit Model(const LeibnizAlgebra& L)
        : n(L.dim()), p(static_cast<long>(L.field().characteristic())), c(testing_support::residue_constants(L)) {}

    long mod(long x) const { return ((x % p) + p) % p; }

    long at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }

    // d([e_i,e_j]) against [d e_i, e_j] + [e_i, d e_j], or [d e_i, e_j] - [d e_j, e_i] when anti.
    bool satisfies(const IntMatrix& d, bool anti) const {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t m = 0; m < n; ++m) {
                    long s = 0;
                    for (std::size_t k = 0; k < n; ++k) {
                        s += d[m * n + k] * at(i, j, k);
                        s -= d[k * n + i] * at(k, j, m);
                        s += anti ? d[k * n + j] * at(k, i, m) : -d[k * n + j] * at(i, k, m);
                    }
                    if (mod(s) != 0) return false;
                }
        return true;
    }

    // [e_i, d(e_j)] = [e_i, D(e_j)].
    bool compatible(const IntMatrix& d, const IntMatrix& D) const {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t m = 0; m < n; ++m) {
                    long s = 0;
                    for (std::size_t k = 0; k < n; ++k) s += (d[k * n + j] - D[k * n + j]) * at(i, k, m);
                    if (mod(s) != 0) return false;
                }
        return true;
    }
};

std::vector<IntMatrix> enumerate_maps(const Model& M, bool anti) {
    std::vector<IntMatrix> out;
    for_each_vector(static_cast<std::uint64_t>(M.p), M.n * M.n, [&](const std::vector<long>& d) {
        if (M.satisfies(d, anti)) out.push_back(d);
    });
    return out;
}

std::vector<std::vector<long>> enumerate_pairs_exhaustive(const Model& M) {
    std::vector<std::vector<long>> out;
    const auto n2 = M.n * M.n;
    for_each_vector(static_cast<std::uint64_t>(M.p), 2 * n2, [&](const std::vector<long>& v) {
        const IntMatrix d(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n2));
        const IntMatrix D(v.begin() + static_cast<std::ptrdiff_t>(n2), v.end());
        if (M.satisfies(d, false) && M.satisfies(D, true) && M.compatible(d, D)) out.push_back(v);
    });
    return out;
}

std::vector<std::vector<long>> pairs_from(const Model& M, const std::vector<IntMatrix>& der,
                                          const std::vector<IntMatrix>& anti) {
    std::vector<std::vector<long>> out;
    for (const auto& d : der)
        for (const auto& D : anti)
            if (M.compatible(d, D)) {
                auto v = d;
                v.insert(v.end(), D.begin(), D.end());
                out.push_back(v);
            }
    return out;
}

std::size_t power(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

// Every enumerated solution lies in the solver's space, and the counts agree, so the sets are equal.
void check_same_set(const Subspace& s, const std::vector<std::vector<long>>& solutions) {
    CHECK(solutions.size() == power(s.field().characteristic(), s.dim()));
    for (const auto& v : solutions) REQUIRE(s.contains(ints(s.field(), v)));
    std::set<std::vector<long>> distinct(solutions.begin(), solutions.end());
    CHECK(distinct.size() == solutions.size());
}

ParamMap alpha_params(const CatalogEntry& e, const FieldSpec& f, long alpha) {
    ParamMap params;
    if (e.parameterized()) params.emplace("alpha", Scalar::from_int(f, alpha));
    return params;
}

struct Dims {
    std::size_t der, anti, bider;
};

// Dimensions over the rationals obtained with an independent computer-algebra rank computation.
const std::map<std::string, Dims> reference_dims = {
    {"dim3.L1", {2, 3, 3}},  {"dim3.L2+1", {3, 3, 4}}, {"dim3.L2-1", {3, 4, 5}}, {"dim3.L3", {3, 3, 4}},
    {"dim3.L4", {4, 5, 5}},  {"dim3.L5", {4, 5, 5}},   {"dim3.L7", {4, 5, 5}},   {"dim3.L8", {4, 5, 7}},
    {"dim3.L9", {2, 3, 4}},  {"dim3.L10", {2, 3, 4}},  {"dim3.L12", {2, 3, 4}},  {"dim3.L13", {4, 3, 6}},
    {"dim3.L14", {3, 3, 5}}, {"dim3.L15", {2, 3, 4}},
};

std::vector<std::pair<std::string, long>> three_dim_cases() {
    std::vector<std::pair<std::string, long>> out;
    for (const auto& e : list_entries()) {
        if (e.dim != 3) continue;
        if (e.id == "dim3.L2") {
            out.emplace_back(e.id, 1);
            out.emplace_back(e.id, -1);
        } else {
            out.emplace_back(e.id, 1);
        }
    }
    return out;
}

std::string reference_key(const std::string& id, long alpha) {
    if (id != "dim3.L2") return id;
    return id + (alpha == 1 ? "+1" : "-1");
}

}  // namespace

TEST_CASE("dimension 2 over GF(3): exhaustive maps and pairs") {
    const auto f = FieldSpec::prime(3);
    for (const std::string id : {"dim2.L1", "dim2.L2"}) {
        INFO(id);
        const auto L = load(id, f);
        const Model M(L);
        const auto der = enumerate_maps(M, false);
        const auto anti = enumerate_maps(M, true);
        check_same_set(derivations(L).space, der);
        check_same_set(anti_derivations(L).space, anti);
        const auto pairs = enumerate_pairs_exhaustive(M);
        check_same_set(biderivations(L).space, pairs);
        auto product = pairs_from(M, der, anti);
        std::sort(product.begin(), product.end());
        auto sorted = pairs;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == product);
    }
}

TEST_CASE("dimension 3 over GF(5): exhaustive maps, pairs from the product") {
    const auto f = FieldSpec::prime(5);
    for (const auto& [id, alpha] : three_dim_cases()) {
        INFO(id << " alpha=" << alpha);
        const auto L = load(id, f, alpha_params(find_entry(id), f, alpha));
        const Model M(L);
        const auto der = enumerate_maps(M, false);
        const auto anti = enumerate_maps(M, true);
        check_same_set(derivations(L).space, der);
        check_same_set(anti_derivations(L).space, anti);
        const auto pairs = pairs_from(M, der, anti);
        check_same_set(biderivations(L).space, pairs);
        const auto& ref = reference_dims.at(reference_key(id, alpha));
        CHECK(der.size() == power(5, ref.der));
        CHECK(anti.size() == power(5, ref.anti));
        CHECK(pairs.size() == power(5, ref.bider));
    }
}

TEST_CASE("dimension 3 over the rationals matches reference dimensions") {
    const auto Q = FieldSpec::rationals();
    for (const auto& [id, alpha] : three_dim_cases()) {
        INFO(id << " alpha=" << alpha);
        const auto L = load(id, Q, alpha_params(find_entry(id), Q, alpha));
        const auto& ref = reference_dims.at(reference_key(id, alpha));
        CHECK(derivations(L).dim() == ref.der);
        CHECK(anti_derivations(L).dim() == ref.anti);
        CHECK(biderivations(L).dim() == ref.bider);
    }
}
