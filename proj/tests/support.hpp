#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "leibniz/algebra.hpp"

namespace testing_support {

using namespace leibniz;

/// [e_i, e_j] = sum_k coeffs[k] e_k with 1-based i, j.
struct IntBracket {
    std::size_t i;
    std::size_t j;
    std::vector<long> coeffs;
};

inline Vector ints(const FieldSpec& f, const std::vector<long>& xs) {
    Vector v;
    for (long x : xs) v.push_back(Scalar::from_int(f, x));
    return v;
}

inline LeibnizAlgebra make_algebra(const FieldSpec& f, std::size_t n, const std::vector<IntBracket>& rows) {
    std::vector<BracketEntry> table;
    for (const auto& r : rows) table.push_back({r.i - 1, r.j - 1, ints(f, r.coeffs)});
    return LeibnizAlgebra::build(f, n, table);
}

/// Calls fn on every vector of GF(p)^m, as residues.
inline void for_each_vector(std::uint64_t p, std::size_t m, const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> v(m, 0);
    while (true) {
        fn(v);
        std::size_t k = 0;
        while (k < m && ++v[k] == static_cast<long>(p)) v[k++] = 0;
        if (k == m) return;
    }
}

/// Integer structure constants reduced mod p, c[(i*n + j)*n + k].
inline std::vector<long> residue_constants(const LeibnizAlgebra& L) {
    const auto n = L.dim();
    std::vector<long> c(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                c[(i * n + j) * n + k] = static_cast<long>(L.structure_constant(i, j, k).residue());
    return c;
}

}  // namespace testing_support
