#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/bider.hpp"

namespace leibniz {

using ParamMap = std::map<std::string, Scalar>;

struct ParameterSpec {
    std::string name;
    /// Human-readable constraint; every parameter in the catalog must be nonzero.
    std::string constraint;
};

/// Published dimensions for one catalog entry at one parameter value.
struct ExpectedDims {
    std::size_t der_dim = 0;
    std::optional<std::size_t> antider_dim;
    std::size_t bider_dim = 0;
    std::optional<std::size_t> inner_dim;
    /// Bider(L) is published as consisting of inner biderivations only.
    bool all_inner = false;
    /// Which published case applies, e.g. "alpha = -1".
    std::string branch;
};

/// One generator of a published family: the named parameter set to 1, the rest to 0.
struct NamedMatrix {
    std::string parameter;
    Matrix matrix;
};

struct NamedPair {
    std::string parameter;
    BiderPair pair;
};

/// Transcribed solution families, evaluated in a concrete field.
struct PublishedFamilies {
    std::vector<NamedPair> bider;
    std::vector<NamedMatrix> der;
    std::vector<NamedMatrix> antider;
    std::vector<NamedPair> inner;
};

struct CatalogEntry {
    std::string id;
    std::size_t dim = 0;
    std::vector<ParameterSpec> parameters;
    /// Nonzero brackets, as displayed to users.
    std::string brackets;

    std::function<LeibnizAlgebra(const FieldSpec&, const ParamMap&)> build;
    std::function<ExpectedDims(const FieldSpec&, const ParamMap&)> expected;
    std::function<PublishedFamilies(const FieldSpec&, const ParamMap&)> families;

    bool parameterized() const noexcept { return !parameters.empty(); }
};

/// All entries in fixed order: dim2.L1, dim2.L2, dim3.L1 ... dim3.L15, dim4.d1.
const std::vector<CatalogEntry>& list_entries();

/// Throws CatalogError for unknown ids; dim3.L6 and dim3.L11 get a pointer to
/// the entries they are isomorphic to.
const CatalogEntry& find_entry(std::string_view id);

/// Parses `name=value` assignments in the scalar grammar.
ParamMap parse_params(const std::vector<std::string>& assignments, const FieldSpec& field);

/// Checks that exactly the declared parameters are present and nonzero.
void validate_params(const CatalogEntry& entry, const FieldSpec& field, const ParamMap& params);

LeibnizAlgebra load(std::string_view id, const FieldSpec& field, const ParamMap& params = {});

}  // namespace leibniz
