#pragma once

#include <map>
#include <string>
#include <vector>

#include "leibniz/catalog.hpp"

namespace leibniz {

struct Check {
    std::string name;
    bool passed = false;
    /// For failures: the witness (offending vector, dimension pair, exception text).
    std::string detail;
};

struct ComputedDims {
    std::size_t der_dim = 0;
    std::size_t antider_dim = 0;
    std::size_t bider_dim = 0;
    std::size_t inner_dim = 0;
};

struct VerificationReport {
    std::string entry_id;
    FieldSpec field = FieldSpec::rationals();
    ParamMap params;
    ComputedDims computed;
    ExpectedDims expected;
    std::vector<Check> checks;
    /// Conjunction of all checks.
    bool overall = false;
    /// False in characteristic 3, where a mismatch is reported but not treated as a failure of the run.
    bool within_sampled_hypothesis = true;
};

/// Runs every solver on one catalog entry and compares against the published data.
VerificationReport verify_entry(std::string_view id, const FieldSpec& field, const ParamMap& params = {});

/// Parameter values to verify per entry id; entries without parameters need no key.
using ParamChoices = std::map<std::string, std::vector<ParamMap>>;

/// alpha = 1 for dim3.L7 and dim3.L12; alpha = 1 and alpha = -1 for dim3.L2.
ParamChoices default_param_choices(const FieldSpec& field);
/// The same alpha for every parameterized entry.
ParamChoices uniform_param_choices(const FieldSpec& field, const Scalar& alpha);

struct VerificationSummary {
    FieldSpec field = FieldSpec::rationals();
    /// Catalog order; parameterized entries once per supplied choice.
    std::vector<VerificationReport> reports;
    /// Claims spanning several entries (range of Bider dimensions in dimension 3).
    std::vector<Check> global_checks;
    /// All in-hypothesis reports and all global checks pass.
    bool overall = false;
};

VerificationSummary verify_all(const FieldSpec& field, const ParamChoices& choices);

std::string render_text(const VerificationReport& report);
std::string render_text(const VerificationSummary& summary);
std::string render_json(const VerificationReport& report);
std::string render_json(const VerificationSummary& summary);

}  // namespace leibniz
