#include <doctest.h>

#include <json.hpp>

#include "leibniz/verification.hpp"

using namespace leibniz;

namespace {

const FieldSpec Q = FieldSpec::rationals();

const Check* find_check(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool is_published_comparison(const Check& c) {
    return c.name.rfind("published", 0) == 0 || c.name.find("dimension") != std::string::npos ||
           c.name == "all biderivations are inner";
}

}  // namespace

TEST_CASE("dim3.L1 reproduces") {
    const auto r = verify_entry("dim3.L1", Q);
    CHECK(r.overall);
    CHECK(r.computed.bider_dim == 3);
    CHECK(r.computed.der_dim == 2);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("dimension 2 entries reproduce") {
    for (const auto& f : {Q, FieldSpec::prime(5), FieldSpec::prime(7)}) {
        const auto l1 = verify_entry("dim2.L1", f);
        CHECK(l1.overall);
        CHECK(l1.computed.der_dim == 2);
        CHECK(l1.computed.bider_dim == 3);
        CHECK(l1.computed.inner_dim == 1);
        const auto l2 = verify_entry("dim2.L2", f);
        CHECK(l2.overall);
        CHECK(l2.computed.bider_dim == 2);
        CHECK(find_check(l2, "all biderivations are inner") != nullptr);
    }
}

TEST_CASE("field branch of dim3.L2") {
    const auto five = FieldSpec::prime(5);
    const auto r = verify_entry("dim3.L2", five, {{"alpha", Scalar::from_int(five, 4)}});
    CHECK(r.expected.branch == "alpha = -1");
    CHECK(r.expected.bider_dim == 4);
    // Exhaustive search over GF(5) finds 5^5 biderivations at this alpha.
    CHECK(r.computed.bider_dim == 5);
    const auto* dim = find_check(r, "Bider dimension");
    REQUIRE(dim != nullptr);
    CHECK_FALSE(dim->passed);
    CHECK(dim->detail == "computed 5, published 4");

    const auto other = verify_entry("dim3.L2", five, {{"alpha", Scalar::from_int(five, 2)}});
    CHECK(other.expected.branch == "alpha != -1");
}

TEST_CASE("Dieudonne dimensions") {
    const auto r = verify_entry("dim4.d1", FieldSpec::prime(5));
    CHECK(r.computed.der_dim == 6);
    CHECK(r.computed.antider_dim == 9);
    CHECK(r.computed.bider_dim == 10);
    CHECK(r.computed.inner_dim == 3);
    for (const auto* name : {"Der dimension", "anti-derivation dimension", "Bider dimension",
                             "inner biderivation dimension", "published Der generators are members",
                             "published inner biderivation generators are members"}) {
        const auto* c = find_check(r, name);
        REQUIRE_MESSAGE(c != nullptr, name);
        CHECK_MESSAGE(c->passed, name);
    }
}

TEST_CASE("reports are consistent and failures carry witnesses") {
    for (const auto& f : {Q, FieldSpec::prime(5)}) {
        const auto summary = verify_all(f, default_param_choices(f));
        CHECK(summary.reports.size() == 17);
        bool all = true;
        for (const auto& r : summary.reports) {
            bool conj = true;
            for (const auto& c : r.checks) {
                conj = conj && c.passed;
                if (!c.passed) CHECK_MESSAGE(!c.detail.empty(), r.entry_id << ": " << c.name);
                if (!is_published_comparison(c)) CHECK_MESSAGE(c.passed, r.entry_id << ": " << c.name);
            }
            CHECK(r.overall == conj);
            CHECK(r.within_sampled_hypothesis);
            all = all && r.overall;
        }
        for (const auto& c : summary.global_checks) all = all && c.passed;
        CHECK(summary.overall == all);
    }
}

TEST_CASE("characteristic 3 is flagged") {
    const auto three = FieldSpec::prime(3);
    const auto r = verify_entry("dim3.L1", three);
    CHECK_FALSE(r.within_sampled_hypothesis);
}

TEST_CASE("deterministic rendering") {
    const auto a = verify_entry("dim3.L5", Q);
    const auto b = verify_entry("dim3.L5", Q);
    CHECK(render_json(a) == render_json(b));
    CHECK(render_text(a) == render_text(b));

    const auto s1 = verify_all(Q, default_param_choices(Q));
    const auto s2 = verify_all(Q, default_param_choices(Q));
    CHECK(render_json(s1) == render_json(s2));
    CHECK(render_text(s1) == render_text(s2));

    const auto doc = nlohmann::json::parse(render_json(s1));
    CHECK(doc.at("reports").size() == 17);
    CHECK(doc.at("reports")[0].at("entry_id") == "dim2.L1");
    CHECK(doc.at("reports")[0].at("computed").at("bider_dim") == 3);
}

TEST_CASE("uniform alpha choices") {
    const auto f = FieldSpec::prime(5);
    const auto choices = uniform_param_choices(f, Scalar::from_int(f, 2));
    CHECK(choices.at("dim3.L2").size() == 1);
    CHECK(verify_all(f, choices).reports.size() == 16);
}
