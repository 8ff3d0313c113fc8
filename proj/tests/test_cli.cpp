#include <doctest.h>

#include <json.hpp>
#include <functional>
#include <sstream>

#include "cli.hpp"
#include "leibniz/algebra_io.hpp"
#include "leibniz/verification.hpp"

using namespace leibniz;
using nlohmann::json;

namespace {

const std::string data_dir = LEIBNIZ_TEST_DATA;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Vector parse_rows(const json& m, const FieldSpec& f) {
    Vector v;
    for (const auto& row : m)
        for (const auto& x : row) v.push_back(Scalar::parse(x.get<std::string>(), f));
    return v;
}

// Generators of a structured solver output, flattened like the library does.
Subspace subspace_from_json(const json& doc, const FieldSpec& f) {
    const std::size_t n = doc.at("n");
    std::vector<Vector> gens;
    bool pairs = false;
    for (const auto& g : doc.at("generators")) {
        if (g.is_object()) {
            pairs = true;
            auto v = parse_rows(g.at("d"), f);
            const auto w = parse_rows(g.at("D"), f);
            v.insert(v.end(), w.begin(), w.end());
            gens.push_back(v);
        } else {
            gens.push_back(parse_rows(g, f));
        }
    }
    return Subspace::span(f, (pairs ? 2 : 1) * n * n, gens);
}

// Matrix rows in text output look like "[a b c]"; consecutive blocks of n rows form one matrix.
Subspace subspace_from_text(const std::string& text, std::size_t n, bool pairs, const FieldSpec& f) {
    std::istringstream in(text);
    std::string line;
    Vector all;
    while (std::getline(in, line)) {
        const auto open = line.find('[');
        const auto close = line.find(']');
        if (open == std::string::npos || close == std::string::npos) continue;
        std::istringstream row(line.substr(open + 1, close - open - 1));
        std::string tok;
        while (row >> tok) all.push_back(Scalar::parse(tok, f));
    }
    const auto len = (pairs ? 2 : 1) * n * n;
    REQUIRE(all.size() % len == 0);
    std::vector<Vector> gens;
    for (std::size_t at = 0; at < all.size(); at += len)
        gens.emplace_back(all.begin() + static_cast<std::ptrdiff_t>(at),
                          all.begin() + static_cast<std::ptrdiff_t>(at + len));
    return Subspace::span(f, len, gens);
}

}  // namespace

TEST_CASE("biderivations of dim2.L1") {
    const auto r = run_cli({"biderivations", "--catalog", "dim2.L1", "--field", "rational"});
    CHECK(r.code == cli::exit_ok);
    std::size_t count = 0;
    for (std::size_t pos = r.out.find("generator "); pos != std::string::npos; pos = r.out.find("generator ", pos + 1))
        ++count;
    CHECK(count == 3);
}

TEST_CASE("invalid identity in a file") {
    const auto r = run_cli({"derivations", "--file", data_dir + "/bad_identity.lbz"});
    CHECK(r.code == cli::exit_usage);
    CHECK(r.err.find("(1, 1, 2)") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == cli::exit_usage);
    CHECK(run_cli({"frobnicate"}).code == cli::exit_usage);
    CHECK(run_cli({"derivations"}).code == cli::exit_usage);
    CHECK(run_cli({"derivations", "--catalog", "dim2.L1", "--file", "x"}).code == cli::exit_usage);
    CHECK(run_cli({"derivations", "--catalog", "dim3.L99"}).code == cli::exit_usage);
    CHECK(run_cli({"derivations", "--catalog", "dim3.L7"}).code == cli::exit_usage);
    CHECK(run_cli({"derivations", "--catalog", "dim3.L7", "--param", "alpha=0"}).code == cli::exit_usage);
    CHECK(run_cli({"derivations", "--catalog", "dim2.L1", "--field", "prime:2"}).code == cli::exit_usage);
    CHECK(run_cli({"derivations", "--catalog", "dim2.L1", "--format", "xml"}).code == cli::exit_usage);
    CHECK(run_cli({"derivations", "--file", data_dir + "/prime5.lbz", "--field", "rational"}).code ==
          cli::exit_usage);
    CHECK(run_cli({"--help"}).code == cli::exit_ok);

    const auto parse = run_cli({"derivations", "--file", data_dir + "/syntax_error.lbz"});
    CHECK(parse.code == cli::exit_usage);
    CHECK(parse.err.find("line 4") != std::string::npos);

    const auto alias = run_cli({"info", "--catalog", "dim3.L6"});
    CHECK(alias.code == cli::exit_usage);
    CHECK(alias.err.find("dim3.L4") != std::string::npos);
}

TEST_CASE("text and structured outputs encode the solver spaces") {
    const std::vector<std::pair<std::string, std::vector<std::string>>> sources = {
        {"dim2.L1", {"--catalog", "dim2.L1"}},
        {"dim3.L7", {"--catalog", "dim3.L7", "--param", "alpha=2/3"}},
        {"dim4.d1", {"--catalog", "dim4.d1", "--field", "prime:7"}},
        {"file", {"--file", data_dir + "/prime5.lbz"}},
    };
    for (const auto& [label, src] : sources) {
        INFO(label);
        const auto info = run_cli([&] {
            auto a = std::vector<std::string>{"info"};
            a.insert(a.end(), src.begin(), src.end());
            a.insert(a.end(), {"--format", "json"});
            return a;
        }());
        REQUIRE(info.code == cli::exit_ok);
        const auto info_doc = json::parse(info.out);
        const auto f = FieldSpec::parse(info_doc.at("field").get<std::string>());

        // Rebuild the algebra the CLI used so the solver spaces can be compared directly.
        const auto L = label == "file" ? load_algebra_file(data_dir + "/prime5.lbz")
                       : label == "dim3.L7"
                           ? load("dim3.L7", f, {{"alpha", Scalar::from_fraction(f, 2, 3)}})
                           : load(label, f);

        const std::vector<std::pair<std::string, std::function<Subspace()>>> commands = {
            {"derivations", [&] { return derivations(L).space; }},
            {"antiderivations", [&] { return anti_derivations(L).space; }},
            {"biderivations", [&] { return biderivations(L).space; }},
            {"inner", [&] { return inner_biderivations(L).space; }},
        };
        for (const auto& [cmd, solve] : commands) {
            INFO(cmd);
            std::vector<std::string> args{cmd};
            args.insert(args.end(), src.begin(), src.end());
            const auto text = run_cli(args);
            args.insert(args.end(), {"--format", "json"});
            const auto structured = run_cli(args);
            REQUIRE(text.code == cli::exit_ok);
            REQUIRE(structured.code == cli::exit_ok);
            const auto doc = json::parse(structured.out);
            CHECK(doc.at("command") == cmd);
            CHECK(doc.at("n") == L.dim());
            const auto expected = solve();
            CHECK(doc.at("dim") == expected.dim());
            CHECK(subspace_from_json(doc, f) == expected);
            const bool pairs = cmd == "biderivations" || cmd == "inner";
            CHECK(subspace_from_text(text.out, L.dim(), pairs, f) == expected);
        }
    }
}

TEST_CASE("info and series") {
    const auto r = run_cli({"info", "--catalog", "dim4.d1", "--format", "json"});
    REQUIRE(r.code == cli::exit_ok);
    const auto doc = json::parse(r.out);
    CHECK(doc.at("dim") == 4);
    CHECK(doc.at("leibniz_kernel").at("dim") == 1);
    CHECK(doc.at("profile").at("symmetric") == true);

    const auto s = run_cli({"series", "--catalog", "dim2.L2"});
    CHECK(s.code == cli::exit_ok);
    CHECK(s.out.find("not nilpotent") != std::string::npos);
    CHECK(run_cli({"list"}).code == cli::exit_ok);
    CHECK(json::parse(run_cli({"list", "--format", "json"}).out).at("entries").size() == 16);
}

TEST_CASE("verify exit codes follow the reports") {
    const auto ok = run_cli({"verify", "--catalog", "dim3.L1"});
    CHECK(ok.code == cli::exit_ok);
    const auto bad = run_cli({"verify", "--catalog", "dim3.L5"});
    CHECK(bad.code == cli::exit_verification_failed);

    const auto all = run_cli({"verify-paper", "--field", "rational", "--format", "json"});
    const auto doc = json::parse(all.out);
    CHECK(doc.at("reports").size() == 17);
    const auto summary = verify_all(FieldSpec::rationals(), default_param_choices(FieldSpec::rationals()));
    CHECK(doc.at("overall") == summary.overall);
    CHECK(all.code == (summary.overall ? cli::exit_ok : cli::exit_verification_failed));

    const auto alpha = run_cli({"verify-paper", "--field", "prime:5", "--alpha", "2", "--format", "json"});
    CHECK(json::parse(alpha.out).at("reports").size() == 16);
}
