#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibniz/algebra_io.hpp"
#include "leibniz/bider.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/verification.hpp"

namespace leibniz::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string catalog;
    std::string file;
    std::string field = "rational";
    std::vector<std::string> params;
    std::string alpha;
    std::string format = "text";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Source {
    LeibnizAlgebra algebra;
    std::string label;
};

Source load_source(const Options& o, bool field_given) {
    if (o.catalog.empty() == o.file.empty()) throw UsageError("exactly one of --catalog or --file is required");
    if (!o.catalog.empty()) {
        const auto field = FieldSpec::parse(o.field);
        return {load(o.catalog, field, parse_params(o.params, field)), o.catalog};
    }
    if (!o.params.empty()) throw UsageError("--param applies to catalog entries only");
    auto algebra = load_algebra_file(o.file);
    if (field_given && !(FieldSpec::parse(o.field) == algebra.field()))
        throw UsageError("--field " + o.field + " conflicts with the file's field " + algebra.field().to_string());
    return {std::move(algebra), o.file};
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(row);
    }
    return rows;
}

json subspace_json(const Subspace& s) {
    json basis = json::array();
    for (const auto& v : s.basis()) {
        json row = json::array();
        for (const auto& x : v) row.push_back(x.to_string());
        basis.push_back(row);
    }
    return {{"dim", s.dim()}, {"basis", basis}};
}

void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent) {
    std::size_t width = 1;
    for (const auto& x : m.entries()) width = std::max(width, x.to_string().size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << indent << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << std::setw(static_cast<int>(width)) << m(r, c);
        out << "]\n";
    }
}

std::string span_text(const Subspace& s, const std::vector<std::string>& names) {
    if (s.dim() == 0) return "0";
    std::string out = "span{";
    const auto basis = s.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        out += (i ? ", " : "") + format_linear_combination(basis[i], names);
    return out + "}";
}

std::string series_text(const SeriesResult& s, const char* zero_word, const char* fail_word) {
    std::string out;
    for (std::size_t i = 0; i < s.terms.size(); ++i) out += (i ? " > " : "") + std::to_string(s.terms[i].dim());
    if (s.class_index)
        out += "   " + std::to_string(*s.class_index) + "-step " + zero_word;
    else
        out += std::string("   not ") + fail_word;
    return out;
}

json series_json(const SeriesResult& s) {
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back(subspace_json(t));
    return {{"terms", terms}, {"class_index", s.class_index ? json(*s.class_index) : json(nullptr)}};
}

json profile_json(const IdentityProfile& p) {
    return {{"right", p.is_right}, {"left", p.is_left}, {"symmetric", p.is_symmetric}, {"lie", p.is_lie}};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_info(const Source& src, const Options& o, std::ostream& out) {
    const auto& L = src.algebra;
    const auto& p = L.profile();
    const auto kernel = leibniz_kernel(L);
    const auto zl = left_center(L), zr = right_center(L), z = center(L);
    const auto lcs = lower_central_series(L), ds = derived_series(L);
    if (o.format == "json") {
        out << json{{"command", "info"},
                    {"source", src.label},
                    {"field", L.field().to_string()},
                    {"dim", L.dim()},
                    {"names", L.names()},
                    {"profile", profile_json(p)},
                    {"leibniz_kernel", subspace_json(kernel)},
                    {"left_center", subspace_json(zl)},
                    {"right_center", subspace_json(zr)},
                    {"center", subspace_json(z)},
                    {"lower_central_series", series_json(lcs)},
                    {"derived_series", series_json(ds)}}
                   .dump(2)
            << '\n';
        return exit_ok;
    }
    const auto& names = L.names();
    out << src.label << " over " << L.field() << ", dim " << L.dim() << '\n';
    for (const auto& e : L.table())
        out << "  [" << names[e.left] << "," << names[e.right] << "] = " << format_linear_combination(e.value, names)
            << '\n';
    out << "identities: right " << yes_no(p.is_right) << ", left " << yes_no(p.is_left) << ", symmetric "
        << yes_no(p.is_symmetric) << ", Lie " << yes_no(p.is_lie) << '\n';
    out << "Leib(L) = " << span_text(kernel, names) << '\n';
    out << "Z_l(L)  = " << span_text(zl, names) << '\n';
    out << "Z_r(L)  = " << span_text(zr, names) << '\n';
    out << "Z(L)    = " << span_text(z, names) << '\n';
    out << "lower central series dims: " << series_text(lcs, "nilpotent", "nilpotent") << '\n';
    out << "derived series dims:       " << series_text(ds, "solvable", "solvable") << '\n';
    return exit_ok;
}

int cmd_series(const Source& src, const Options& o, std::ostream& out) {
    const auto& L = src.algebra;
    const auto lcs = lower_central_series(L), ds = derived_series(L);
    if (o.format == "json") {
        out << json{{"command", "series"},
                    {"source", src.label},
                    {"field", L.field().to_string()},
                    {"lower_central_series", series_json(lcs)},
                    {"derived_series", series_json(ds)}}
                   .dump(2)
            << '\n';
        return exit_ok;
    }
    out << "lower central series of " << src.label << ":\n";
    for (std::size_t i = 0; i < lcs.terms.size(); ++i)
        out << "  L^(" << i << ") = " << span_text(lcs.terms[i], L.names()) << '\n';
    out << "  " << (lcs.class_index ? std::to_string(*lcs.class_index) + "-step nilpotent" : "not nilpotent") << '\n';
    out << "derived series of " << src.label << ":\n";
    for (std::size_t i = 0; i < ds.terms.size(); ++i)
        out << "  L^" << i << " = " << span_text(ds.terms[i], L.names()) << '\n';
    out << "  " << (ds.class_index ? std::to_string(*ds.class_index) + "-step solvable" : "not solvable") << '\n';
    return exit_ok;
}

int print_map_space(const std::string& command, const std::string& title, const Source& src, const MapSpace& s,
                    const Options& o, std::ostream& out) {
    if (o.format == "json") {
        json gens = json::array();
        for (const auto& g : s.generators) gens.push_back(matrix_json(g));
        out << json{{"command", command},
                    {"source", src.label},
                    {"field", src.algebra.field().to_string()},
                    {"n", s.n},
                    {"dim", s.dim()},
                    {"generators", gens}}
                   .dump(2)
            << '\n';
        return exit_ok;
    }
    out << title << " of " << src.label << ": dimension " << s.dim() << '\n';
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
        out << "generator " << i + 1 << ":\n";
        print_matrix(out, s.generators[i], "  ");
    }
    return exit_ok;
}

int print_bider_space(const std::string& command, const std::string& title, const Source& src, const BiderSpace& s,
                      const Options& o, std::ostream& out) {
    if (o.format == "json") {
        json gens = json::array();
        for (const auto& g : s.generators) gens.push_back({{"d", matrix_json(g.d)}, {"D", matrix_json(g.D)}});
        out << json{{"command", command},
                    {"source", src.label},
                    {"field", src.algebra.field().to_string()},
                    {"n", s.n},
                    {"dim", s.dim()},
                    {"generators", gens}}
                   .dump(2)
            << '\n';
        return exit_ok;
    }
    out << title << " of " << src.label << ": dimension " << s.dim() << '\n';
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
        out << "generator " << i + 1 << ":\n  d =\n";
        print_matrix(out, s.generators[i].d, "    ");
        out << "  D =\n";
        print_matrix(out, s.generators[i].D, "    ");
    }
    return exit_ok;
}

int cmd_list(const Options& o, std::ostream& out) {
    if (o.format == "json") {
        json entries = json::array();
        for (const auto& e : list_entries()) {
            json params = json::array();
            for (const auto& p : e.parameters) params.push_back({{"name", p.name}, {"constraint", p.constraint}});
            entries.push_back({{"id", e.id}, {"dim", e.dim}, {"parameters", params}, {"brackets", e.brackets}});
        }
        out << json{{"command", "list"}, {"entries", entries}}.dump(2) << '\n';
        return exit_ok;
    }
    for (const auto& e : list_entries()) {
        std::string params;
        for (const auto& p : e.parameters) params += p.name + " " + p.constraint;
        out << std::left << std::setw(10) << e.id << " dim " << e.dim << "  " << std::setw(15)
            << (params.empty() ? "" : "(" + params + ")") << ' ' << e.brackets << '\n';
    }
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.catalog.empty()) throw UsageError("verify requires --catalog");
    if (!o.file.empty()) throw UsageError("verify works on catalog entries only");
    const auto field = FieldSpec::parse(o.field);
    const auto report = verify_entry(o.catalog, field, parse_params(o.params, field));
    out << (o.format == "json" ? render_json(report) : render_text(report));
    return report.overall || !report.within_sampled_hypothesis ? exit_ok : exit_verification_failed;
}

int cmd_verify_paper(const Options& o, std::ostream& out) {
    const auto field = FieldSpec::parse(o.field);
    const auto choices =
        o.alpha.empty() ? default_param_choices(field) : uniform_param_choices(field, Scalar::parse(o.alpha, field));
    const auto summary = verify_all(field, choices);
    out << (o.format == "json" ? render_json(summary) : render_text(summary));
    return summary.overall ? exit_ok : exit_verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Derivations, anti-derivations and biderivations of Leibniz algebras"};
    app.name("leibniz");
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_field = [&](CLI::App* sub) {
        return sub->add_option("--field", o.field, "rational (default) or prime:P");
    };

    struct SourceCommand {
        const char* name;
        const char* help;
        CLI::App* app = nullptr;
        CLI::Option* field = nullptr;
    };
    std::vector<SourceCommand> source_commands = {
        {"info", "Identity profile, Leibniz kernel, centers and series"},
        {"derivations", "Canonical basis of Der(L)"},
        {"antiderivations", "Canonical basis of the anti-derivations"},
        {"biderivations", "Canonical basis of Bider(L)"},
        {"inner", "Canonical basis of the inner biderivations"},
        {"series", "Lower central and derived series"},
    };
    for (auto& sc : source_commands) {
        sc.app = app.add_subcommand(sc.name, sc.help);
        sc.app->add_option("--catalog", o.catalog, "Catalog id (see 'list')");
        sc.app->add_option("--file", o.file, "Algebra file (line format or JSON)");
        sc.field = add_field(sc.app);
        sc.app->add_option("--param", o.params, "Catalog parameter name=value (repeatable)");
        add_format(sc.app);
    }

    auto* verify = app.add_subcommand("verify", "Compare one catalog entry against the published results");
    verify->add_option("--catalog", o.catalog, "Catalog id")->required();
    add_field(verify);
    verify->add_option("--param", o.params, "Catalog parameter name=value (repeatable)");
    add_format(verify);

    auto* verify_paper = app.add_subcommand("verify-paper", "Verify every catalog entry");
    add_field(verify_paper);
    verify_paper->add_option("--alpha", o.alpha, "Use this alpha for every parameterized entry");
    add_format(verify_paper);

    auto* list = app.add_subcommand("list", "List catalog entries");
    add_format(list);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (list->parsed()) return cmd_list(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (verify_paper->parsed()) return cmd_verify_paper(o, out);
        for (const auto& sc : source_commands) {
            if (!sc.app->parsed()) continue;
            const auto src = load_source(o, sc.field->count() > 0);
            const std::string name = sc.name;
            if (name == "info") return cmd_info(src, o, out);
            if (name == "series") return cmd_series(src, o, out);
            if (name == "derivations")
                return print_map_space(name, "Der(L)", src, derivations(src.algebra), o, out);
            if (name == "antiderivations")
                return print_map_space(name, "anti-derivations", src, anti_derivations(src.algebra), o, out);
            if (name == "biderivations")
                return print_bider_space(name, "Bider(L)", src, biderivations(src.algebra), o, out);
            if (name == "inner")
                return print_bider_space(name, "inner biderivations", src, inner_biderivations(src.algebra), o, out);
        }
        throw UsageError("no command given");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace leibniz::cli
