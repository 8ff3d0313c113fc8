#include "leibniz/algebra_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace leibniz {

namespace {

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream is{std::string(line)};
    for (std::string w; is >> w;) words.push_back(w);
    return words;
}

std::size_t name_index(std::string_view name, const std::vector<std::string>& names) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("unknown basis element '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - names.begin());
}

std::size_t parse_dim(const std::string& text) {
    if (text.empty() || text.size() > 6 || !std::all_of(text.begin(), text.end(), ::isdigit))
        throw ParseError("malformed dimension '" + text + "'");
    const auto n = std::stoul(text);
    if (n == 0) throw ParseError("dimension must be positive");
    return n;
}

}  // namespace

Vector parse_linear_combination(std::string_view text, const std::vector<std::string>& names, const FieldSpec& f) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw ParseError("empty linear combination");
    auto result = zero_vector(f, names.size());
    if (compact == "0") return result;

    std::size_t pos = 0;
    while (pos < compact.size()) {
        bool negative = false;
        bool saw_sign = false;
        while (pos < compact.size() && (compact[pos] == '+' || compact[pos] == '-')) {
            negative ^= compact[pos] == '-';
            saw_sign = true;
            ++pos;
        }
        if (pos > 0 && !saw_sign) throw ParseError("expected '+' or '-' in '" + compact + "'");
        const auto end = compact.find_first_of("+-", pos);
        auto term = std::string_view(compact).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        if (term.empty()) throw ParseError("dangling sign in '" + compact + "'");

        Scalar coefficient = Scalar::one(f);
        std::string_view name = term;
        if (const auto star = term.find('*'); star != std::string_view::npos) {
            coefficient = Scalar::parse(term.substr(0, star), f);
            name = term.substr(star + 1);
        }
        if (negative) coefficient = -coefficient;
        const auto idx = name_index(name, names);
        result[idx] += coefficient;
        pos = end == std::string::npos ? compact.size() : end;
    }
    return result;
}

std::string format_linear_combination(const Vector& v, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        const bool negative = !v[k].field().is_prime() && sgn(v[k].rational()) < 0;
        const Scalar magnitude = negative ? -v[k] : v[k];
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (!magnitude.is_one()) out += magnitude.to_string() + "*";
        out += names.at(k);
    }
    return out.empty() ? "0" : out;
}

LeibnizAlgebra parse_algebra_text(std::string_view text) {
    std::optional<FieldSpec> field;
    std::optional<std::size_t> dim;
    std::vector<std::string> names;
    struct PendingBracket {
        std::size_t line;
        std::string x, y, rhs;
    };
    std::vector<PendingBracket> pending;

    std::istringstream is{std::string(text)};
    std::size_t line_no = 0;
    for (std::string raw; std::getline(is, raw);) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto words = split_words(raw);
        if (words.empty()) continue;
        try {
            if (words[0] == "field") {
                if (field) throw ParseError("duplicate field line");
                if (words.size() == 2)
                    field = FieldSpec::parse(words[1]);
                else if (words.size() == 3 && words[1] == "prime")
                    field = FieldSpec::parse("prime:" + words[2]);
                else
                    throw ParseError("expected 'field rational' or 'field prime P'");
            } else if (words[0] == "dim") {
                if (dim) throw ParseError("duplicate dim line");
                if (words.size() != 2) throw ParseError("expected 'dim N'");
                dim = parse_dim(words[1]);
            } else if (words[0] == "names") {
                if (!dim) throw ParseError("'names' must follow 'dim'");
                if (!names.empty()) throw ParseError("duplicate names line");
                names.assign(words.begin() + 1, words.end());
                if (names.size() != *dim)
                    throw ParseError("expected " + std::to_string(*dim) + " names, got " + std::to_string(names.size()));
                auto sorted = names;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                    throw ParseError("duplicate basis name");
                for (const auto& n : names)
                    if (n.find_first_of("+-*/") != std::string::npos || std::isdigit(static_cast<unsigned char>(n[0])))
                        throw ParseError("invalid basis name '" + n + "'");
            } else {
                const auto arrow = raw.find("->");
                if (arrow == std::string::npos) throw ParseError("unrecognized line '" + words[0] + "'");
                const auto lhs = split_words(std::string_view(raw).substr(0, arrow));
                if (lhs.size() != 2) throw ParseError("bracket line must read 'x y -> combination'");
                pending.push_back({line_no, lhs[0], lhs[1], raw.substr(arrow + 2)});
            }
        } catch (const ParseError& e) {
            if (e.line()) throw;
            throw ParseError(e.what(), line_no);
        } catch (const FieldError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (!field) throw ParseError("missing 'field' line");
    if (!dim) throw ParseError("missing 'dim' line");
    if (names.empty())
        for (std::size_t i = 0; i < *dim; ++i) names.push_back("e" + std::to_string(i + 1));

    std::vector<BracketEntry> entries;
    std::vector<bool> seen(*dim * *dim, false);
    for (const auto& p : pending) {
        try {
            const auto i = name_index(p.x, names);
            const auto j = name_index(p.y, names);
            if (seen[i * *dim + j]) throw ParseError("bracket [" + p.x + "," + p.y + "] listed twice");
            seen[i * *dim + j] = true;
            entries.push_back({i, j, parse_linear_combination(p.rhs, names, *field)});
        } catch (const ParseError& e) {
            throw ParseError(e.what(), p.line);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), p.line);
        }
    }
    return LeibnizAlgebra::build(*field, *dim, entries, names);
}

LeibnizAlgebra parse_algebra_json(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        const auto field = FieldSpec::parse(doc.at("field").get<std::string>());
        const auto dim = doc.at("dim").get<std::size_t>();
        if (dim == 0) throw ParseError("dimension must be positive");
        std::vector<std::string> names;
        if (doc.contains("names"))
            names = doc.at("names").get<std::vector<std::string>>();
        else
            for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
        if (names.size() != dim) throw ParseError("names has the wrong length");

        std::vector<BracketEntry> entries;
        for (const auto& b : doc.value("brackets", json::array())) {
            const auto i = name_index(b.at("x").get<std::string>(), names);
            const auto j = name_index(b.at("y").get<std::string>(), names);
            auto value = zero_vector(field, dim);
            for (const auto& [name, coef] : b.at("result").items())
                value[name_index(name, names)] += Scalar::parse(coef.get<std::string>(), field);
            entries.push_back({i, j, std::move(value)});
        }
        return LeibnizAlgebra::build(field, dim, entries, names);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed algebra document: ") + e.what());
    } catch (const FieldError& e) {
        throw ParseError(e.what());
    }
}

LeibnizAlgebra load_algebra_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const auto text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_algebra_json(text);
    return parse_algebra_text(text);
}

std::string format_algebra_text(const LeibnizAlgebra& L) {
    std::ostringstream os;
    if (L.field().is_prime())
        os << "field prime " << L.field().characteristic() << '\n';
    else
        os << "field rational\n";
    os << "dim " << L.dim() << '\n';
    os << "names";
    for (const auto& n : L.names()) os << ' ' << n;
    os << '\n';
    for (const auto& e : L.table())
        os << L.names()[e.left] << ' ' << L.names()[e.right] << " -> "
           << format_linear_combination(e.value, L.names()) << '\n';
    return os.str();
}

std::string format_algebra_json(const LeibnizAlgebra& L) {
    using nlohmann::json;
    json doc;
    doc["field"] = L.field().to_string();
    doc["dim"] = L.dim();
    doc["names"] = L.names();
    doc["brackets"] = json::array();
    for (const auto& e : L.table()) {
        json result = json::object();
        for (std::size_t k = 0; k < L.dim(); ++k)
            if (!e.value[k].is_zero()) result[L.names()[k]] = e.value[k].to_string();
        doc["brackets"].push_back({{"x", L.names()[e.left]}, {"y", L.names()[e.right]}, {"result", result}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace leibniz
