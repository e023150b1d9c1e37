#include "inertia/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "inertia/error.hpp"
#include "inertia/version.hpp"

namespace inertia {

namespace {

using nlohmann::json;

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

// Byte offsets of the object opening braces inside the top-level "terms"
// array, in order. String-aware, so brace characters in values are ignored.
std::vector<std::size_t> term_offsets(const std::string& text) {
    std::vector<std::size_t> offsets;
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (in_string) {
            if (ch == '\\')
                ++i;
            else if (ch == '"')
                in_string = false;
            continue;
        }
        if (ch == '"') {
            in_string = true;
        } else if (ch == '{' || ch == '[') {
            ++depth;
            if (ch == '{' && depth == 3) offsets.push_back(i); // root { -> terms [ -> term {
        } else if (ch == '}' || ch == ']') {
            --depth;
        }
    }
    return offsets;
}

[[noreturn]] void fail_at(const std::string& source, std::size_t line, const std::string& msg) {
    throw parse_error(source + ":" + std::to_string(line) + ": " + msg);
}

} // namespace

MultiQuadric read_hypersurface(std::istream& in, const std::string& source_name) {
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail_at(source_name, line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), e.what());
    }
    if (!doc.is_object()) fail_at(source_name, 1, "top level must be an object");
    for (const auto& [key, value] : doc.items())
        if (key != "n_plus_1" && key != "field" && key != "terms")
            fail_at(source_name, 1, "unknown key '" + key + "'");
    if (!doc.contains("n_plus_1") || !doc["n_plus_1"].is_number_integer())
        fail_at(source_name, 1, "missing integer field 'n_plus_1'");
    if (!doc.contains("field") || !doc["field"].is_string())
        fail_at(source_name, 1, "missing string field 'field'");
    if (!doc.contains("terms") || !doc["terms"].is_array())
        fail_at(source_name, 1, "missing array field 'terms'");

    const std::int64_t n1_raw = doc["n_plus_1"].get<std::int64_t>();
    if (n1_raw < 2) fail_at(source_name, 1, "n_plus_1 must be at least 2");
    const auto n1 = static_cast<std::size_t>(n1_raw);

    Field f = Field::rationals();
    try {
        f = Field::parse(doc["field"].get<std::string>());
    } catch (const parse_error& e) {
        fail_at(source_name, 1, e.what());
    }

    const std::vector<std::size_t> offsets = term_offsets(text);
    auto term_line = [&](std::size_t index) {
        return index < offsets.size() ? line_of_offset(text, offsets[index]) : std::size_t{1};
    };

    std::vector<std::pair<Exps, Scalar>> terms;
    std::map<Exps, std::size_t> seen;
    std::size_t index = 0;
    for (const auto& rec : doc["terms"]) {
        const std::size_t line = term_line(index);
        if (!rec.is_object() || !rec.contains("exps") || !rec.contains("coeff"))
            fail_at(source_name, line, "term must be an object with 'exps' and 'coeff'");
        for (const auto& [key, value] : rec.items())
            if (key != "exps" && key != "coeff")
                fail_at(source_name, line, "unknown term key '" + key + "'");
        if (!rec["exps"].is_array() || rec["exps"].size() != n1)
            fail_at(source_name, line,
                    "'exps' must list " + std::to_string(n1) + " exponents");
        Exps e;
        for (const auto& comp : rec["exps"]) {
            if (!comp.is_number_integer())
                fail_at(source_name, line, "exponent must be an integer");
            std::int64_t v = comp.get<std::int64_t>();
            if (v < 0 || v > 2)
                fail_at(source_name, line,
                        "exponent " + std::to_string(v) + " outside [0, 2]");
            e.push_back(static_cast<std::uint32_t>(v));
        }
        if (auto it = seen.find(e); it != seen.end())
            fail_at(source_name, line,
                    "duplicate exponent vector (first seen on line " +
                        std::to_string(term_line(it->second)) + ")");
        seen.emplace(e, index);
        if (!rec["coeff"].is_string())
            fail_at(source_name, line, "'coeff' must be a string");
        Scalar c = Scalar::zero(f);
        try {
            c = Scalar::parse(f, rec["coeff"].get<std::string>());
        } catch (const parse_error& err) {
            fail_at(source_name, line, err.what());
        }
        if (c.is_zero()) fail_at(source_name, line, "zero coefficient not allowed");
        terms.emplace_back(std::move(e), std::move(c));
        ++index;
    }
    if (terms.empty()) fail_at(source_name, 1, "hypersurface needs at least one term");

    try {
        return MultiQuadric(MPoly::from_terms(f, n1, terms));
    } catch (const structural_error& e) {
        fail_at(source_name, 1, e.what());
    }
}

MultiQuadric read_hypersurface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    return read_hypersurface(in, path);
}

std::string write_hypersurface(const MultiQuadric& x) {
    std::string s = "{\n";
    s += "  \"n_plus_1\": " + std::to_string(x.n_plus_1()) + ",\n";
    s += "  \"field\": \"" + x.field().to_string() + "\",\n";
    s += "  \"terms\": [\n";
    const auto& terms = x.poly().terms();
    std::size_t index = 0;
    for (const auto& [e, c] : terms) {
        s += "    {\"exps\": [";
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(e[j]);
        }
        s += "], \"coeff\": \"" + c.to_string() + "\"}";
        if (++index < terms.size()) s += ",";
        s += "\n";
    }
    s += "  ]\n}\n";
    return s;
}

Point parse_point(std::string_view text, const Field& f, std::size_t n_plus_1) {
    std::vector<ProjCoord> coords;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_value = [&](std::string_view s) -> Scalar {
        // leniently reduce integers modulo p; file coefficients stay strict
        if (f.is_fp()) {
            std::string t(s);
            try {
                std::size_t used = 0;
                long long v = std::stoll(t, &used);
                if (used == t.size()) return Scalar::from_int(f, v);
            } catch (...) {
            }
            return Scalar::parse(f, s);
        }
        return Scalar::parse(f, s);
    };
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == '[') {
            std::size_t close = text.find(']', pos);
            if (close == std::string_view::npos)
                throw parse_error("unterminated projective pair in point '" +
                                  std::string(text) + "'");
            std::string_view pair = text.substr(pos + 1, close - pos - 1);
            std::size_t colon = pair.find(':');
            if (colon == std::string_view::npos)
                throw parse_error("projective pair needs 'u:v' in point '" +
                                  std::string(text) + "'");
            coords.push_back(ProjCoord{parse_value(pair.substr(0, colon)),
                                       parse_value(pair.substr(colon + 1))});
            pos = close + 1;
        } else {
            std::size_t next = text.find(',', pos);
            std::string_view tok = text.substr(pos, next == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : next - pos);
            while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
                tok.remove_suffix(1);
            coords.push_back(ProjCoord{Scalar::one(f), parse_value(tok)});
            pos = next == std::string_view::npos ? text.size() : next;
        }
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw parse_error("expected ',' between coordinates in point '" +
                                  std::string(text) + "'");
            ++pos;
        }
    }
    if (coords.size() != n_plus_1)
        throw parse_error("point has " + std::to_string(coords.size()) +
                          " coordinates, expected " + std::to_string(n_plus_1));
    try {
        return Point(std::move(coords));
    } catch (const structural_error& e) {
        throw parse_error(e.what());
    }
}

std::string verdict_to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["check"] = v.check;
    j["status"] = to_string(v.status);
    if (v.axis) j["axis"] = *v.axis + 1;
    if (!v.word_echo.empty()) j["word"] = v.word_echo;
    j["seed"] = v.seed;
    j["trials_used"] = v.trials_used;
    j["indeterminate_hits"] = v.indeterminate_hits;
    j["detail"] = v.detail;
    if (v.witness_trial) {
        j["witness"]["trial"] = *v.witness_trial;
        j["witness"]["before"] = v.witness_before->to_string();
        j["witness"]["after"] = v.witness_after->to_string();
    }
    return j.dump(2) + "\n";
}

} // namespace inertia
