#include "spectile/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "spectile/catalog.hpp"
#include "spectile/error.hpp"

namespace spectile::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::ParseError, field + ": " + what);
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

bool is_decimal(const std::string& s) { return s.find_first_of(".eE") != std::string::npos; }

std::vector<Vec> vec_list(const Json& j, const std::string& field) {
    if (!j.is_array()) fail(field, "expected an array");
    std::vector<Vec> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vec_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vec& v) {
    Json j = Json::array();
    for (int k = 0; k < v.dim(); ++k) j.push_back(to_string(v[k]));
    return j;
}

Json to_json(const Lattice& l) {
    Json basis = Json::array();
    for (const auto& b : l.basis_vectors()) basis.push_back(to_json(b));
    return Json{{"basis", basis}, {"covolume", to_string(l.covolume())}};
}

Rational rational_from_json(const Json& j, const std::string& field) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long long>());
        if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
        if (j.is_number_float()) return parse_rational(j.dump());
    } catch (const Error& e) {
        fail(field, e.what());
    }
    fail(field, "expected a number or a \"p/q\" string");
}

Vec vec_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.empty() || j.size() > static_cast<std::size_t>(Vec::kMaxDim))
        fail(field, "expected an array of 1 to 3 coordinates");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    return Vec(c);
}

Polytope polytope_from_json(const Json& j) {
    if (!j.is_object()) fail("$", "expected an object");
    const std::string format = j.value("format", j.contains("vertices") ? "vertices" : "");
    auto check_dim = [&](const std::vector<Vec>& vs, const std::string& field) {
        if (j.contains("dim")) {
            const int d = j.at("dim").get<int>();
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (vs[i].dim() != d) fail(field + "[" + std::to_string(i) + "]", "dimension differs from \"dim\"");
        }
        for (std::size_t i = 1; i < vs.size(); ++i)
            if (vs[i].dim() != vs[0].dim()) fail(field + "[" + std::to_string(i) + "]", "inconsistent dimension");
    };
    if (format == "vertices") {
        if (!j.contains("vertices")) fail("$.vertices", "missing");
        auto vs = vec_list(j.at("vertices"), "$.vertices");
        check_dim(vs, "$.vertices");
        return Polytope::from_vertices(std::move(vs));
    }
    if (format == "zonotope") {
        if (!j.contains("generators")) fail("$.generators", "missing");
        auto gs = vec_list(j.at("generators"), "$.generators");
        check_dim(gs, "$.generators");
        return Polytope::zonotope(gs);
    }
    if (format == "halfspaces") {
        if (!j.contains("halfspaces") || !j.at("halfspaces").is_array()) fail("$.halfspaces", "expected an array");
        std::vector<Halfspace> hs;
        const Json& arr = j.at("halfspaces");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string f = "$.halfspaces[" + std::to_string(i) + "]";
            if (!arr[i].contains("normal") || !arr[i].contains("offset")) fail(f, "needs \"normal\" and \"offset\"");
            hs.push_back(Halfspace{vec_from_json(arr[i].at("normal"), f + ".normal"),
                                   rational_from_json(arr[i].at("offset"), f + ".offset")});
            if (hs.back().normal.dim() != hs.front().normal.dim()) fail(f + ".normal", "inconsistent dimension");
        }
        return Polytope::from_halfspaces(hs);
    }
    fail("$.format", "expected \"vertices\", \"halfspaces\" or \"zonotope\"");
}

Json polytope_to_json(const Polytope& p) {
    Json vs = Json::array();
    for (const auto& v : p.vertices()) vs.push_back(to_json(v));
    return Json{{"format", "vertices"}, {"dim", p.dim()}, {"vertices", vs}};
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // Translate the byte offset into line and column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Polytope load_polytope(const std::string& source) {
    if (source.rfind("catalog:", 0) == 0) return catalog::make(source.substr(8));
    const std::string t = trim(source);
    if (!t.empty() && t.front() == '{') return polytope_from_json(parse_json(t));
    return polytope_from_json(parse_json(read_file(source)));
}

Vec parse_frequency(std::string_view text) {
    const std::string t = trim(text);
    if (!t.empty() && t.front() == '[') return vec_from_json(parse_json(t), "frequency");
    std::vector<Rational> c;
    for (const auto& part : split(t, ',')) c.push_back(parse_rational(part));
    if (c.empty() || c.size() > static_cast<std::size_t>(Vec::kMaxDim))
        throw Error(ErrorCode::ParseError, "frequency needs 1 to 3 coordinates");
    return Vec(c);
}

SpectrumPatch read_patch_csv(std::istream& in, double window_radius) {
    SpectrumPatch s;
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto cells = split(t, ',');
        std::vector<Rational> c;
        try {
            for (const auto& cell : cells) {
                c.push_back(parse_rational(cell));
                if (is_decimal(cell)) s.exact = false;
            }
        } catch (const Error& e) {
            if (first) {
                first = false;
                continue;  // header
            }
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
        }
        first = false;
        if (c.empty() || c.size() > static_cast<std::size_t>(Vec::kMaxDim))
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 1 to 3 coordinates");
        if (s.dim == 0) s.dim = static_cast<int>(c.size());
        if (static_cast<int>(c.size()) != s.dim)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": inconsistent dimension");
        s.points.push_back(Vec(c));
    }
    std::sort(s.points.begin(), s.points.end());
    s.center = Vec(s.dim);
    s.window_radius = window_radius;
    if (window_radius <= 0)
        for (const auto& p : s.points)
            s.window_radius = std::max(s.window_radius, std::sqrt(p.norm2().convert_to<double>()));
    s.update_separation();
    return s;
}

void write_patch_csv(std::ostream& out, const SpectrumPatch& s) {
    static const char* names[] = {"x", "y", "z"};
    for (int k = 0; k < s.dim; ++k) out << (k ? "," : "") << names[k];
    out << "\n";
    for (const auto& p : s.points) {
        for (int k = 0; k < s.dim; ++k) out << (k ? "," : "") << to_string(p[k]);
        out << "\n";
    }
}

}  // namespace spectile::io
