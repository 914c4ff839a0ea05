// JSON schemas for complexes, groups, cochains, stacks, towers and short
// exact sequences. Schema violations raise SchemaError naming the field;
// arbitrary-precision integers serialize as numbers when they fit in 64
// bits and as decimal strings otherwise.
#pragma once

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cechtower/exactseq.hpp"
#include "cechtower/spectral.hpp"
#include "cechtower/tower.hpp"

namespace cechtower {

using nlohmann::json;

class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& field, const std::string& what)
        : std::runtime_error("field '" + field + "': " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

inline json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Int int_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw SchemaError(field, "not a valid integer string");
        }
    }
    throw SchemaError(field, "expected an integer");
}

inline json group_to_json(const AbelianGroup& g) {
    json j;
    j["free_rank"] = g.free_rank();
    json tors = json::array();
    for (const Int& d : g.torsion()) tors.push_back(int_to_json(d));
    j["torsion"] = tors;
    return j;
}

// Accepts {"free_rank": r, "torsion": [...]}, the shorthand {"mod": m}, and
// the shorthand {"Z": r}.
inline AbelianGroup group_from_json(const json& j, const std::string& field = "group") {
    if (!j.is_object()) throw SchemaError(field, "expected an object");
    if (j.contains("mod")) return AbelianGroup::cyclic(int_from_json(j.at("mod"), field + ".mod"));
    if (j.contains("Z")) {
        if (!j.at("Z").is_number_unsigned() && !j.at("Z").is_number_integer())
            throw SchemaError(field + ".Z", "expected a non-negative integer");
        auto r = j.at("Z").get<std::int64_t>();
        if (r < 0) throw SchemaError(field + ".Z", "expected a non-negative integer");
        return AbelianGroup::free(static_cast<std::size_t>(r));
    }
    if (!j.contains("free_rank")) throw SchemaError(field + ".free_rank", "missing");
    if (!j.at("free_rank").is_number_integer())
        throw SchemaError(field + ".free_rank", "expected an integer");
    auto r = j.at("free_rank").get<std::int64_t>();
    if (r < 0) throw SchemaError(field + ".free_rank", "must be non-negative");
    std::vector<Int> torsion;
    if (j.contains("torsion")) {
        if (!j.at("torsion").is_array()) throw SchemaError(field + ".torsion", "expected an array");
        for (const auto& t : j.at("torsion")) torsion.push_back(int_from_json(t, field + ".torsion"));
    }
    try {
        return AbelianGroup(static_cast<std::size_t>(r), torsion);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(field + ".torsion", e.what());
    }
}

inline json complex_to_json(const Complex& c) {
    json j;
    json verts = json::array();
    for (int v : c.vertices()) verts.push_back(v);
    j["vertices"] = verts;
    json simps = json::array();
    for (const Simplex& s : c.all_simplices()) {
        json t = json::array();
        for (int v : s) t.push_back(v);
        simps.push_back(t);
    }
    j["simplices"] = simps;
    return j;
}

// Faces may be omitted in the input; the closure is applied on load.
inline Complex complex_from_json(const json& j, const std::string& field = "complex") {
    if (!j.is_object()) throw SchemaError(field, "expected an object");
    if (!j.contains("simplices")) throw SchemaError(field + ".simplices", "missing");
    if (!j.at("simplices").is_array()) throw SchemaError(field + ".simplices", "expected an array");
    std::vector<Simplex> gens;
    for (const auto& t : j.at("simplices")) {
        if (!t.is_array()) throw SchemaError(field + ".simplices", "expected arrays of vertices");
        Simplex s;
        for (const auto& v : t) {
            if (!v.is_number_integer()) throw SchemaError(field + ".simplices", "vertex not an integer");
            s.push_back(v.get<int>());
        }
        gens.push_back(std::move(s));
    }
    if (j.contains("vertices")) {
        if (!j.at("vertices").is_array()) throw SchemaError(field + ".vertices", "expected an array");
        for (const auto& v : j.at("vertices")) {
            if (!v.is_number_integer()) throw SchemaError(field + ".vertices", "vertex not an integer");
            gens.push_back({v.get<int>()});
        }
    }
    try {
        return Complex::closure(gens);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(field + ".simplices", e.what());
    }
}

inline std::string simplex_key(const Simplex& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    return os.str();
}

inline Simplex simplex_from_key(const std::string& key, const std::string& field) {
    Simplex s;
    std::istringstream is(key);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            s.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw SchemaError(field, "bad simplex key '" + key + "'");
        }
    }
    if (s.empty()) throw SchemaError(field, "empty simplex key");
    return s;
}

inline json cochain_to_json(const Cochain& c) {
    json j;
    j["degree"] = c.degree();
    j["group"] = group_to_json(c.group());
    json vals = json::object();
    for (const auto& [s, v] : c.values()) {
        json arr = json::array();
        for (const Int& x : v) arr.push_back(int_to_json(x));
        vals[simplex_key(s)] = arr;
    }
    j["values"] = vals;
    return j;
}

// {"degree": k, "group": {...}, "values": {"0,1,2": [coords], ...}};
// omitted simplices are zero.
inline Cochain cochain_from_json(const json& j, const ComplexPtr& x,
                                 const std::string& field = "cochain") {
    if (!j.is_object()) throw SchemaError(field, "expected an object");
    if (!j.contains("degree")) throw SchemaError(field + ".degree", "missing");
    if (!j.at("degree").is_number_integer()) throw SchemaError(field + ".degree", "expected an integer");
    int degree = j.at("degree").get<int>();
    if (!j.contains("group")) throw SchemaError(field + ".group", "missing");
    AbelianGroup g = group_from_json(j.at("group"), field + ".group");
    Cochain c(x, g, degree);
    if (j.contains("values")) {
        if (!j.at("values").is_object()) throw SchemaError(field + ".values", "expected an object");
        for (const auto& [key, arr] : j.at("values").items()) {
            Simplex s = simplex_from_key(key, field + ".values");
            if (!arr.is_array()) throw SchemaError(field + ".values." + key, "expected an array");
            std::vector<Int> coords;
            for (const auto& v : arr) coords.push_back(int_from_json(v, field + ".values." + key));
            if (coords.size() != g.coord_count())
                throw SchemaError(field + ".values." + key, "coordinate count mismatch");
            try {
                c.set_value(s, std::move(coords));
            } catch (const std::invalid_argument& e) {
                throw SchemaError(field + ".values." + key, e.what());
            }
        }
    }
    return c;
}

inline json stack_to_json(const std::vector<AbelianGroup>& stack) {
    json j = json::array();
    for (const AbelianGroup& g : stack) j.push_back(group_to_json(g));
    return j;
}

inline std::vector<AbelianGroup> stack_from_json(const json& j, const std::string& field = "stack") {
    if (!j.is_array()) throw SchemaError(field, "expected an array of groups");
    std::vector<AbelianGroup> out;
    std::size_t i = 0;
    for (const auto& g : j) out.push_back(group_from_json(g, field + "[" + std::to_string(i++) + "]"));
    return out;
}

inline json tower_to_json(const TowerCocycle& t) {
    json j;
    j["complex"] = complex_to_json(*t.complex());
    json links = json::array();
    for (const AbelianGroup& g : t.stack().links) links.push_back(group_to_json(g));
    j["links"] = links;
    json cocycles = json::array();
    for (const Cochain& c : t.cocycles()) cocycles.push_back(cochain_to_json(c));
    j["cocycles"] = cocycles;
    return j;
}

inline TowerCocycle tower_from_json(const json& j, const std::string& field = "tower") {
    if (!j.is_object()) throw SchemaError(field, "expected an object");
    if (!j.contains("complex")) throw SchemaError(field + ".complex", "missing");
    ComplexPtr x = share(complex_from_json(j.at("complex"), field + ".complex"));
    if (!j.contains("links")) throw SchemaError(field + ".links", "missing");
    LinkStack stack{stack_from_json(j.at("links"), field + ".links")};
    if (!j.contains("cocycles")) throw SchemaError(field + ".cocycles", "missing");
    if (!j.at("cocycles").is_array()) throw SchemaError(field + ".cocycles", "expected an array");
    std::vector<Cochain> cocycles;
    std::size_t i = 0;
    for (const auto& cj : j.at("cocycles"))
        cocycles.push_back(cochain_from_json(cj, x, field + ".cocycles[" + std::to_string(i++) + "]"));
    try {
        return TowerCocycle(x, std::move(stack), std::move(cocycles));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(field, e.what());
    }
}

inline IntMat matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                               const std::string& field) {
    if (!j.is_array()) throw SchemaError(field, "expected an array of rows");
    if (j.size() != rows) throw SchemaError(field, "expected " + std::to_string(rows) + " rows");
    IntMat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw SchemaError(field, "row " + std::to_string(r) + " needs " + std::to_string(cols) +
                                         " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = int_from_json(j[r][c], field);
    }
    return m;
}

inline json matrix_to_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

// {"A'": g, "A": g, "A''": g, "inject": [[...]], "project": [[...]]}
inline ShortExactSequence ses_from_json(const json& j, const std::string& field = "ses") {
    if (!j.is_object()) throw SchemaError(field, "expected an object");
    for (const char* key : {"A'", "A", "A''", "inject", "project"})
        if (!j.contains(key)) throw SchemaError(field + "." + key, "missing");
    AbelianGroup sub = group_from_json(j.at("A'"), field + ".A'");
    AbelianGroup mid = group_from_json(j.at("A"), field + ".A");
    AbelianGroup quot = group_from_json(j.at("A''"), field + ".A''");
    IntMat inj = matrix_from_json(j.at("inject"), mid.coord_count(), sub.coord_count(),
                                  field + ".inject");
    IntMat prj = matrix_from_json(j.at("project"), quot.coord_count(), mid.coord_count(),
                                  field + ".project");
    try {
        return ShortExactSequence(sub, mid, quot, GroupHom(sub, mid, inj), GroupHom(mid, quot, prj));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(field, e.what());
    }
}

inline json ses_to_json(const ShortExactSequence& s) {
    json j;
    j["A'"] = group_to_json(s.sub);
    j["A"] = group_to_json(s.mid);
    j["A''"] = group_to_json(s.quot);
    j["inject"] = matrix_to_json(s.inject.matrix());
    j["project"] = matrix_to_json(s.project.matrix());
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return json::parse(in);  // parse_error carries byte position
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace cechtower
