// Finite abstract simplicial complexes (nerves of covers): face-closed
// construction, cone detection and a catalog of classical triangulations.
#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cechtower {

using Simplex = std::vector<int>;  // strictly increasing vertex labels

class Complex {
public:
    Complex() = default;

    // Smallest complex containing every generator tuple; faces filled in.
    static Complex closure(const std::vector<Simplex>& generators) {
        Complex c;
        for (const Simplex& g : generators) {
            Simplex s = g;
            std::sort(s.begin(), s.end());
            for (int v : s)
                if (v < 0) throw std::invalid_argument("vertex labels must be non-negative");
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
                std::ostringstream os;
                os << "repeated vertex in tuple " << tuple_string(g);
                throw std::invalid_argument(os.str());
            }
            c.insert_with_faces(s);
        }
        c.rebuild_index();
        return c;
    }

    const std::vector<int>& vertices() const { return vertices_; }
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }

    // k-simplices in lexicographic order.
    const std::vector<Simplex>& simplices(int k) const {
        static const std::vector<Simplex> none;
        if (k < 0 || k > dimension()) return none;
        return by_dim_[static_cast<std::size_t>(k)];
    }

    std::vector<Simplex> all_simplices() const {
        std::vector<Simplex> out;
        for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
        return out;
    }

    bool contains(const Simplex& sorted) const { return members_.count(sorted) != 0; }
    bool has_vertex(int v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    std::size_t count(int k) const { return simplices(k).size(); }

    // Index of a k-simplex within simplices(k).
    std::size_t index_of(const Simplex& sorted) const {
        int k = static_cast<int>(sorted.size()) - 1;
        const auto& level = simplices(k);
        auto it = std::lower_bound(level.begin(), level.end(), sorted);
        if (it == level.end() || *it != sorted)
            throw std::invalid_argument("simplex not in complex: " + tuple_string(sorted));
        return static_cast<std::size_t>(it - level.begin());
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (int k = 0; k <= dimension(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(count(k));
        return chi;
    }

    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f;
        for (int k = 0; k <= dimension(); ++k) f.push_back(count(k));
        return f;
    }

    // True iff every simplex missing the apex extends by it.
    bool is_cone(int apex) const { return !cone_obstruction(apex).has_value(); }

    // A simplex s with apex ∉ s and s ∪ {apex} missing, if one exists.
    std::optional<Simplex> cone_obstruction(int apex) const {
        if (!has_vertex(apex)) throw std::invalid_argument("apex is not a vertex of the complex");
        for (int k = 0; k <= dimension(); ++k)
            for (const Simplex& s : simplices(k)) {
                if (std::binary_search(s.begin(), s.end(), apex)) continue;
                Simplex ext = s;
                ext.insert(std::upper_bound(ext.begin(), ext.end(), apex), apex);
                if (!contains(ext)) return s;
            }
        return std::nullopt;
    }

    bool operator==(const Complex& o) const { return members_ == o.members_; }
    bool operator!=(const Complex& o) const { return !(*this == o); }

    static std::string tuple_string(const Simplex& s) {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
        os << ")";
        return os.str();
    }

private:
    void insert_with_faces(const Simplex& sorted) {
        if (sorted.empty()) return;
        if (members_.insert(sorted).second) {
            if (sorted.size() > 1)
                for (std::size_t i = 0; i < sorted.size(); ++i) {
                    Simplex face;
                    face.reserve(sorted.size() - 1);
                    for (std::size_t j = 0; j < sorted.size(); ++j)
                        if (j != i) face.push_back(sorted[j]);
                    insert_with_faces(face);
                }
        }
    }

    void rebuild_index() {
        by_dim_.clear();
        vertices_.clear();
        for (const Simplex& s : members_) {
            std::size_t k = s.size() - 1;
            if (by_dim_.size() <= k) by_dim_.resize(k + 1);
            by_dim_[k].push_back(s);
            if (k == 0) vertices_.push_back(s[0]);
        }
        for (auto& level : by_dim_) std::sort(level.begin(), level.end());
        std::sort(vertices_.begin(), vertices_.end());
    }

    std::set<Simplex> members_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<int> vertices_;
};

using ComplexPtr = std::shared_ptr<const Complex>;

inline ComplexPtr share(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

// One cover record: an index subset together with whether the corresponding
// intersection is nonempty.
struct CoverRecord {
    Simplex indices;
    bool nonempty = true;
};

// Nerve of a cover given as flagged intersection records. Subsets flagged
// nonempty generate the complex (closure applied); a subset explicitly
// flagged empty that the closure would force nonempty is an inconsistency.
inline Complex nerve_from_cover(const std::vector<CoverRecord>& records) {
    std::vector<Simplex> gens;
    for (const CoverRecord& r : records)
        if (r.nonempty) gens.push_back(r.indices);
    Complex c = Complex::closure(gens);
    for (const CoverRecord& r : records) {
        if (r.nonempty) continue;
        Simplex s = r.indices;
        std::sort(s.begin(), s.end());
        if (c.contains(s))
            throw std::invalid_argument("inconsistent cover: subset " + Complex::tuple_string(s) +
                                        " flagged empty but forced nonempty by a larger record");
    }
    return c;
}

namespace detail {

inline Complex circle_complex(int n) {
    if (n < 3) throw std::invalid_argument("circle(n) requires n >= 3");
    std::vector<Simplex> gens;
    for (int i = 0; i < n; ++i) gens.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
    return Complex::closure(gens);
}

inline Complex simplex_complex(int n) {
    if (n < 0) throw std::invalid_argument("simplex(n) requires n >= 0");
    Simplex top(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) top[static_cast<std::size_t>(i)] = i;
    return Complex::closure({top});
}

// Boundary of the (n+1)-simplex: a triangulated n-sphere.
inline Complex sphere_complex(int n) {
    if (n < 0) throw std::invalid_argument("sphere(n) requires n >= 0");
    std::vector<Simplex> gens;
    for (int omit = 0; omit <= n + 2 - 1; ++omit) {
        Simplex s;
        for (int i = 0; i <= n + 1; ++i)
            if (i != omit) s.push_back(i);
        gens.push_back(s);
    }
    return Complex::closure(gens);
}

inline Complex octahedron_boundary() {
    // poles 0 and 5, equator 1-2-3-4
    std::vector<Simplex> gens = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4},
                                 {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}};
    return Complex::closure(gens);
}

inline Complex torus_7() {
    // Csaszar torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
    std::vector<Simplex> gens;
    for (int i = 0; i < 7; ++i) {
        Simplex a = {i, (i + 1) % 7, (i + 3) % 7};
        Simplex b = {i, (i + 2) % 7, (i + 3) % 7};
        gens.push_back(a);
        gens.push_back(b);
    }
    return Complex::closure(gens);
}

inline Complex projective_plane_6() {
    // antipodal icosahedron quotient: 6 vertices, 15 edges, 10 triangles
    std::vector<Simplex> gens = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                                 {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
    return Complex::closure(gens);
}

inline Complex klein_8() {
    // 8-vertex Klein bottle: 24 edges, 16 triangles, chi = 0
    std::vector<Simplex> gens = {{0, 2, 3}, {0, 2, 5}, {0, 3, 6}, {0, 4, 6},
                                 {0, 4, 7}, {0, 5, 7}, {1, 3, 5}, {1, 3, 6},
                                 {1, 4, 5}, {1, 4, 7}, {1, 6, 7}, {2, 3, 7},
                                 {2, 4, 5}, {2, 4, 6}, {2, 6, 7}, {3, 5, 7}};
    return Complex::closure(gens);
}

}  // namespace detail

// Named classical triangulations. Parameterized entries use the forms
// circle(n), simplex(n), sphere(n).
inline Complex catalog(const std::string& name) {
    auto param = [&](const std::string& prefix) -> std::optional<int> {
        if (name.size() <= prefix.size() + 2) return std::nullopt;
        if (name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
        if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
        std::string num = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
        if (num.empty()) return std::nullopt;
        for (char ch : num)
            if (ch < '0' || ch > '9') return std::nullopt;
        return std::stoi(num);
    };
    if (auto n = param("circle")) return detail::circle_complex(*n);
    if (auto n = param("simplex")) return detail::simplex_complex(*n);
    if (auto n = param("sphere")) return detail::sphere_complex(*n);
    if (name == "sphere2") return detail::octahedron_boundary();
    if (name == "torus7") return detail::torus_7();
    if (name == "rp2_6") return detail::projective_plane_6();
    if (name == "klein8") return detail::klein_8();
    throw std::invalid_argument(
        "unknown catalog name '" + name +
        "'; available: circle(n>=3), sphere2, torus7, rp2_6, klein8, simplex(n), sphere(n)");
}

}  // namespace cechtower
