// Abelian gerbed towers as cocycle families (c_2, ..., c_{n+1}) over a link
// stack (L_1, ..., L_n): validation, classification by the top class in
// H^{n+1}(X, L_n), triviality, equivalence and extension from a chosen class.
#pragma once

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cechtower/cohomology.hpp"

namespace cechtower {

struct LinkStack {
    std::vector<AbelianGroup> links;  // L_1, ..., L_n

    bool operator==(const LinkStack& o) const { return links == o.links; }
};

class TowerCocycle {
public:
    TowerCocycle(ComplexPtr complex, LinkStack stack, std::vector<Cochain> cocycles)
        : complex_(std::move(complex)), stack_(std::move(stack)), cocycles_(std::move(cocycles)) {
        if (stack_.links.empty()) throw std::invalid_argument("tower needs a non-empty link stack");
        if (cocycles_.size() != stack_.links.size())
            throw std::invalid_argument("tower needs one cocycle per link");
    }

    const ComplexPtr& complex() const { return complex_; }
    const LinkStack& stack() const { return stack_; }
    const std::vector<Cochain>& cocycles() const { return cocycles_; }
    std::size_t height() const { return stack_.links.size(); }
    const Cochain& top() const { return cocycles_.back(); }
    const AbelianGroup& top_link() const { return stack_.links.back(); }

private:
    ComplexPtr complex_;
    LinkStack stack_;
    std::vector<Cochain> cocycles_;
};

struct LevelCheck {
    std::size_t level = 0;  // 1-based: level j holds c_{j+1} with link L_j
    bool degree_ok = false;
    bool group_ok = false;
    bool cocycle_ok = false;
    bool pass() const { return degree_ok && group_ok && cocycle_ok; }
};

struct TowerReport {
    std::vector<LevelCheck> levels;
    bool pass = false;
};

// Per-level verdict: c_{j+1} must have degree j+1, coefficients L_j, and
// vanish under the coboundary.
inline TowerReport validate_tower(const TowerCocycle& t) {
    TowerReport r;
    r.pass = true;
    for (std::size_t i = 0; i < t.height(); ++i) {
        LevelCheck lc;
        lc.level = i + 1;
        const Cochain& c = t.cocycles()[i];
        lc.degree_ok = c.degree() == static_cast<int>(i) + 2;
        lc.group_ok = c.group() == t.stack().links[i];
        lc.cocycle_ok = lc.degree_ok && is_cocycle(c);
        if (!lc.pass()) r.pass = false;
        r.levels.push_back(lc);
    }
    return r;
}

struct TowerClass {
    std::vector<Int> coords;
    AbelianGroup group;  // invariants of H^{n+1}(X, L_n)

    bool is_zero() const {
        for (const Int& c : coords)
            if (c != 0) return false;
        return true;
    }
    bool operator==(const TowerClass& o) const { return coords == o.coords && group == o.group; }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
        os << "] in " << group.to_string();
        return os.str();
    }
};

// The class [c_{n+1}] in H^{n+1}(X, L_n).
inline TowerClass classify(const TowerCocycle& t) {
    TowerReport r = validate_tower(t);
    if (!r.pass) {
        std::ostringstream os;
        os << "invalid tower: level";
        for (const LevelCheck& lc : r.levels)
            if (!lc.pass()) os << " " << lc.level;
        throw std::invalid_argument(os.str());
    }
    CohomologyGroup h =
        cohomology(t.complex(), t.top_link(), static_cast<int>(t.height()) + 1);
    return TowerClass{h.reduce(t.top()), h.invariants()};
}

inline bool is_trivial(const TowerCocycle& t) { return classify(t).is_zero(); }

inline bool equivalent(const TowerCocycle& t1, const TowerCocycle& t2) {
    if (!(*t1.complex() == *t2.complex()))
        throw std::invalid_argument("equivalent: towers live on different complexes");
    if (!(t1.stack() == t2.stack()))
        throw std::invalid_argument("equivalent: towers have different link stacks");
    return classify(t1).coords == classify(t2).coords;
}

// Height-1 tower whose classifying class in H^2(X, L_1) is x.
inline TowerCocycle base_tower(const ComplexPtr& complex, const AbelianGroup& link,
                               const std::vector<Int>& x) {
    CohomologyGroup h = cohomology(complex, link, 2);
    if (h.invariants().is_zero()) {
        for (const Int& c : x)
            if (c != 0) throw std::invalid_argument("H^2 is zero but a nonzero class was requested");
    }
    Cochain rep = h.representative(h.invariants().is_zero() ? std::vector<Int>{} : x);
    return TowerCocycle(complex, LinkStack{{link}}, {rep});
}

// Appends the representative of class x in H^{n+2}(X, L_next); the lower
// cocycles are untouched and the new top classifies to x.
inline TowerCocycle extend_from_class(const TowerCocycle& t, const AbelianGroup& link_next,
                                      const std::vector<Int>& x) {
    TowerReport r = validate_tower(t);
    if (!r.pass) throw std::invalid_argument("extend_from_class: tower invalid");
    const int degree = static_cast<int>(t.height()) + 2;
    CohomologyGroup h = cohomology(t.complex(), link_next, degree);
    if (h.invariants().is_zero()) {
        for (const Int& c : x)
            if (c != 0)
                throw std::invalid_argument("target cohomology is zero but class is nonzero");
    }
    Cochain rep = h.representative(h.invariants().is_zero() ? std::vector<Int>{} : x);
    LinkStack stack = t.stack();
    stack.links.push_back(link_next);
    std::vector<Cochain> cocycles = t.cocycles();
    cocycles.push_back(rep);
    return TowerCocycle(t.complex(), std::move(stack), std::move(cocycles));
}

// Brute-force enumeration of H^k(X, G) for finite G: every degree-k cochain
// is generated, cocycles are kept, and the first cocycle (in lexicographic
// coordinate order) of each class becomes its representative. Serves as the
// oracle for the classification round-trip.
inline std::vector<Cochain> enumerate_classes(const ComplexPtr& x, const AbelianGroup& g, int k) {
    if (!g.is_finite())
        throw std::invalid_argument("enumerate_classes requires a finite coefficient group");
    if (k < 0) throw std::invalid_argument("enumerate_classes: degree must be >= 0");

    const std::size_t nk = x->count(k);
    const std::size_t ng = g.coord_count();
    auto space_size = [&](std::size_t simplices) {
        Int total = 1;
        for (std::size_t s = 0; s < simplices; ++s)
            for (const Int& d : g.torsion()) total *= d;
        return total;
    };
    const Int budget = Int(1) << 24;
    if (space_size(nk) > budget || (k > 0 && space_size(x->count(k - 1)) > budget))
        throw std::invalid_argument("enumerate_classes: cochain space too large to enumerate");

    // moduli of the full coordinate vector of C^k
    auto enumerate_vectors = [&](std::size_t simplices, auto&& visit) {
        std::vector<Int> moduli;
        for (std::size_t s = 0; s < simplices; ++s)
            for (const Int& d : g.torsion()) moduli.push_back(d);
        std::vector<Int> v(moduli.size(), Int(0));
        for (;;) {
            visit(v);
            std::size_t i = 0;
            while (i < v.size()) {
                v[i] += 1;
                if (v[i] < moduli[i]) break;
                v[i] = 0;
                ++i;
            }
            if (i == v.size()) break;
            if (v.empty()) break;
        }
    };

    // all coboundary values, as normalized coordinate vectors of C^k
    std::set<std::vector<Int>> coboundaries;
    if (k == 0 || x->count(k - 1) == 0) {
        coboundaries.insert(std::vector<Int>(nk * ng));
    } else {
        enumerate_vectors(x->count(k - 1), [&](const std::vector<Int>& bv) {
            Cochain b = cochain_from_vector(x, g, k - 1, bv);
            coboundaries.insert(to_vector(coboundary(b)));
        });
    }

    std::vector<Cochain> reps;
    std::vector<std::vector<Int>> rep_vectors;
    enumerate_vectors(nk, [&](const std::vector<Int>& cv) {
        Cochain c = cochain_from_vector(x, g, k, cv);
        if (!is_cocycle(c)) return;
        for (const auto& rv : rep_vectors) {
            std::vector<Int> diff(cv.size());
            for (std::size_t i = 0; i < cv.size(); ++i) diff[i] = cv[i] - rv[i];
            Cochain d = cochain_from_vector(x, g, k, diff);
            if (coboundaries.count(to_vector(d))) return;
        }
        rep_vectors.push_back(cv);
        reps.push_back(std::move(c));
    });
    return reps;
}

}  // namespace cechtower
