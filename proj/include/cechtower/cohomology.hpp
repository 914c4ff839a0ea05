// Čech cohomology H^k(X, G): canonical invariants, representative basis and
// class reduction, plus the classifying 2-cocycle of transition data and the
// explicit trivialization of cocycles on cones.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cechtower/cochain.hpp"

namespace cechtower {

namespace detail {

// Basis (independent columns) of the lattice of integer lifts of cocycles:
// {x : d x lies in the torsion relation span of C^{k+1}}.
inline IntMat cocycle_lattice_basis(const Complex& x, const AbelianGroup& g, int k) {
    const std::size_t n = cochain_dim(x, g, k);
    if (x.count(k + 1) == 0) return IntMat::identity(n);
    IntMat a = hcat(coboundary_matrix(x, g, k), relation_matrix(x, g, k + 1));
    IntMat ker = kernel_basis(a);
    IntMat out(n, ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j)
        for (std::size_t i = 0; i < n; ++i) out(i, j) = ker(i, j);
    return out;
}

// Generators of the lattice of lifts of coboundaries: the columns of
// d_{k-1} together with the degree-k torsion relations.
inline IntMat coboundary_lattice_gens(const Complex& x, const AbelianGroup& g, int k) {
    IntMat rel = relation_matrix(x, g, k);
    if (k == 0 || x.count(k - 1) == 0) return rel;
    return hcat(coboundary_matrix(x, g, k - 1), rel);
}

}  // namespace detail

class CohomologyGroup {
public:
    CohomologyGroup(ComplexPtr complex, AbelianGroup group, int degree)
        : complex_(std::move(complex)), group_(std::move(group)), degree_(degree) {
        if (degree_ < 0) throw std::invalid_argument("cohomology degree must be >= 0");
        const Complex& x = *complex_;
        if (cochain_dim(x, group_, degree_) > 0)
            sq_ = Subquotient(detail::cocycle_lattice_basis(x, group_, degree_),
                              detail::coboundary_lattice_gens(x, group_, degree_));
    }

    const AbelianGroup& invariants() const { return sq_.invariants(); }
    const ComplexPtr& complex() const { return complex_; }
    const AbelianGroup& group() const { return group_; }
    int degree() const { return degree_; }

    // Coordinates of the class of a cocycle; zero exactly on coboundaries.
    std::vector<Int> reduce(const Cochain& c) const {
        if (c.degree() != degree_ || !(c.group() == group_))
            throw std::invalid_argument("reduce: cochain degree or group mismatch");
        if (cochain_dim(*complex_, group_, degree_) == 0) return {};
        auto coords = to_vector(c);
        if (!sq_.contains(coords))
            throw std::invalid_argument("reduce: cochain is not a cocycle");
        return sq_.reduce(coords);
    }

    std::vector<Cochain> basis() const {
        std::vector<Cochain> out;
        for (std::size_t j = 0; j < invariants().coord_count(); ++j)
            out.push_back(cochain_from_vector(complex_, group_, degree_, sq_.representative(j)));
        return out;
    }

    // Representative cocycle with the given class coordinates.
    Cochain representative(const std::vector<Int>& coords) const {
        if (coords.size() != invariants().coord_count())
            throw std::invalid_argument("class coordinate length mismatch");
        if (cochain_dim(*complex_, group_, degree_) == 0)
            return Cochain(complex_, group_, degree_);
        return cochain_from_vector(complex_, group_, degree_, sq_.vector_from_coords(coords));
    }

private:
    ComplexPtr complex_;
    AbelianGroup group_;
    int degree_;
    Subquotient sq_;
};

inline CohomologyGroup cohomology(ComplexPtr x, AbelianGroup g, int degree) {
    return CohomologyGroup(std::move(x), std::move(g), degree);
}

// Witness b with d(b) = c, when c is a coboundary. In degree 0 the only
// coboundary is the zero cochain and the returned witness is the degree-0
// zero cochain (there is no degree -1).
inline std::optional<Cochain> is_coboundary(const Cochain& c) {
    const Complex& x = *c.complex();
    const AbelianGroup& g = c.group();
    const int k = c.degree();
    if (k == 0) {
        if (c.is_zero()) return Cochain(c.complex(), g, 0);
        return std::nullopt;
    }
    std::vector<Int> target = to_vector(c);
    if (target.empty()) return Cochain(c.complex(), g, k - 1);
    IntMat a = detail::coboundary_lattice_gens(x, g, k);
    auto w = solve_integer(a, target);
    if (!w) return std::nullopt;
    const std::size_t nb = cochain_dim(x, g, k - 1);
    std::vector<Int> b(w->begin(), w->begin() + nb);
    return cochain_from_vector(c.complex(), g, k - 1, b);
}

// Transition morphisms u_{ij} on the edges of the nerve; alternation
// u_{ji} = -u_{ij} is automatic from the storage convention.
struct TransitionData {
    TransitionData(ComplexPtr complex_, AbelianGroup group_, Cochain u_)
        : complex(std::move(complex_)), group(std::move(group_)), u(std::move(u_)) {
        if (u.degree() != 1) throw std::invalid_argument("transition data must be a 1-cochain");
        if (!(u.group() == group) || !(*u.complex() == *complex))
            throw std::invalid_argument("transition data mismatch");
    }
    ComplexPtr complex;
    AbelianGroup group;
    Cochain u;
};

// c_{ijk} = u_{jk} - u_{ik} + u_{ij}: the classifying 2-cocycle.
inline Cochain giraud_cocycle(const TransitionData& t) { return coboundary(t.u); }

// For a cocycle c of degree k >= 1 on a cone, returns h of degree k-1 with
// d(h) = c via h(s) = c(apex, s); exactness follows from the contraction
// identity d∘h + h∘d = id in positive degrees.
inline Cochain cone_contraction(const Cochain& c, int apex) {
    const Complex& x = *c.complex();
    if (c.degree() < 1) throw std::invalid_argument("cone_contraction needs degree >= 1");
    if (auto missing = x.cone_obstruction(apex))
        throw std::invalid_argument("complex is not a cone over apex " + std::to_string(apex) +
                                    ": missing simplex " + Complex::tuple_string(*missing) +
                                    " + apex");
    if (!is_cocycle(c)) throw std::invalid_argument("cone_contraction requires a cocycle");
    const int k = c.degree();
    Cochain h(c.complex(), c.group(), k - 1);
    for (const Simplex& s : x.simplices(k - 1)) {
        Simplex ext;
        ext.reserve(s.size() + 1);
        ext.push_back(apex);
        ext.insert(ext.end(), s.begin(), s.end());
        h.set_value(s, c.evaluate(ext));
    }
    return h;
}

}  // namespace cechtower
