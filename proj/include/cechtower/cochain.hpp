// Degree-k alternating cochains with coefficients in a finitely generated
// abelian group, the Čech coboundary, and the cochain <-> integer-vector
// bridge used by the linear algebra.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "cechtower/abelian.hpp"
#include "cechtower/complex.hpp"

namespace cechtower {

// Values are stored on sorted tuples only; evaluation on arbitrary tuples
// applies the sign of the sorting permutation, and tuples with a repeated
// index evaluate to zero.
class Cochain {
public:
    Cochain(ComplexPtr complex, AbelianGroup group, int degree)
        : complex_(std::move(complex)), group_(std::move(group)), degree_(degree) {
        if (!complex_) throw std::invalid_argument("cochain requires a complex");
        if (degree_ < 0) throw std::invalid_argument("cochain degree must be >= 0");
    }

    const ComplexPtr& complex() const { return complex_; }
    const AbelianGroup& group() const { return group_; }
    int degree() const { return degree_; }

    std::vector<Int> value(const Simplex& sorted) const {
        auto it = values_.find(sorted);
        if (it == values_.end()) return std::vector<Int>(group_.coord_count());
        return it->second;
    }

    void set_value(const Simplex& sorted, std::vector<Int> coords) {
        if (static_cast<int>(sorted.size()) != degree_ + 1)
            throw std::invalid_argument("simplex size does not match cochain degree");
        if (!complex_->contains(sorted))
            throw std::invalid_argument("simplex not in complex: " + Complex::tuple_string(sorted));
        coords = group_.normalize(std::move(coords));
        bool zero = true;
        for (const Int& c : coords)
            if (c != 0) zero = false;
        if (zero)
            values_.erase(sorted);
        else
            values_[sorted] = std::move(coords);
    }

    // Alternating evaluation on an arbitrary index tuple.
    std::vector<Int> evaluate(const Simplex& tuple) const {
        if (static_cast<int>(tuple.size()) != degree_ + 1)
            throw std::invalid_argument("tuple size does not match cochain degree");
        Simplex s = tuple;
        int sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i)  // insertion sort, counting swaps
            for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
                std::swap(s[j - 1], s[j]);
                sign = -sign;
            }
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] == s[i + 1]) return std::vector<Int>(group_.coord_count());
        std::vector<Int> v = value(s);
        if (sign < 0)
            for (Int& x : v) x = -x;
        return group_.normalize(std::move(v));
    }

    bool is_zero() const { return values_.empty(); }

    Cochain operator+(const Cochain& o) const {
        require_compatible(o);
        Cochain r = *this;
        for (const auto& [s, v] : o.values_) {
            std::vector<Int> w = r.value(s);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
            r.set_value(s, std::move(w));
        }
        return r;
    }

    Cochain operator-(const Cochain& o) const {
        require_compatible(o);
        Cochain r = *this;
        for (const auto& [s, v] : o.values_) {
            std::vector<Int> w = r.value(s);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= v[i];
            r.set_value(s, std::move(w));
        }
        return r;
    }

    bool operator==(const Cochain& o) const {
        return degree_ == o.degree_ && group_ == o.group_ && *complex_ == *o.complex_ &&
               values_ == o.values_;
    }

    const std::map<Simplex, std::vector<Int>>& values() const { return values_; }

private:
    void require_compatible(const Cochain& o) const {
        if (degree_ != o.degree_ || !(group_ == o.group_) || !(*complex_ == *o.complex_))
            throw std::invalid_argument("cochain mismatch (complex, group or degree)");
    }

    ComplexPtr complex_;
    AbelianGroup group_;
    int degree_;
    std::map<Simplex, std::vector<Int>> values_;
};

// d(c)(v0..v_{k+1}) = sum_j (-1)^j c(v0.. v̂_j ..v_{k+1}); faces of a sorted
// tuple are sorted, so values are looked up directly.
inline Cochain coboundary(const Cochain& c) {
    const Complex& x = *c.complex();
    const int k = c.degree();
    Cochain d(c.complex(), c.group(), k + 1);
    for (const Simplex& tau : x.simplices(k + 1)) {
        std::vector<Int> acc(c.group().coord_count());
        for (std::size_t j = 0; j < tau.size(); ++j) {
            Simplex face;
            face.reserve(tau.size() - 1);
            for (std::size_t i = 0; i < tau.size(); ++i)
                if (i != j) face.push_back(tau[i]);
            std::vector<Int> v = c.value(face);
            const int sign = (j % 2 == 0) ? 1 : -1;
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += sign * v[i];
        }
        d.set_value(tau, std::move(acc));
    }
    return d;
}

inline bool is_cocycle(const Cochain& c) { return coboundary(c).is_zero(); }

// Coordinate layout of C^k: simplex-major, group coordinates within.
inline std::size_t cochain_dim(const Complex& x, const AbelianGroup& g, int k) {
    return x.count(k) * g.coord_count();
}

inline std::vector<Int> to_vector(const Cochain& c) {
    const Complex& x = *c.complex();
    const std::size_t ng = c.group().coord_count();
    const auto& level = x.simplices(c.degree());
    std::vector<Int> out(level.size() * ng);
    for (std::size_t s = 0; s < level.size(); ++s) {
        std::vector<Int> v = c.value(level[s]);
        for (std::size_t i = 0; i < ng; ++i) out[s * ng + i] = v[i];
    }
    return out;
}

inline Cochain cochain_from_vector(const ComplexPtr& x, const AbelianGroup& g, int k,
                                   const std::vector<Int>& coords) {
    const std::size_t ng = g.coord_count();
    const auto& level = x->simplices(k);
    if (coords.size() != level.size() * ng)
        throw std::invalid_argument("cochain vector length mismatch");
    Cochain c(x, g, k);
    for (std::size_t s = 0; s < level.size(); ++s) {
        std::vector<Int> v(coords.begin() + static_cast<long>(s * ng),
                           coords.begin() + static_cast<long>((s + 1) * ng));
        c.set_value(level[s], std::move(v));
    }
    return c;
}

// Signed incidence matrix of the coboundary from degree k to k+1
// (entries over simplices, before tensoring with group coordinates).
inline IntMat incidence_matrix(const Complex& x, int k) {
    const auto& rows = x.simplices(k + 1);
    const auto& cols = x.simplices(k);
    IntMat m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Simplex& tau = rows[r];
        for (std::size_t j = 0; j < tau.size(); ++j) {
            Simplex face;
            face.reserve(tau.size() - 1);
            for (std::size_t i = 0; i < tau.size(); ++i)
                if (i != j) face.push_back(tau[i]);
            m(r, x.index_of(face)) = (j % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

// incidence ⊗ identity on the group coordinates
inline IntMat coboundary_matrix(const Complex& x, const AbelianGroup& g, int k) {
    IntMat inc = incidence_matrix(x, k);
    const std::size_t ng = g.coord_count();
    IntMat m(inc.rows() * ng, inc.cols() * ng);
    for (std::size_t r = 0; r < inc.rows(); ++r)
        for (std::size_t c = 0; c < inc.cols(); ++c)
            if (inc(r, c) != 0)
                for (std::size_t i = 0; i < ng; ++i) m(r * ng + i, c * ng + i) = inc(r, c);
    return m;
}

// Columns d_i e_{s,i} spanning the per-simplex torsion relations of C^k.
inline IntMat relation_matrix(const Complex& x, const AbelianGroup& g, int k) {
    const std::size_t ns = x.count(k);
    const std::size_t ng = g.coord_count();
    const std::size_t nt = g.torsion().size();
    IntMat m(ns * ng, ns * nt);
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t i = 0; i < nt; ++i)
            m(s * ng + g.free_rank() + i, s * nt + i) = g.torsion()[i];
    return m;
}

}  // namespace cechtower
