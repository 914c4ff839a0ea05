// Finitely generated abelian groups in invariant-factor form, their
// elements and homomorphisms, and subquotient presentations built on
// Smith normal form.
#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cechtower/matrix.hpp"

namespace cechtower {

// Z^r ⊕ Z/d1 ⊕ ... ⊕ Z/dt with d1 | d2 | ... | dt, every di >= 2.
// Construction canonicalizes arbitrary torsion lists into the chain form.
class AbelianGroup {
public:
    AbelianGroup() = default;

    AbelianGroup(std::size_t free_rank, std::vector<Int> torsion) : free_rank_(free_rank) {
        for (const Int& d : torsion)
            if (d < 1) throw std::invalid_argument("torsion coefficient must be >= 1");
        bool chain = true;
        for (std::size_t i = 0; i + 1 < torsion.size(); ++i)
            if (torsion[i + 1] % torsion[i] != 0) chain = false;
        if (!chain) {
            IntMat diag(torsion.size(), torsion.size());
            for (std::size_t i = 0; i < torsion.size(); ++i) diag(i, i) = torsion[i];
            SmithForm s = smith_normal_form(diag);
            torsion = s.diag;
        }
        for (const Int& d : torsion)
            if (d > 1) torsion_.push_back(d);
    }

    static AbelianGroup zero() { return AbelianGroup(); }
    static AbelianGroup free(std::size_t r) { return AbelianGroup(r, {}); }
    static AbelianGroup cyclic(const Int& m) { return AbelianGroup(0, {m}); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    std::size_t coord_count() const { return free_rank_ + torsion_.size(); }
    bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    std::optional<Int> order() const {
        if (!is_finite()) return std::nullopt;
        Int n = 1;
        for (const Int& d : torsion_) n *= d;
        return n;
    }

    // Columns generating the relation lattice of the coordinate space:
    // di * e_{free_rank + i} for each torsion factor.
    IntMat relation_columns() const {
        IntMat r(coord_count(), torsion_.size());
        for (std::size_t i = 0; i < torsion_.size(); ++i) r(free_rank_ + i, i) = torsion_[i];
        return r;
    }

    std::vector<Int> normalize(std::vector<Int> coords) const {
        if (coords.size() != coord_count())
            throw std::invalid_argument("coordinate vector length mismatch");
        for (std::size_t i = 0; i < torsion_.size(); ++i)
            coords[free_rank_ + i] = mod_floor(coords[free_rank_ + i], torsion_[i]);
        return coords;
    }

    bool operator==(const AbelianGroup& o) const {
        return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
    }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank_ > 0) {
            os << "Z";
            if (free_rank_ > 1) os << "^" << free_rank_;
            first = false;
        }
        for (const Int& d : torsion_) {
            if (!first) os << " + ";
            os << "Z/" << d;
            first = false;
        }
        return os.str();
    }

private:
    std::size_t free_rank_ = 0;
    std::vector<Int> torsion_;
};

class GroupElement {
public:
    GroupElement(AbelianGroup owner, std::vector<Int> coords)
        : owner_(std::move(owner)), coords_(owner_.normalize(std::move(coords))) {}

    static GroupElement zero(const AbelianGroup& g) {
        return GroupElement(g, std::vector<Int>(g.coord_count()));
    }

    const AbelianGroup& owner() const { return owner_; }
    const std::vector<Int>& coords() const { return coords_; }
    bool is_zero() const {
        for (const Int& c : coords_)
            if (c != 0) return false;
        return true;
    }

    GroupElement operator+(const GroupElement& o) const {
        require_same_owner(o);
        std::vector<Int> c = coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
        return GroupElement(owner_, std::move(c));
    }
    GroupElement operator-() const {
        std::vector<Int> c = coords_;
        for (Int& x : c) x = -x;
        return GroupElement(owner_, std::move(c));
    }
    GroupElement operator-(const GroupElement& o) const { return *this + (-o); }
    GroupElement operator*(const Int& k) const {
        std::vector<Int> c = coords_;
        for (Int& x : c) x *= k;
        return GroupElement(owner_, std::move(c));
    }
    bool operator==(const GroupElement& o) const {
        return owner_ == o.owner_ && coords_ == o.coords_;
    }

private:
    void require_same_owner(const GroupElement& o) const {
        if (!(owner_ == o.owner_)) throw std::invalid_argument("group element owner mismatch");
    }
    AbelianGroup owner_;
    std::vector<Int> coords_;
};

// Integer matrix acting on coordinates; construction verifies the matrix
// carries the source relations into the target relations.
class GroupHom {
public:
    GroupHom(AbelianGroup source, AbelianGroup target, IntMat matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
        if (matrix_.rows() != target_.coord_count() || matrix_.cols() != source_.coord_count())
            throw std::invalid_argument("hom matrix shape mismatch");
        const std::size_t rs = source_.free_rank();
        for (std::size_t j = 0; j < source_.torsion().size(); ++j) {
            const Int& dj = source_.torsion()[j];
            for (std::size_t i = 0; i < target_.free_rank(); ++i)
                if (matrix_(i, rs + j) != 0)
                    throw std::invalid_argument("hom not well-defined: torsion maps to free part");
            for (std::size_t i = 0; i < target_.torsion().size(); ++i) {
                Int v = dj * matrix_(target_.free_rank() + i, rs + j);
                if (v % target_.torsion()[i] != 0)
                    throw std::invalid_argument("hom not well-defined on torsion relations");
            }
        }
    }

    static GroupHom zero(const AbelianGroup& s, const AbelianGroup& t) {
        return GroupHom(s, t, IntMat(t.coord_count(), s.coord_count()));
    }
    static GroupHom identity(const AbelianGroup& g) {
        return GroupHom(g, g, IntMat::identity(g.coord_count()));
    }

    const AbelianGroup& source() const { return source_; }
    const AbelianGroup& target() const { return target_; }
    const IntMat& matrix() const { return matrix_; }

    GroupElement apply(const GroupElement& x) const {
        if (!(x.owner() == source_)) throw std::invalid_argument("element not in hom source");
        return GroupElement(target_, matrix_ * x.coords());
    }
    std::vector<Int> apply_coords(const std::vector<Int>& c) const {
        return target_.normalize(matrix_ * c);
    }

private:
    AbelianGroup source_, target_;
    IntMat matrix_;
};

// Some x with h(x) = y, if any; deterministic in the inputs.
inline std::optional<GroupElement> solve_in_image(const GroupHom& h, const GroupElement& y) {
    if (!(y.owner() == h.target())) throw std::invalid_argument("solve_in_image: y not in target");
    IntMat aug = hcat(h.matrix(), h.target().relation_columns());
    auto w = solve_integer(aug, y.coords());
    if (!w) return std::nullopt;
    std::vector<Int> x(w->begin(), w->begin() + h.source().coord_count());
    return GroupElement(h.source(), std::move(x));
}

// Invariants of ambient / <subgen>.
inline AbelianGroup quotient_invariants(const AbelianGroup& ambient,
                                        const std::vector<GroupElement>& subgen) {
    const std::size_t n = ambient.coord_count();
    IntMat gens(n, 0);
    for (const GroupElement& g : subgen) {
        if (!(g.owner() == ambient))
            throw std::invalid_argument("quotient_invariants: generator not in ambient");
        gens.append_column(g.coords());
    }
    IntMat all = hcat(gens, ambient.relation_columns());
    SmithForm s = smith_normal_form(all);
    std::vector<Int> torsion;
    for (const Int& d : s.diag)
        if (d > 1) torsion.push_back(d);
    return AbelianGroup(n - s.rank, torsion);
}

// Presentation of span(numerator_basis) / span(denominator_gens) inside Z^n.
// numerator_basis must have independent columns and contain the denominator;
// reduce() maps any vector in the numerator span to canonical coordinates
// (free coordinates first, then torsion in divisor order), representative()
// returns a numerator vector mapping to the j-th unit coordinate.
class Subquotient {
public:
    Subquotient() = default;

    Subquotient(IntMat numerator_basis, const IntMat& denominator_gens)
        : basis_(std::move(numerator_basis)), basis_snf_(smith_normal_form(basis_)) {
        const std::size_t kappa = basis_.cols();
        if (basis_snf_.rank != kappa)
            throw std::logic_error("subquotient: numerator columns are dependent");
        IntMat alpha(kappa, denominator_gens.cols());
        for (std::size_t j = 0; j < denominator_gens.cols(); ++j) {
            auto y = smith_solve(basis_snf_, denominator_gens.column(j));
            if (!y) throw std::logic_error("subquotient: denominator not inside numerator span");
            for (std::size_t i = 0; i < kappa; ++i) alpha(i, j) = (*y)[i];
        }
        SmithForm sa = smith_normal_form(alpha);
        uprime_ = sa.u;
        uprime_inv_ = sa.u_inv;
        diag_.assign(kappa, Int(0));
        for (std::size_t i = 0; i < sa.rank; ++i) diag_[i] = sa.diag[i];
        for (std::size_t i = sa.rank; i < kappa; ++i) free_rows_.push_back(i);
        for (std::size_t i = 0; i < sa.rank; ++i)
            if (diag_[i] > 1) torsion_rows_.push_back(i);
        std::vector<Int> tors;
        for (std::size_t i : torsion_rows_) tors.push_back(diag_[i]);
        invariants_ = AbelianGroup(free_rows_.size(), tors);
    }

    const AbelianGroup& invariants() const { return invariants_; }
    std::size_t ambient_dim() const { return basis_.rows(); }

    bool contains(const std::vector<Int>& x) const { return in_span(basis_snf_, x); }

    std::vector<Int> reduce(const std::vector<Int>& x) const {
        auto y = smith_solve(basis_snf_, x);
        if (!y) throw std::invalid_argument("subquotient reduce: vector outside numerator span");
        std::vector<Int> w = uprime_ * *y;
        std::vector<Int> out;
        out.reserve(free_rows_.size() + torsion_rows_.size());
        for (std::size_t i : free_rows_) out.push_back(w[i]);
        for (std::size_t i : torsion_rows_) out.push_back(mod_floor(w[i], diag_[i]));
        return out;
    }

    std::vector<Int> representative(std::size_t j) const {
        const std::size_t nf = free_rows_.size();
        std::size_t row = j < nf ? free_rows_[j] : torsion_rows_.at(j - nf);
        std::vector<Int> y = uprime_inv_.column(row);
        return basis_ * y;
    }

    // Vector representing the class with the given canonical coordinates.
    std::vector<Int> vector_from_coords(const std::vector<Int>& coords) const {
        if (coords.size() != invariants_.coord_count())
            throw std::invalid_argument("class coordinate length mismatch");
        std::vector<Int> acc(ambient_dim());
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (coords[j] == 0) continue;
            std::vector<Int> r = representative(j);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += coords[j] * r[i];
        }
        return acc;
    }

private:
    IntMat basis_;
    SmithForm basis_snf_;
    IntMat uprime_, uprime_inv_;
    std::vector<Int> diag_;
    std::vector<std::size_t> free_rows_, torsion_rows_;
    AbelianGroup invariants_;
};

// U m V = D in the conventional (U, D, V) order.
inline SmithForm smith(const IntMat& m) { return smith_normal_form(m); }

}  // namespace cechtower
