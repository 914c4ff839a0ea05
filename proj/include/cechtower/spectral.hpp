// The filtered total complex K_p = C^*(X, ⊕_{q>=p} L_q): Z/B/E terms of the
// associated spectral sequence computed from their literal definitions, the
// limit terms, and the two-column long exact sequence.
#pragma once

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cechtower/cohomology.hpp"

namespace cechtower {

// Coordinate layout of the total complex: per simplex, the coordinate blocks
// of L_0, ..., L_s concatenated in order.
class FilteredComplex {
public:
    FilteredComplex(ComplexPtr complex, std::vector<AbelianGroup> stack)
        : complex_(std::move(complex)), stack_(std::move(stack)) {
        if (stack_.empty()) throw std::invalid_argument("filtered complex needs a non-empty stack");
        offsets_.resize(stack_.size() + 1, 0);
        for (std::size_t q = 0; q < stack_.size(); ++q)
            offsets_[q + 1] = offsets_[q] + stack_[q].coord_count();
    }

    const ComplexPtr& complex() const { return complex_; }
    const std::vector<AbelianGroup>& stack() const { return stack_; }
    int top_filtration() const { return static_cast<int>(stack_.size()); }  // K_{s+1} = 0

    std::size_t block_offset(std::size_t q) const { return offsets_[q]; }
    std::size_t block_width(std::size_t q) const { return stack_[q].coord_count(); }
    std::size_t total_width() const { return offsets_.back(); }
    std::size_t dim(int k) const { return complex_->count(k) * total_width(); }

    // Unit-vector generators of K_p ∩ C^k inside the full coordinate space.
    IntMat filtration_generators(int p, int k) const {
        const std::size_t ns = complex_->count(k);
        const std::size_t w = total_width();
        std::vector<std::vector<Int>> cols;
        const int s = static_cast<int>(stack_.size());
        for (std::size_t sx = 0; sx < ns; ++sx)
            for (int q = std::max(p, 0); q < s; ++q)
                for (std::size_t j = 0; j < block_width(static_cast<std::size_t>(q)); ++j) {
                    std::vector<Int> e(ns * w);
                    e[sx * w + block_offset(static_cast<std::size_t>(q)) + j] = 1;
                    cols.push_back(std::move(e));
                }
        return IntMat::from_columns(ns * w, cols);
    }

    // Torsion relation columns of blocks q >= p, in the full coordinates.
    IntMat relation_columns(int p, int k) const {
        const std::size_t ns = complex_->count(k);
        const std::size_t w = total_width();
        std::vector<std::vector<Int>> cols;
        const int s = static_cast<int>(stack_.size());
        for (std::size_t sx = 0; sx < ns; ++sx)
            for (int q = std::max(p, 0); q < s; ++q) {
                const AbelianGroup& g = stack_[static_cast<std::size_t>(q)];
                for (std::size_t i = 0; i < g.torsion().size(); ++i) {
                    std::vector<Int> e(ns * w);
                    e[sx * w + block_offset(static_cast<std::size_t>(q)) + g.free_rank() + i] =
                        g.torsion()[i];
                    cols.push_back(std::move(e));
                }
            }
        return IntMat::from_columns(ns * w, cols);
    }

    // Componentwise coboundary on total cochains (incidence ⊗ identity).
    IntMat differential(int k) const {
        IntMat inc = incidence_matrix(*complex_, k);
        const std::size_t w = total_width();
        IntMat m(inc.rows() * w, inc.cols() * w);
        for (std::size_t r = 0; r < inc.rows(); ++r)
            for (std::size_t c = 0; c < inc.cols(); ++c)
                if (inc(r, c) != 0)
                    for (std::size_t i = 0; i < w; ++i) m(r * w + i, c * w + i) = inc(r, c);
        return m;
    }

    std::vector<Int> embed_block(const std::vector<Int>& v, std::size_t q, int k) const {
        const std::size_t ns = complex_->count(k);
        const std::size_t w = total_width();
        const std::size_t bw = block_width(q);
        if (v.size() != ns * bw) throw std::invalid_argument("embed_block: size mismatch");
        std::vector<Int> out(ns * w);
        for (std::size_t s = 0; s < ns; ++s)
            for (std::size_t j = 0; j < bw; ++j) out[s * w + block_offset(q) + j] = v[s * bw + j];
        return out;
    }

    std::vector<Int> project_block(const std::vector<Int>& v, std::size_t q, int k) const {
        const std::size_t ns = complex_->count(k);
        const std::size_t w = total_width();
        const std::size_t bw = block_width(q);
        if (v.size() != ns * w) throw std::invalid_argument("project_block: size mismatch");
        std::vector<Int> out(ns * bw);
        for (std::size_t s = 0; s < ns; ++s)
            for (std::size_t j = 0; j < bw; ++j) out[s * bw + j] = v[s * w + block_offset(q) + j];
        return out;
    }

    // Unit-column inclusion of block q at degree k into the full coordinates.
    IntMat block_injection(std::size_t q, int k) const {
        const std::size_t ns = complex_->count(k);
        const std::size_t w = total_width();
        const std::size_t bw = block_width(q);
        IntMat inj(ns * w, ns * bw);
        for (std::size_t s = 0; s < ns; ++s)
            for (std::size_t j = 0; j < bw; ++j) inj(s * w + block_offset(q) + j, s * bw + j) = 1;
        return inj;
    }

private:
    ComplexPtr complex_;
    std::vector<AbelianGroup> stack_;
    std::vector<std::size_t> offsets_;
};

inline FilteredComplex build_filtered(ComplexPtr x, std::vector<AbelianGroup> stack) {
    return FilteredComplex(std::move(x), std::move(stack));
}

namespace detail {

// Row selection for the coordinates of blocks q in [0, hi) at degree k,
// together with the torsion modulus of each selected coordinate (0 if free).
struct BlockSelection {
    IntMat selector;
    std::vector<Int> moduli;
};

inline BlockSelection block_row_selector(const FilteredComplex& fc, int hi, int k) {
    const std::size_t ns = fc.complex()->count(k);
    const std::size_t w = fc.total_width();
    std::vector<std::size_t> picked;
    std::vector<Int> moduli;
    const int s = static_cast<int>(fc.stack().size());
    for (std::size_t sx = 0; sx < ns; ++sx)
        for (int q = 0; q < std::min(hi, s); ++q) {
            const AbelianGroup& g = fc.stack()[static_cast<std::size_t>(q)];
            for (std::size_t j = 0; j < g.coord_count(); ++j) {
                picked.push_back(sx * w + fc.block_offset(static_cast<std::size_t>(q)) + j);
                moduli.push_back(j < g.free_rank() ? Int(0) : g.torsion()[j - g.free_rank()]);
            }
        }
    BlockSelection out;
    out.selector = IntMat(picked.size(), ns * w);
    for (std::size_t r = 0; r < picked.size(); ++r) out.selector(r, picked[r]) = 1;
    out.moduli = std::move(moduli);
    return out;
}

// Lattice of {x in K_p ∩ C^k : d(x) ∈ K_{p+stride}}; stride large enough
// makes the condition "x is a cocycle of the total complex".
inline IntMat z_lattice(const FilteredComplex& fc, int p, int stride, int k) {
    IntMat inject = fc.filtration_generators(p, k);
    if (inject.cols() == 0) return IntMat(fc.dim(k), 0);
    if (k >= fc.complex()->dimension()) return inject;  // d lands in the zero space

    BlockSelection sel = block_row_selector(fc, p + stride, k + 1);
    if (sel.selector.rows() == 0) return inject;  // nothing constrained
    IntMat constraint = sel.selector * (fc.differential(k) * inject);
    // torsion relations of the selected coordinates, one independent column each
    std::vector<std::vector<Int>> rel_cols;
    for (std::size_t r = 0; r < sel.moduli.size(); ++r)
        if (sel.moduli[r] != 0) {
            std::vector<Int> e(sel.moduli.size());
            e[r] = sel.moduli[r];
            rel_cols.push_back(std::move(e));
        }
    IntMat rel = IntMat::from_columns(sel.moduli.size(), rel_cols);
    IntMat ker = kernel_basis(hcat(constraint, rel));
    IntMat out(fc.dim(k), ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        std::vector<Int> coeff(inject.cols());
        for (std::size_t i = 0; i < inject.cols(); ++i) coeff[i] = ker(i, j);
        std::vector<Int> x = inject * coeff;
        for (std::size_t i = 0; i < x.size(); ++i) out(i, j) = x[i];
    }
    return out;
}

// d(K_{p-r} ∩ K_p) at total degree k; r = 0 is allowed (page denominators).
inline IntMat b_lattice(const FilteredComplex& fc, int p, int r, int k) {
    if (k < 1 || fc.complex()->count(k - 1) == 0 || fc.complex()->count(k) == 0)
        return IntMat(fc.dim(std::max(k, 0)), 0);
    IntMat lower = lattice_intersection(fc.filtration_generators(p - r, k - 1),
                                        fc.filtration_generators(p, k - 1));
    IntMat d = fc.differential(k - 1);
    IntMat out(fc.dim(k), lower.cols());
    for (std::size_t j = 0; j < lower.cols(); ++j) {
        std::vector<Int> x = d * lower.column(j);
        for (std::size_t i = 0; i < x.size(); ++i) out(i, j) = x[i];
    }
    return out;
}

}  // namespace detail

// Z^p_r at total degree k, from the definition {x ∈ K_p : d(x) ∈ K_{p+r}}.
inline IntMat z_term(const FilteredComplex& fc, int p, int r, int k) {
    if (r < 1) throw std::invalid_argument("z_term requires r >= 1");
    return detail::z_lattice(fc, p, r, k);
}

// B^p_r at total degree k, from the literal definition d(K_{p-r} ∩ K_p).
inline IntMat b_term(const FilteredComplex& fc, int p, int r, int k) {
    if (r < 1) throw std::invalid_argument("b_term requires r >= 1");
    return detail::b_lattice(fc, p, r, k);
}

// Generating sets in every total degree of the complex.
inline std::map<int, IntMat> z_term(const FilteredComplex& fc, int p, int r) {
    std::map<int, IntMat> out;
    for (int k = 0; k <= fc.complex()->dimension(); ++k) out.emplace(k, z_term(fc, p, r, k));
    return out;
}

inline std::map<int, IntMat> b_term(const FilteredComplex& fc, int p, int r) {
    std::map<int, IntMat> out;
    for (int k = 0; k <= fc.complex()->dimension(); ++k) out.emplace(k, b_term(fc, p, r, k));
    return out;
}

struct SpectralTerm {
    int p = 0, q = 0, r = 0;  // r == -1 denotes the limit term
    AbelianGroup invariants;
    IntMat representatives;  // columns: total-cochain witnesses for the invariants
};

namespace detail {

inline SpectralTerm make_term(const FilteredComplex& fc, int p, int q, int r, const IntMat& num,
                              IntMat den) {
    SpectralTerm t;
    t.p = p;
    t.q = q;
    t.r = r;
    const int k = p + q;
    den = hcat(den, fc.relation_columns(p, k));
    Subquotient sq(num, den);
    t.invariants = sq.invariants();
    std::vector<std::vector<Int>> reps;
    for (std::size_t j = 0; j < t.invariants.coord_count(); ++j)
        reps.push_back(sq.representative(j));
    t.representatives = IntMat::from_columns(fc.dim(k), reps);
    return t;
}

}  // namespace detail

// E^{pq}_r = Z^{pq}_r / (B^{pq}_{r-1} + Z^{p+1,q-1}_{r-1}).
inline SpectralTerm e_page(const FilteredComplex& fc, int p, int q, int r) {
    if (r < 1) throw std::invalid_argument("e_page requires r >= 1");
    const int k = p + q;
    if (k < 0 || k > fc.complex()->dimension() || fc.dim(k) == 0) {
        SpectralTerm t;
        t.p = p;
        t.q = q;
        t.r = r;
        return t;
    }
    IntMat num = detail::z_lattice(fc, p, r, k);
    IntMat den =
        hcat(detail::b_lattice(fc, p, r - 1, k), detail::z_lattice(fc, p + 1, r - 1, k));
    return detail::make_term(fc, p, q, r, num, den);
}

// E^p_∞ = Z^p_∞ / (Z^{p+1}_∞ + B^p_∞) per total degree; B^p_∞ is computed
// literally as (boundaries of the total complex) ∩ K_p.
inline std::vector<SpectralTerm> e_infinity(const FilteredComplex& fc, int p) {
    std::vector<SpectralTerm> out;
    const int dim = fc.complex()->dimension();
    const int full = fc.top_filtration() + 1;  // stride covering every block
    for (int k = 0; k <= dim; ++k) {
        if (fc.dim(k) == 0) {
            SpectralTerm t;
            t.p = p;
            t.q = k - p;
            t.r = -1;
            out.push_back(t);
            continue;
        }
        IntMat num = detail::z_lattice(fc, p, full, k);
        IntMat zn = detail::z_lattice(fc, p + 1, full, k);
        IntMat boundaries(fc.dim(k), 0);
        if (k >= 1 && fc.complex()->count(k - 1) > 0) {
            IntMat img = detail::b_lattice(fc, 0, 0, k);  // d of the whole complex
            IntMat img_with_rel = hcat(img, fc.relation_columns(0, k));
            IntMat kp_with_rel =
                hcat(fc.filtration_generators(p, k), fc.relation_columns(0, k));
            boundaries = lattice_intersection(img_with_rel, kp_with_rel);
        }
        out.push_back(detail::make_term(fc, p, k - p, -1, num, hcat(zn, boundaries)));
    }
    return out;
}

// Invariants of the subgroup of (Z^m mod relations) generated by the columns
// of gens: span(gens + relations) / span(relations).
inline AbelianGroup subgroup_invariants(const IntMat& gens, const IntMat& relations) {
    IntMat numerator = lattice_basis(hcat(gens, relations));
    Subquotient sq(numerator, relations);
    return sq.invariants();
}

// Nodes of the two-column long exact sequence of Prop 3.1.
struct FiltrationLesNode {
    std::string label;
    AbelianGroup image;   // invariants of the image of the incoming map
    AbelianGroup kernel;  // invariants of the kernel of the outgoing map
    bool exact = false;
};

struct FiltrationLesReport {
    int n = 0;  // the nonzero upper filtration index
    std::vector<FiltrationLesNode> nodes;
    bool pass = false;
    std::map<int, std::array<AbelianGroup, 3>> groups;  // per degree: H^i(L_n), H^i(L), H^i(L_0)
};

namespace detail {

// Cohomology of the total complex at degree k as a subquotient structure.
inline Subquotient total_cohomology(const FilteredComplex& fc, int k) {
    if (fc.dim(k) == 0) return Subquotient();
    IntMat num = z_lattice(fc, 0, fc.top_filtration() + 1, k);
    IntMat den = hcat(b_lattice(fc, 0, 0, k), fc.relation_columns(0, k));
    return Subquotient(num, den);
}

}  // namespace detail

// The long exact sequence ... -> H^i(X,L_n) -> H^i(X,L) -> H^i(X,L_0)
// -> H^{i+1}(X,L_n) -> ... for a stack whose links vanish away from 0 and n.
// The maps are computed explicitly (inclusion of the top block, projection
// to the bottom block, connecting map from the filtration) and exactness is
// verified at every node inside the degree window.
inline FiltrationLesReport filtration_les(const FilteredComplex& fc, int deg_lo, int deg_hi) {
    const auto& stack = fc.stack();
    const int n = static_cast<int>(stack.size()) - 1;
    for (int p = 1; p < n; ++p)
        if (!stack[static_cast<std::size_t>(p)].is_zero())
            throw std::invalid_argument("filtration_les: intermediate link L_" +
                                        std::to_string(p) + " is nonzero");
    if (deg_lo < 0 || deg_hi < deg_lo) throw std::invalid_argument("bad degree window");

    const ComplexPtr& x = fc.complex();
    const AbelianGroup& l0 = stack.front();
    const AbelianGroup& ln = stack.back();

    FiltrationLesReport report;
    report.n = n;
    report.pass = true;

    std::map<int, CohomologyGroup> h_top, h_bot;
    std::map<int, Subquotient> h_tot;
    auto top_at = [&](int i) -> CohomologyGroup& {
        auto it = h_top.find(i);
        if (it == h_top.end()) it = h_top.emplace(i, cohomology(x, ln, i)).first;
        return it->second;
    };
    auto bot_at = [&](int i) -> CohomologyGroup& {
        auto it = h_bot.find(i);
        if (it == h_bot.end()) it = h_bot.emplace(i, cohomology(x, l0, i)).first;
        return it->second;
    };
    auto tot_at = [&](int i) -> Subquotient& {
        auto it = h_tot.find(i);
        if (it == h_tot.end()) it = h_tot.emplace(i, detail::total_cohomology(fc, i)).first;
        return it->second;
    };

    auto alpha = [&](int i) {  // H^i(L_n) -> H^i(L): include block n
        CohomologyGroup& src = top_at(i);
        Subquotient& dst = tot_at(i);
        std::vector<std::vector<Int>> cols;
        for (const Cochain& rep : src.basis())
            cols.push_back(
                dst.reduce(fc.embed_block(to_vector(rep), static_cast<std::size_t>(n), i)));
        return IntMat::from_columns(dst.invariants().coord_count(), cols);
    };
    auto beta = [&](int i) {  // H^i(L) -> H^i(L_0): project to block 0
        Subquotient& src = tot_at(i);
        CohomologyGroup& dst = bot_at(i);
        std::vector<std::vector<Int>> cols;
        for (std::size_t j = 0; j < src.invariants().coord_count(); ++j) {
            Cochain c = cochain_from_vector(x, l0, i, fc.project_block(src.representative(j), 0, i));
            cols.push_back(dst.reduce(c));
        }
        return IntMat::from_columns(dst.invariants().coord_count(), cols);
    };
    auto delta = [&](int i) {  // H^i(L_0) -> H^{i+1}(L_n): lift, d, pull back
        CohomologyGroup& src = bot_at(i);
        CohomologyGroup& dst = top_at(i + 1);
        std::vector<std::vector<Int>> cols;
        const std::size_t dn1 = fc.dim(i + 1);
        for (const Cochain& rep : src.basis()) {
            std::vector<Int> lift = fc.embed_block(to_vector(rep), 0, i);
            std::vector<Int> image(dn1);
            if (i < x->dimension()) image = fc.differential(i) * lift;
            IntMat inject = fc.block_injection(static_cast<std::size_t>(n), i + 1);
            auto sol = solve_integer(hcat(inject, fc.relation_columns(0, i + 1)), image);
            if (!sol) throw std::logic_error("filtration connecting map: pullback failed");
            std::vector<Int> pre(sol->begin(), sol->begin() + static_cast<long>(inject.cols()));
            Cochain c = cochain_from_vector(x, ln, i + 1, pre);
            if (!is_cocycle(c))
                throw std::logic_error("filtration connecting map: pullback not a cocycle");
            cols.push_back(dst.reduce(c));
        }
        return IntMat::from_columns(dst.invariants().coord_count(), cols);
    };

    // exactness of G1 --f--> G2 --g--> G3 at G2, via lattices in G2 coordinates
    auto exact_at = [&](const IntMat& f, const IntMat& g, const AbelianGroup& g2,
                        const AbelianGroup& g3, FiltrationLesNode& node) {
        IntMat rel2 = g2.relation_columns();
        IntMat image = hcat(f, rel2);
        IntMat kernel_gens;
        if (g3.coord_count() == 0 || g2.coord_count() == 0) {
            kernel_gens = IntMat::identity(g2.coord_count());
        } else {
            IntMat ker = kernel_basis(hcat(g, g3.relation_columns()));
            std::vector<std::vector<Int>> cols;
            for (std::size_t j = 0; j < ker.cols(); ++j) {
                std::vector<Int> v(g2.coord_count());
                for (std::size_t i = 0; i < g2.coord_count(); ++i) v[i] = ker(i, j);
                cols.push_back(std::move(v));
            }
            kernel_gens = IntMat::from_columns(g2.coord_count(), cols);
        }
        IntMat kernel = hcat(kernel_gens, rel2);
        if (g2.coord_count() == 0) {
            node.image = AbelianGroup::zero();
            node.kernel = AbelianGroup::zero();
            node.exact = true;
            return;
        }
        node.image = subgroup_invariants(image, rel2);
        node.kernel = subgroup_invariants(kernel, rel2);
        node.exact = lattice_equal(image, kernel);
    };

    for (int i = deg_lo; i <= deg_hi; ++i) {
        Subquotient& tot = tot_at(i);
        report.groups[i] = {top_at(i).invariants(), tot.invariants(), bot_at(i).invariants()};

        IntMat a = alpha(i), b = beta(i), d = delta(i);

        {
            FiltrationLesNode node;
            node.label = "H^" + std::to_string(i) + "(X,L)";
            exact_at(a, b, tot.invariants(), bot_at(i).invariants(), node);
            if (!node.exact) report.pass = false;
            report.nodes.push_back(node);
        }
        {
            FiltrationLesNode node;
            node.label = "H^" + std::to_string(i) + "(X,L0)";
            exact_at(b, d, bot_at(i).invariants(), top_at(i + 1).invariants(), node);
            if (!node.exact) report.pass = false;
            report.nodes.push_back(node);
        }
        if (i + 1 <= deg_hi) {
            FiltrationLesNode node;
            node.label = "H^" + std::to_string(i + 1) + "(X,Ln)";
            IntMat a1 = alpha(i + 1);
            exact_at(d, a1, top_at(i + 1).invariants(), tot_at(i + 1).invariants(), node);
            if (!node.exact) report.pass = false;
            report.nodes.push_back(node);
        }
    }
    return report;
}

}  // namespace cechtower
