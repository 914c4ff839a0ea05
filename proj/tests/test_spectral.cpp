#include <catch2/catch_amalgamated.hpp>

#include "cechtower/spectral.hpp"

using namespace cechtower;

namespace {

const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup Z2 = AbelianGroup::cyclic(2);
const AbelianGroup Z3 = AbelianGroup::cyclic(3);

}  // namespace

TEST_CASE("filtered complex layout") {
    ComplexPtr circle = share(catalog("circle(3)"));
    SECTION("single link: K_1 = 0, total is the plain complex") {
        FilteredComplex fc = build_filtered(circle, {Z});
        REQUIRE(fc.total_width() == 1);
        REQUIRE(fc.filtration_generators(0, 1).cols() == 3);
        REQUIRE(fc.filtration_generators(1, 1).cols() == 0);
    }
    SECTION("stack (Z, Z/2): K_1 consists of the Z/2 block") {
        FilteredComplex fc = build_filtered(circle, {Z, Z2});
        REQUIRE(fc.total_width() == 2);
        IntMat k1 = fc.filtration_generators(1, 0);
        REQUIRE(k1.cols() == 3);  // one Z/2 coordinate per vertex
        // K_1 generators touch only block-1 coordinates
        for (std::size_t j = 0; j < k1.cols(); ++j)
            for (std::size_t s = 0; s < 3; ++s) REQUIRE(k1(2 * s, j) == 0);
    }
    SECTION("empty complex: everything vanishes") {
        ComplexPtr e = share(Complex::closure({}));
        FilteredComplex fc = build_filtered(e, {Z});
        REQUIRE(fc.dim(0) == 0);
        SpectralTerm t = e_page(fc, 0, 0, 1);
        REQUIRE(t.invariants.is_zero());
    }
}

TEST_CASE("z_term captures the filtration cocycle condition") {
    // p = 0, r = 1 on stack (Z, Z): membership requires the L_0 component to
    // be a cocycle while the L_1 component is unconstrained.
    ComplexPtr circle = share(catalog("circle(3)"));
    FilteredComplex fc = build_filtered(circle, {Z, Z});
    IntMat z01 = z_term(fc, 0, 1, 0);  // degree-0 total cochains
    SmithForm snf = smith_normal_form(z01);

    // a vector with non-cocycle L_0 component is not in Z^0_1
    std::vector<Int> bad(fc.dim(0));
    bad[0] = 1;  // f(vertex0) = 1 in L_0, others 0: d(f) != 0
    REQUIRE_FALSE(in_span(snf, bad));
    // but with the L_1 block it is fine
    std::vector<Int> good(fc.dim(0));
    good[1] = 1;
    REQUIRE(in_span(snf, good));
    // constant L_0 cochain is a cocycle hence in Z^0_1
    std::vector<Int> constant(fc.dim(0));
    for (std::size_t s = 0; s < 3; ++s) constant[2 * s] = 1;
    REQUIRE(in_span(snf, constant));

    SECTION("large r forces cocycles of K_p") {
        IntMat zbig = z_term(fc, 0, 5, 1);
        SmithForm s2 = smith_normal_form(zbig);
        std::vector<Int> edge(fc.dim(1));
        edge[0] = 1;  // single-edge L_0 cochain is not a cocycle on the circle? d lands in C^2 = 0
        REQUIRE(in_span(s2, edge));  // circle has no 2-simplices: everything is a cocycle
    }
}

TEST_CASE("z_term and b_term families cover every total degree") {
    ComplexPtr sphere = share(catalog("sphere(2)"));
    FilteredComplex fc = build_filtered(sphere, {Z, Z2});
    auto zs = z_term(fc, 0, 1);
    auto bs = b_term(fc, 0, 1);
    REQUIRE(zs.size() == 3);
    REQUIRE(bs.size() == 3);
    for (int k = 0; k <= 2; ++k) {
        REQUIRE(zs.at(k) == z_term(fc, 0, 1, k));
        REQUIRE(bs.at(k) == b_term(fc, 0, 1, k));
        REQUIRE(lattice_subset(bs.at(k), zs.at(k)));  // boundaries are cycles
    }
}

TEST_CASE("b_term literal definition equals d(K_p)") {
    for (const char* name : {"circle(3)", "sphere(2)", "torus7"}) {
        ComplexPtr x = share(catalog(name));
        std::vector<std::vector<AbelianGroup>> stacks = {{Z}, {Z, Z2}, {Z2, Z, Z3}};
        for (const auto& stack : stacks) {
            FilteredComplex fc = build_filtered(x, stack);
            for (int p = 0; p <= 2; ++p)
                for (int r = 1; r <= 3; ++r)
                    for (int k = 0; k <= x->dimension(); ++k) {
                        IntMat literal = b_term(fc, p, r, k);
                        // d(K_p): apply the differential to the K_p generators
                        IntMat dkp(fc.dim(k), 0);
                        if (k >= 1 && x->count(k - 1) > 0) {
                            IntMat gens = fc.filtration_generators(p, k - 1);
                            IntMat d = fc.differential(k - 1);
                            std::vector<std::vector<Int>> cols;
                            for (std::size_t j = 0; j < gens.cols(); ++j)
                                cols.push_back(d * gens.column(j));
                            dkp = IntMat::from_columns(fc.dim(k), cols);
                        }
                        REQUIRE(lattice_equal(literal, dkp));
                    }
        }
    }
}

TEST_CASE("E page terms equal the coefficient cohomology") {
    ComplexPtr circle = share(catalog("circle(3)"));
    SECTION("stack (Z) on circle(3): E^{0,1}_1 = H^1(S^1, Z) = Z") {
        FilteredComplex fc = build_filtered(circle, {Z});
        SpectralTerm t = e_page(fc, 0, 1, 1);
        REQUIRE(t.invariants == Z);
    }
    SECTION("zero link gives zero terms") {
        FilteredComplex fc = build_filtered(circle, {Z, AbelianGroup::zero()});
        for (int q = -1; q <= 2; ++q) REQUIRE(e_page(fc, 1, q, 1).invariants.is_zero());
    }
    SECTION("stack (Z, Z/2) on rp2_6: E^{1,1}_r = H^2(RP^2, Z/2) = Z/2 for all r") {
        ComplexPtr rp2 = share(catalog("rp2_6"));
        FilteredComplex fc = build_filtered(rp2, {Z, Z2});
        for (int r = 1; r <= 3; ++r) {
            SpectralTerm t = e_page(fc, 1, 1, r);
            REQUIRE(t.invariants == Z2);
        }
    }
    SECTION("representatives live in the numerator subgroup") {
        ComplexPtr circle = share(catalog("circle(3)"));
        FilteredComplex fc = build_filtered(circle, {Z, Z2});
        SpectralTerm t = e_page(fc, 0, 1, 1);
        REQUIRE(t.representatives.cols() == t.invariants.coord_count());
        SmithForm z = smith_normal_form(z_term(fc, 0, 1, 1));
        for (std::size_t j = 0; j < t.representatives.cols(); ++j)
            REQUIRE(in_span(z, t.representatives.column(j)));
    }
    SECTION("full sweep matches cech cohomology (degeneration at r = 1)") {
        std::vector<std::vector<AbelianGroup>> stacks = {{Z}, {Z, Z2}, {Z2, Z, Z3}};
        for (const char* name : {"circle(3)", "sphere(2)"}) {
            ComplexPtr x = share(catalog(name));
            for (const auto& stack : stacks) {
                FilteredComplex fc = build_filtered(x, stack);
                for (int p = 0; p <= 2; ++p)
                    for (int r = 1; r <= 3; ++r)
                        for (int k = p > 0 ? 0 : 0; k <= x->dimension() + 1; ++k) {
                            int q = k - p;
                            SpectralTerm t = e_page(fc, p, q, r);
                            AbelianGroup expected =
                                p < static_cast<int>(stack.size())
                                    ? cohomology(x, stack[static_cast<std::size_t>(p)], k)
                                          .invariants()
                                    : AbelianGroup::zero();
                            INFO(name << " p=" << p << " q=" << q << " r=" << r);
                            REQUIRE(t.invariants == expected);
                        }
            }
        }
    }
}

TEST_CASE("limit terms recover the coefficient cohomology") {
    SECTION("degenerate filtration (single link)") {
        ComplexPtr circle = share(catalog("circle(3)"));
        FilteredComplex fc = build_filtered(circle, {Z});
        auto terms = e_infinity(fc, 0);
        REQUIRE(terms.size() == 2);
        REQUIRE(terms[0].invariants == Z);
        REQUIRE(terms[1].invariants == Z);
    }
    SECTION("p beyond the stack is zero") {
        ComplexPtr circle = share(catalog("circle(3)"));
        FilteredComplex fc = build_filtered(circle, {Z});
        for (const SpectralTerm& t : e_infinity(fc, 3)) REQUIRE(t.invariants.is_zero());
    }
    SECTION("torus7 with stack (Z, Z), p = 1: H^*(T^2, Z) = (Z, Z^2, Z)") {
        ComplexPtr torus = share(catalog("torus7"));
        FilteredComplex fc = build_filtered(torus, {Z, Z});
        auto terms = e_infinity(fc, 1);
        REQUIRE(terms.size() == 3);
        REQUIRE(terms[0].invariants == Z);
        REQUIRE(terms[1].invariants == AbelianGroup::free(2));
        REQUIRE(terms[2].invariants == Z);
    }
}

TEST_CASE("total cohomology splits as the sum of limit terms") {
    // |H^k(X, L)| bookkeeping per degree: free ranks add, torsion multiplies
    ComplexPtr rp2 = share(catalog("rp2_6"));
    FilteredComplex fc = build_filtered(rp2, {Z, Z2});
    for (int k = 0; k <= 2; ++k) {
        Subquotient total = cechtower::detail::total_cohomology(fc, k);
        std::size_t free_sum = 0;
        std::vector<Int> torsion_all;
        for (int p = 0; p <= 1; ++p) {
            AbelianGroup inv = e_infinity(fc, p)[static_cast<std::size_t>(k)].invariants;
            free_sum += inv.free_rank();
            for (const Int& d : inv.torsion()) torsion_all.push_back(d);
        }
        AbelianGroup direct_sum(free_sum, torsion_all);
        REQUIRE(total.invariants() == direct_sum);
    }
}

TEST_CASE("two-column filtration long exact sequence") {
    SECTION("L_n = 0 degenerates to isomorphisms") {
        ComplexPtr circle = share(catalog("circle(3)"));
        FilteredComplex fc = build_filtered(circle, {Z, AbelianGroup::zero()});
        FiltrationLesReport r = filtration_les(fc, 0, 1);
        REQUIRE(r.pass);
        for (const auto& node : r.nodes) REQUIRE(node.exact);
    }
    SECTION("sphere(2) with L_0 = Z, L_2 = Z/2 is exact in degrees 0..3") {
        ComplexPtr sphere = share(catalog("sphere(2)"));
        FilteredComplex fc = build_filtered(sphere, {Z, AbelianGroup::zero(), Z2});
        FiltrationLesReport r = filtration_les(fc, 0, 3);
        REQUIRE(r.pass);
        REQUIRE(r.groups.at(2)[0] == Z2);  // H^2(S^2, Z/2)
        REQUIRE(r.groups.at(2)[2] == Z);   // H^2(S^2, Z)
    }
    SECTION("cone complex: exact vacuously in positive degrees") {
        ComplexPtr cone = share(catalog("simplex(3)"));
        FilteredComplex fc = build_filtered(cone, {Z, AbelianGroup::zero(), Z3});
        FiltrationLesReport r = filtration_les(fc, 1, 3);
        REQUIRE(r.pass);
        for (int i = 1; i <= 3; ++i)
            for (const AbelianGroup& g : r.groups.at(i)) REQUIRE(g.is_zero());
    }
    SECTION("intermediate nonzero link is rejected") {
        ComplexPtr sphere = share(catalog("sphere(2)"));
        FilteredComplex fc = build_filtered(sphere, {Z, Z2, Z3});
        REQUIRE_THROWS_AS(filtration_les(fc, 0, 1), std::invalid_argument);
    }
}
