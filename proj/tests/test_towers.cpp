#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cechtower/tower.hpp"
#include "helpers.hpp"

using namespace cechtower;
using cechtower::testing::pick;
using cechtower::testing::random_cochain;

namespace {

const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup Z2 = AbelianGroup::cyclic(2);
const AbelianGroup Z3 = AbelianGroup::cyclic(3);

TowerCocycle zero_tower(const ComplexPtr& x, const std::vector<AbelianGroup>& links) {
    std::vector<Cochain> cocycles;
    for (std::size_t i = 0; i < links.size(); ++i)
        cocycles.emplace_back(x, links[i], static_cast<int>(i) + 2);
    return TowerCocycle(x, LinkStack{links}, cocycles);
}

}  // namespace

TEST_CASE("validate_tower") {
    ComplexPtr torus = share(catalog("torus7"));
    SECTION("all-zero family passes") {
        TowerReport r = validate_tower(zero_tower(torus, {Z, Z2}));
        REQUIRE(r.pass);
        REQUIRE(r.levels.size() == 2);
        for (const auto& lc : r.levels) {
            REQUIRE(lc.degree_ok);
            REQUIRE(lc.group_ok);
            REQUIRE(lc.cocycle_ok);
        }
    }
    SECTION("coboundary tops pass") {
        std::mt19937_64 gen(3);
        Cochain c3 = coboundary(random_cochain(gen, torus, Z2, 2));
        REQUIRE(c3.degree() == 3);
        TowerCocycle t(torus, LinkStack{{Z, Z2}}, {Cochain(torus, Z, 2), c3});
        REQUIRE(validate_tower(t).pass);
    }
    SECTION("perturbing one value of a valid cocycle fails the right level") {
        ComplexPtr solid = share(catalog("simplex(3)"));
        std::mt19937_64 gen(5);
        Cochain b2 = coboundary(random_cochain(gen, solid, Z, 1));
        std::vector<Int> w = b2.value({0, 1, 2});
        w[0] += 1;
        b2.set_value({0, 1, 2}, w);
        REQUIRE_FALSE(is_cocycle(b2));
        TowerCocycle t(solid, LinkStack{{Z}}, {b2});
        TowerReport r = validate_tower(t);
        REQUIRE_FALSE(r.pass);
        REQUIRE_FALSE(r.levels[0].cocycle_ok);
        REQUIRE(r.levels[0].degree_ok);
    }
    SECTION("degree mismatch is a structural failure") {
        Cochain wrong(torus, Z, 1);
        TowerCocycle t(torus, LinkStack{{Z}}, {wrong});
        TowerReport r = validate_tower(t);
        REQUIRE_FALSE(r.pass);
        REQUIRE_FALSE(r.levels[0].degree_ok);
    }
    SECTION("a broken c3 fails exactly at level 2") {
        ComplexPtr solid = share(catalog("simplex(4)"));
        std::mt19937_64 gen(7);
        Cochain c3 = coboundary(random_cochain(gen, solid, Z2, 2));
        std::vector<Int> v = c3.value({0, 1, 2, 3});
        v[0] += 1;
        c3.set_value({0, 1, 2, 3}, v);
        REQUIRE_FALSE(is_cocycle(c3));
        TowerCocycle t(solid, LinkStack{{Z, Z2}}, {Cochain(solid, Z, 2), c3});
        TowerReport r = validate_tower(t);
        REQUIRE_FALSE(r.pass);
        REQUIRE(r.levels[0].pass());
        REQUIRE_FALSE(r.levels[1].cocycle_ok);
        REQUIRE(r.levels[1].degree_ok);
    }
}

TEST_CASE("classification") {
    SECTION("zero tower classifies to zero") {
        ComplexPtr torus = share(catalog("torus7"));
        TowerClass cls = classify(zero_tower(torus, {Z}));
        REQUIRE(cls.is_zero());
        REQUIRE(cls.group == cohomology(torus, Z, 2).invariants());
    }
    SECTION("coboundary top classifies to zero and is trivial") {
        ComplexPtr rp2 = share(catalog("rp2_6"));
        std::mt19937_64 gen(7);
        Cochain top = coboundary(random_cochain(gen, rp2, Z2, 1));
        TowerCocycle t(rp2, LinkStack{{Z2}}, {top});
        REQUIRE(classify(t).is_zero());
        REQUIRE(is_trivial(t));
    }
    SECTION("invalid tower refuses to classify") {
        ComplexPtr solid = share(catalog("simplex(3)"));
        Cochain bad(solid, Z, 2);
        bad.set_value({0, 1, 2}, {Int(1)});
        REQUIRE_FALSE(is_cocycle(bad));
        TowerCocycle t(solid, LinkStack{{Z}}, {bad});
        REQUIRE_THROWS_AS(classify(t), std::invalid_argument);
    }
    SECTION("towers on a cone are always trivial") {
        ComplexPtr cone = share(catalog("simplex(5)"));
        std::mt19937_64 gen(11);
        Cochain top = coboundary(random_cochain(gen, cone, Z3, 1));
        TowerCocycle t(cone, LinkStack{{Z3}}, {top});
        REQUIRE(is_trivial(t));
    }
}

TEST_CASE("classification ignores coboundary changes and lower levels") {
    ComplexPtr rp2 = share(catalog("rp2_6"));
    std::mt19937_64 gen(13);
    CohomologyGroup h2 = cohomology(rp2, Z2, 2);  // = Z/2
    Cochain gen_cocycle = h2.basis().at(0);
    TowerCocycle t(rp2, LinkStack{{Z2}}, {gen_cocycle});
    TowerClass base = classify(t);
    REQUIRE_FALSE(base.is_zero());
    REQUIRE_FALSE(is_trivial(t));

    SECTION("adding coboundaries to the top preserves the class") {
        Cochain top = gen_cocycle;
        for (int trial = 0; trial < 10; ++trial) {
            top = top + coboundary(random_cochain(gen, rp2, Z2, 1));
            TowerCocycle t2(rp2, LinkStack{{Z2}}, {top});
            REQUIRE(classify(t2).coords == base.coords);
            REQUIRE(equivalent(t, t2));
        }
    }
    SECTION("modifying a lower cocycle preserves the class") {
        TowerCocycle tall = extend_from_class(t, Z3, std::vector<Int>{});
        REQUIRE(tall.height() == 2);
        TowerClass tall_class = classify(tall);
        Cochain other = gen_cocycle + coboundary(random_cochain(gen, rp2, Z2, 1));
        TowerCocycle modified(rp2, tall.stack(), {other, tall.cocycles()[1]});
        REQUIRE(classify(modified).coords == tall_class.coords);
    }
}

TEST_CASE("suspension of the circle carries a nontrivial Z tower") {
    // double cone over the hollow triangle: a triangulated 2-sphere
    ComplexPtr susp = share(Complex::closure(
        {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}}));
    REQUIRE(susp->euler_characteristic() == 2);
    CohomologyGroup h2 = cohomology(susp, Z, 2);
    REQUIRE(h2.invariants() == Z);
    TowerCocycle t(susp, LinkStack{{Z}}, {h2.basis().at(0)});
    REQUIRE_FALSE(is_trivial(t));
}

TEST_CASE("equivalence requires matching stacks") {
    ComplexPtr rp2 = share(catalog("rp2_6"));
    TowerCocycle t1 = zero_tower(rp2, {Z2});
    TowerCocycle t2 = zero_tower(rp2, {Z3});
    REQUIRE_THROWS_AS(equivalent(t1, t2), std::invalid_argument);
    REQUIRE(equivalent(t1, t1));
}

TEST_CASE("towers with distinct Z/3 classes are inequivalent") {
    ComplexPtr sphere = share(catalog("sphere(2)"));
    TowerCocycle one = base_tower(sphere, Z3, {Int(1)});
    TowerCocycle two = base_tower(sphere, Z3, {Int(2)});
    REQUIRE_FALSE(equivalent(one, two));
    REQUIRE(equivalent(one, one));
}

TEST_CASE("extension round trip") {
    SECTION("x = 0 appends the zero class") {
        ComplexPtr torus = share(catalog("torus7"));
        TowerCocycle t = zero_tower(torus, {Z});
        TowerCocycle t2 = extend_from_class(t, Z2, {});  // H^3 of a 2-complex is 0
        REQUIRE(t2.height() == 2);
        REQUIRE(is_trivial(t2));
    }
    SECTION("classify(extend_from_class(t, L, x)) = x on the 2-sphere") {
        ComplexPtr sphere = share(catalog("sphere(2)"));
        CohomologyGroup h2 = cohomology(sphere, Z3, 2);
        REQUIRE(h2.invariants() == Z3);
        for (Int x = 0; x < 3; ++x) {
            TowerCocycle t = base_tower(sphere, Z3, {x});
            REQUIRE(classify(t).coords == std::vector<Int>{x});
        }
    }
    SECTION("fundamental class of the 2-sphere with Z coefficients") {
        ComplexPtr sphere = share(catalog("sphere(2)"));
        CohomologyGroup h = cohomology(sphere, Z, 2);
        REQUIRE(h.invariants() == Z);
        TowerCocycle t = base_tower(sphere, Z, {Int(1)});
        REQUIRE(classify(t).coords == std::vector<Int>{1});
        REQUIRE(t.top() == h.representative({Int(1)}));
    }
    SECTION("requesting a nonzero class in zero cohomology fails") {
        ComplexPtr cone = share(catalog("simplex(3)"));
        REQUIRE_THROWS_AS(base_tower(cone, Z3, {Int(1)}), std::invalid_argument);
        TowerCocycle t = base_tower(cone, Z3, {});
        REQUIRE_THROWS_AS(extend_from_class(t, Z3, {Int(2)}), std::invalid_argument);
    }
}

TEST_CASE("enumerate_classes") {
    SECTION("circle(3) mod 2 in degree 1 has two classes") {
        ComplexPtr x = share(catalog("circle(3)"));
        auto reps = enumerate_classes(x, Z2, 1);
        REQUIRE(reps.size() == 2);
        for (const Cochain& r : reps) REQUIRE(is_cocycle(r));
        CohomologyGroup h = cohomology(x, Z2, 1);
        REQUIRE(h.reduce(reps[0]) != h.reduce(reps[1]));
    }
    SECTION("cone: single class") {
        ComplexPtr x = share(catalog("simplex(3)"));
        auto reps = enumerate_classes(x, AbelianGroup::cyclic(5), 2);
        REQUIRE(reps.size() == 1);
        REQUIRE(reps[0].is_zero());
    }
    SECTION("rp2_6 mod 2 in degree 2 has two classes") {
        ComplexPtr x = share(catalog("rp2_6"));
        auto reps = enumerate_classes(x, Z2, 2);
        REQUIRE(reps.size() == 2);
    }
    SECTION("count equals the cohomology order on small inputs") {
        for (const char* name : {"circle(3)", "circle(4)", "sphere(2)"}) {
            ComplexPtr x = share(catalog(name));
            for (int k = 0; k <= x->dimension(); ++k) {
                auto reps = enumerate_classes(x, Z2, k);
                auto order = cohomology(x, Z2, k).invariants().order();
                REQUIRE(order.has_value());
                REQUIRE(Int(reps.size()) == *order);
            }
        }
    }
    SECTION("infinite coefficients are rejected") {
        ComplexPtr x = share(catalog("circle(3)"));
        REQUIRE_THROWS_AS(enumerate_classes(x, Z, 1), std::invalid_argument);
    }
}

TEST_CASE("tower round trip against the enumeration oracle") {
    SECTION("n = 1 on sphere(2)") {
        ComplexPtr sphere = share(catalog("sphere(2)"));
        auto reps = enumerate_classes(sphere, Z3, 2);
        REQUIRE(reps.size() == 3);
        CohomologyGroup h = cohomology(sphere, Z3, 2);
        for (const Cochain& rep : reps) {
            std::vector<Int> x = h.reduce(rep);
            TowerCocycle t = base_tower(sphere, Z3, x);
            REQUIRE(classify(t).coords == x);
        }
    }
    SECTION("n = 2 on sphere(3)") {
        ComplexPtr sphere = share(catalog("sphere(3)"));
        auto reps = enumerate_classes(sphere, Z3, 3);
        REQUIRE(reps.size() == 3);
        TowerCocycle base = base_tower(sphere, Z3, {});  // H^2(S^3, Z/3) = 0
        CohomologyGroup h = cohomology(sphere, Z3, 3);
        for (const Cochain& rep : reps) {
            std::vector<Int> x = h.reduce(rep);
            TowerCocycle t = extend_from_class(base, Z3, x);
            REQUIRE(classify(t).coords == x);
        }
    }
}
