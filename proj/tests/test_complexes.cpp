#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cechtower/complex.hpp"

using namespace cechtower;

TEST_CASE("closure fills in faces") {
    Complex c = Complex::closure({{0, 1, 2}});
    REQUIRE(c.count(0) == 3);
    REQUIRE(c.count(1) == 3);
    REQUIRE(c.count(2) == 1);
    REQUIRE(c.dimension() == 2);
    REQUIRE(c.contains({0, 2}));

    REQUIRE(Complex::closure({}).empty());

    Complex hollow = Complex::closure({{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(hollow.count(0) == 3);
    REQUIRE(hollow.count(1) == 3);
    REQUIRE(hollow.count(2) == 0);
}

TEST_CASE("closure rejects repeated vertices and is idempotent") {
    REQUIRE_THROWS_WITH(Complex::closure({{0, 1, 1}}),
                        Catch::Matchers::ContainsSubstring("(0,1,1)"));
    REQUIRE_THROWS_AS(Complex::closure({{-1, 2}}), std::invalid_argument);

    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Simplex> gens;
        int ngen = 1 + static_cast<int>(gen() % 4);
        for (int i = 0; i < ngen; ++i) {
            std::set<int> verts;
            int sz = 1 + static_cast<int>(gen() % 4);
            while (static_cast<int>(verts.size()) < sz) verts.insert(static_cast<int>(gen() % 9));
            gens.push_back(Simplex(verts.begin(), verts.end()));
        }
        Complex once = Complex::closure(gens);
        Complex twice = Complex::closure(once.all_simplices());
        REQUIRE(once == twice);
    }
}

TEST_CASE("nerve from cover") {
    SECTION("three arcs on a circle: pairwise intersections, empty triple") {
        std::vector<CoverRecord> records = {{{0, 1}, true}, {{1, 2}, true}, {{0, 2}, true},
                                            {{0, 1, 2}, false}};
        Complex nerve = nerve_from_cover(records);
        REQUIRE(nerve == Complex::closure({{0, 1}, {1, 2}, {0, 2}}));
    }
    SECTION("two overlapping intervals give an edge") {
        Complex nerve = nerve_from_cover({{{0, 1}, true}});
        REQUIRE(nerve == Complex::closure({{0, 1}}));
    }
    SECTION("four mutually intersecting sets with total intersection") {
        Complex nerve = nerve_from_cover({{{0, 1, 2, 3}, true}});
        REQUIRE(nerve == Complex::closure({{0, 1, 2, 3}}));
        REQUIRE(nerve.dimension() == 3);
    }
    SECTION("inconsistent flags are rejected") {
        std::vector<CoverRecord> records = {{{0, 1, 2}, true}, {{0, 1}, false}};
        REQUIRE_THROWS_AS(nerve_from_cover(records), std::invalid_argument);
    }
    SECTION("random covers satisfy the complex invariants") {
        std::mt19937_64 gen(17);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<CoverRecord> records;
            int n = 1 + static_cast<int>(gen() % 5);
            for (int i = 0; i < n; ++i) {
                std::set<int> verts;
                int sz = 1 + static_cast<int>(gen() % 3);
                while (static_cast<int>(verts.size()) < sz)
                    verts.insert(static_cast<int>(gen() % 7));
                records.push_back({Simplex(verts.begin(), verts.end()), true});
            }
            Complex nerve = nerve_from_cover(records);
            // closed under faces, tuples strictly increasing
            for (const Simplex& s : nerve.all_simplices()) {
                for (std::size_t i = 0; i + 1 < s.size(); ++i) REQUIRE(s[i] < s[i + 1]);
                for (std::size_t omit = 0; omit < s.size() && s.size() > 1; ++omit) {
                    Simplex face;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != omit) face.push_back(s[i]);
                    REQUIRE(nerve.contains(face));
                }
            }
        }
    }
}

TEST_CASE("cones") {
    Complex d3 = catalog("simplex(3)");
    REQUIRE(d3.is_cone(0));
    REQUIRE(d3.is_cone(2));

    Complex hollow = catalog("circle(3)");
    REQUIRE_FALSE(hollow.is_cone(0));
    REQUIRE(hollow.cone_obstruction(0).value() == Simplex{1, 2});

    Complex star = Complex::closure({{0, 1}, {0, 2}, {0, 5}});
    REQUIRE(star.is_cone(0));
    REQUIRE_FALSE(star.is_cone(1));

    REQUIRE_THROWS_AS(hollow.is_cone(9), std::invalid_argument);
}

TEST_CASE("catalog entries have the classical face counts and Euler characteristics") {
    Complex circle = catalog("circle(3)");
    REQUIRE(circle.f_vector() == std::vector<std::size_t>{3, 3});
    REQUIRE(circle.euler_characteristic() == 0);

    REQUIRE(catalog("circle(7)").euler_characteristic() == 0);

    Complex sphere = catalog("sphere(2)");
    REQUIRE(sphere.f_vector() == std::vector<std::size_t>{4, 6, 4});
    REQUIRE(sphere.euler_characteristic() == 2);

    Complex oct = catalog("sphere2");
    REQUIRE(oct.f_vector() == std::vector<std::size_t>{6, 12, 8});
    REQUIRE(oct.euler_characteristic() == 2);

    Complex torus = catalog("torus7");
    REQUIRE(torus.f_vector() == std::vector<std::size_t>{7, 21, 14});
    REQUIRE(torus.euler_characteristic() == 0);

    Complex rp2 = catalog("rp2_6");
    REQUIRE(rp2.f_vector() == std::vector<std::size_t>{6, 15, 10});
    REQUIRE(rp2.euler_characteristic() == 1);

    Complex klein = catalog("klein8");
    REQUIRE(klein.f_vector() == std::vector<std::size_t>{8, 24, 16});
    REQUIRE(klein.euler_characteristic() == 0);

    REQUIRE(catalog("simplex(5)").count(5) == 1);
    REQUIRE(catalog("sphere(3)").f_vector() == std::vector<std::size_t>{5, 10, 10, 5});
}

TEST_CASE("surface catalog entries are closed surfaces") {
    // every edge lies in exactly two triangles
    for (const char* name : {"sphere2", "torus7", "rp2_6", "klein8"}) {
        Complex c = catalog(name);
        for (const Simplex& e : c.simplices(1)) {
            int count = 0;
            for (const Simplex& t : c.simplices(2)) {
                if (std::includes(t.begin(), t.end(), e.begin(), e.end())) ++count;
            }
            INFO(name << " edge " << Complex::tuple_string(e));
            REQUIRE(count == 2);
        }
    }
}

TEST_CASE("unknown catalog name lists the catalog") {
    REQUIRE_THROWS_WITH(catalog("moebius"), Catch::Matchers::ContainsSubstring("circle(n>=3)"));
    REQUIRE_THROWS_AS(catalog("circle(2)"), std::invalid_argument);
}
