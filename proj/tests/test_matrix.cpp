#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cechtower/matrix.hpp"

using namespace cechtower;

namespace {

// deterministic uniform integer in [lo, hi]
int rng_range(std::mt19937_64& gen, int lo, int hi) {
    return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

IntMat random_matrix(std::mt19937_64& gen, std::size_t r, std::size_t c, int amp) {
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng_range(gen, -amp, amp);
    return m;
}

// Laplace-expansion determinant, independent of the SNF path.
Int determinant(const IntMat& m) {
    const std::size_t n = m.rows();
    REQUIRE(m.cols() == n);
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMat minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor(i - 1, cc++) = m(i, k);
            }
        }
        Int term = m(0, j) * determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

void check_smith(const IntMat& a) {
    SmithForm s = smith_normal_form(a);
    REQUIRE(s.u * a * s.v == s.d);
    REQUIRE(s.u * s.u_inv == IntMat::identity(a.rows()));
    REQUIRE(s.v * s.v_inv == IntMat::identity(a.cols()));
    REQUIRE(abs_int(determinant(s.u)) == 1);
    REQUIRE(abs_int(determinant(s.v)) == 1);
    for (std::size_t i = 0; i < s.rank; ++i) {
        REQUIRE(s.diag[i] > 0);
        if (i + 1 < s.rank) REQUIRE(s.diag[i + 1] % s.diag[i] == 0);
    }
    // off-diagonal zero, diagonal agrees with diag
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j) {
            if (i == j) continue;
            REQUIRE(s.d(i, j) == 0);
        }
}

}  // namespace

TEST_CASE("smith normal form on known instances") {
    SECTION("2x2 identity") {
        SmithForm s = smith_normal_form(IntMat::identity(2));
        REQUIRE(s.rank == 2);
        REQUIRE(s.diag == std::vector<Int>{1, 1});
    }
    SECTION("[[2,4],[6,8]] has invariants 2, 4") {
        // hand elimination: [[2,4],[6,8]] -> [[2,4],[0,-4]] -> [[2,0],[0,4]]
        IntMat a(2, 2);
        a(0, 0) = 2;
        a(0, 1) = 4;
        a(1, 0) = 6;
        a(1, 1) = 8;
        SmithForm s = smith_normal_form(a);
        REQUIRE(s.diag == std::vector<Int>{2, 4});
        check_smith(a);
    }
    SECTION("zero matrix") {
        SmithForm s = smith_normal_form(IntMat(3, 2));
        REQUIRE(s.rank == 0);
        REQUIRE(s.d == IntMat(3, 2));
    }
    SECTION("empty shapes") {
        check_smith(IntMat(0, 0));
        check_smith(IntMat(0, 3));
        check_smith(IntMat(3, 0));
    }
}

TEST_CASE("smith normal form properties on random matrices up to 8x8") {
    std::mt19937_64 gen(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng_range(gen, 1, 8));
        std::size_t c = static_cast<std::size_t>(rng_range(gen, 1, 8));
        check_smith(random_matrix(gen, r, c, 9));
    }
}

TEST_CASE("smith normal form stays exact with huge entries") {
    std::mt19937_64 gen(555);
    Int big("1000000000000000000000000000000");  // 10^30
    for (int trial = 0; trial < 5; ++trial) {
        IntMat a = random_matrix(gen, 4, 4, 7);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) *= (i == j ? big : Int(1));
        SmithForm s = smith_normal_form(a);
        REQUIRE(s.u * a * s.v == s.d);
        REQUIRE(s.u * s.u_inv == IntMat::identity(4));
        REQUIRE(s.v * s.v_inv == IntMat::identity(4));
    }
}

TEST_CASE("integer solving round trip") {
    std::mt19937_64 gen(777);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng_range(gen, 1, 6));
        std::size_t c = static_cast<std::size_t>(rng_range(gen, 1, 6));
        IntMat a = random_matrix(gen, r, c, 5);
        std::vector<Int> x0(c);
        for (auto& v : x0) v = rng_range(gen, -4, 4);
        std::vector<Int> b = a * x0;
        auto x = solve_integer(a, b);
        REQUIRE(x.has_value());
        REQUIRE(a * *x == b);
    }
    SECTION("unsolvable system") {
        IntMat a(1, 1);
        a(0, 0) = 2;
        REQUIRE_FALSE(solve_integer(a, {Int(3)}).has_value());
        REQUIRE(solve_integer(a, {Int(4)}).value() == std::vector<Int>{2});
    }
}

TEST_CASE("kernel basis spans the kernel") {
    std::mt19937_64 gen(4242);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng_range(gen, 1, 5));
        std::size_t c = static_cast<std::size_t>(rng_range(gen, 1, 6));
        IntMat a = random_matrix(gen, r, c, 4);
        IntMat k = kernel_basis(a);
        for (std::size_t j = 0; j < k.cols(); ++j) {
            std::vector<Int> zero(r);
            REQUIRE(a * k.column(j) == zero);
        }
    }
}

TEST_CASE("lattice primitives") {
    // span{(2,0),(0,3)} vs span{(2,3),(2,-3)}: the latter is an index-2 sublattice
    IntMat a(2, 2), b(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 3;
    b(0, 0) = 2;
    b(1, 0) = 3;
    b(0, 1) = 2;
    b(1, 1) = -3;
    REQUIRE(lattice_subset(b, a));
    REQUIRE_FALSE(lattice_subset(a, b));
    REQUIRE_FALSE(lattice_equal(a, b));
    REQUIRE(lattice_equal(a, lattice_basis(a)));

    SECTION("intersection of 2Z^2 and 3Z^2 is 6Z^2") {
        IntMat two = IntMat::identity(2), three = IntMat::identity(2), six = IntMat::identity(2);
        for (std::size_t i = 0; i < 2; ++i) {
            two(i, i) = 2;
            three(i, i) = 3;
            six(i, i) = 6;
        }
        REQUIRE(lattice_equal(lattice_intersection(two, three), six));
    }
}
