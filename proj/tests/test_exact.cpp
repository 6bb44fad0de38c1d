#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "c2eff/exact.hpp"

using namespace c2eff;

namespace {

IntMat from_rows(std::initializer_list<std::initializer_list<MInt>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    IntMat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (MInt x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

bool is_diagonal_chain(const IntMat& d) {
    int n = std::min(d.rows, d.cols);
    for (int i = 0; i < d.rows; ++i)
        for (int j = 0; j < d.cols; ++j)
            if (i != j && d.at(i, j) != 0) return false;
    for (int i = 0; i + 1 < n; ++i) {
        if (d.at(i, i) < 0) return false;
        if (d.at(i, i) == 0 && d.at(i + 1, i + 1) != 0) return false;
        if (d.at(i, i) != 0 && d.at(i + 1, i + 1) % d.at(i, i) != 0) return false;
    }
    return true;
}

IntMat random_matrix(int rows, int cols, unsigned seed) {
    std::srand(seed);
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = std::rand() % 11 - 5;
    return m;
}

}  // namespace

TEST_CASE("smith normal form on randomized matrices") {
    for (unsigned seed = 1; seed <= 40; ++seed) {
        int rows = 1 + seed % 5;
        int cols = 1 + (seed / 2) % 6;
        IntMat a = random_matrix(rows, cols, seed);
        SnfResult s = smith_normal_form(a);
        CHECK(is_diagonal_chain(s.d));
        CHECK(s.u * a * s.v == s.d);
        CHECK(s.u * s.u_inv == IntMat::identity(rows));
    }
}

TEST_CASE("smith normal form known values") {
    SnfResult s = smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
    CHECK(s.rank == 3);
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 2);
    CHECK(s.d.at(2, 2) == 156);

    SnfResult z = smith_normal_form(IntMat(2, 3));
    CHECK(z.rank == 0);
    CHECK(z.d.is_zero());
}

TEST_CASE("kernel basis") {
    IntMat a = from_rows({{1, 2, 3}, {2, 4, 6}});
    IntMat k = kernel_basis(a);
    CHECK(k.cols == 2);
    CHECK((a * k).is_zero());

    CHECK(kernel_basis(from_rows({{2, 0}, {0, 3}})).cols == 0);
    CHECK(kernel_basis(IntMat(0, 4)).cols == 4);
}

TEST_CASE("solve") {
    IntMat a = from_rows({{2, 0}, {0, 3}});
    auto x = solve(a, {4, 9});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == std::vector<MInt>{4, 9});
    CHECK(!solve(a, {1, 0}).has_value());
    CHECK(!solve(from_rows({{1, 1}, {1, 1}}), {0, 1}).has_value());
}

TEST_CASE("two local order") {
    CHECK(two_local_order(0) == 0);
    CHECK(two_local_order(1) == 1);
    CHECK(two_local_order(12) == 4);
    CHECK(two_local_order(-8) == 8);
    CHECK(two_local_order(7) == 1);
}

TEST_CASE("subquotient of a full lattice") {
    // Z^2 / <(2,0)> = Z/2 + Z.
    Subquotient h(IntMat::identity(2), from_rows({{2}, {0}}), 2);
    REQUIRE(h.num_generators() == 2);
    MInt o0 = h.order(0), o1 = h.order(1);
    CHECK(((o0 == 2 && o1 == 0) || (o0 == 0 && o1 == 2)));
}

TEST_CASE("subquotient with odd torsion trimmed away") {
    // Z / 6Z is Z/2 two-locally.
    Subquotient h(IntMat::identity(1), from_rows({{6}}), 1);
    REQUIRE(h.num_generators() == 1);
    CHECK(h.order(0) == 2);
    auto c = h.coords({3});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    // Z / 3Z is trivial two-locally.
    Subquotient t(IntMat::identity(1), from_rows({{3}}), 1);
    CHECK(t.trivial());
}

TEST_CASE("subquotient of a proper sublattice") {
    // L = <(1,1),(0,2)> inside Z^2, boundaries <(2,2)>: quotient Z/2 + Z.
    IntMat cycles = from_rows({{1, 0}, {1, 2}});
    IntMat bounds = from_rows({{2}, {2}});
    Subquotient h(cycles, bounds, 2);
    REQUIRE(h.num_generators() == 2);
    int torsion = 0, free = 0;
    for (int i = 0; i < h.num_generators(); ++i)
        (h.order(i) == 0 ? free : torsion)++;
    CHECK(torsion == 1);
    CHECK(free == 1);
    // Membership: (1,0) is outside the lattice, (1,1) inside.
    CHECK(!h.coords({1, 0}).has_value());
    REQUIRE(h.coords({1, 1}).has_value());
    // The boundary itself is zero in the quotient.
    CHECK(h.is_zero({2, 2}));
    CHECK(!h.is_zero({1, 1}));
}

TEST_CASE("subquotient generators represent their classes") {
    IntMat cycles = from_rows({{2, 0, 1}, {0, 3, 1}, {0, 0, 5}});
    IntMat bounds = from_rows({{4, 0}, {0, 6}, {0, 0}});
    Subquotient h(cycles, bounds, 3);
    for (int i = 0; i < h.num_generators(); ++i) {
        auto c = h.coords(h.generator(i));
        REQUIRE(c.has_value());
        for (int j = 0; j < h.num_generators(); ++j)
            CHECK((*c)[j] == (i == j ? 1 : 0));
    }
}
