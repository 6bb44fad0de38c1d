#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "c2eff/coeff_f2.hpp"

using namespace c2eff;

namespace {
const F2CoefMonomial kOne = F2CoefMonomial::one();
}

TEST_CASE("group closed form at sample degrees") {
    CHECK(f2_group_at(0, 0) == F2CoefMonomial::pc(0, 0));
    CHECK(f2_group_at(0, -1) == F2CoefMonomial::pc(1, 0));
    CHECK(f2_group_at(0, 1) == std::nullopt);
    CHECK(f2_group_at(1, 4) == F2CoefMonomial::nc(1, 2));
    CHECK(f2_group_at(1, 2) == std::nullopt);  // NC needs w >= s+2 and j >= 1
    CHECK(f2_group_at(-3, -5) == F2CoefMonomial::pc(2, 3));
}

TEST_CASE("degree formula and region disjointness") {
    Window win = Window::centered(20, 20);
    for (const auto& [deg, m] : f2_enumerate(win)) {
        CHECK(m.degree() == deg);
        if (m.is_pc()) {
            CHECK(deg.s <= 0);
            CHECK(deg.w <= deg.s);
        } else {
            CHECK(deg.s >= 0);
            CHECK(deg.w >= deg.s + 2);
            CHECK(m.y >= 1);
        }
        CHECK(f2_group_at(deg.s, deg.w) == m);
    }
    // Group-at and enumeration agree degree by degree.
    auto listed = f2_enumerate(win);
    size_t k = 0;
    for (int s = win.s_min; s <= win.s_max; ++s)
        for (int w = win.w_min; w <= win.w_max; ++w)
            if (f2_group_at(s, w)) ++k;
    CHECK(k == listed.size());
}

TEST_CASE("multiplication examples") {
    auto nc = F2CoefMonomial::nc;
    auto pc = F2CoefMonomial::pc;
    CHECK(f2_multiply(nc(1, 2), pc(1, 1)) == F2Element(nc(0, 1)));
    CHECK(f2_multiply(nc(0, 2), pc(2, 0)) == F2Element::zero());
    CHECK(f2_multiply(nc(0, 1), nc(0, 1)) == F2Element::zero());
    CHECK(f2_multiply(pc(1, 0), pc(0, 1)) == F2Element(pc(1, 1)));
}

TEST_CASE("ring axioms over |s|,|w| <= 12") {
    auto basis = f2_enumerate(Window::centered(12, 12));
    for (const auto& [dx, x] : basis) {
        CHECK(f2_multiply(x, kOne) == F2Element(x));
        for (const auto& [dy, y] : basis) {
            F2Element xy = f2_multiply(x, y);
            CHECK(xy == f2_multiply(y, x));
            if (!xy.is_zero())
                CHECK(xy.terms().begin()->degree() == dx + dy);
        }
    }
    // Associativity on a coarser grid to keep the triple loop affordable.
    std::vector<F2CoefMonomial> sample;
    for (size_t i = 0; i < basis.size(); i += 3) sample.push_back(basis[i].second);
    for (const auto& x : sample)
        for (const auto& y : sample)
            for (const auto& z : sample)
                CHECK(f2_multiply(f2_multiply(x, y), F2Element(z)) ==
                      f2_multiply(F2Element(x), f2_multiply(y, z)));
}

TEST_CASE("sq1 examples and exactness") {
    auto nc = F2CoefMonomial::nc;
    auto pc = F2CoefMonomial::pc;
    CHECK(f2_sq1(pc(1, 0)) == F2Element(pc(0, 1)));
    CHECK(f2_sq1(pc(0, 1)) == F2Element::zero());
    CHECK(f2_sq1(nc(2, 3)) == F2Element(nc(1, 4)));
    CHECK(f2_sq1(nc(0, 3)) == F2Element::zero());

    auto basis = f2_enumerate(Window::centered(20, 20));
    for (const auto& [d, x] : basis) {
        CHECK(f2_sq1(f2_sq1(x)) == F2Element::zero());
        auto dx = f2_sq1(x);
        if (!dx.is_zero()) {
            BiDegree dd = dx.terms().begin()->degree();
            CHECK(dd == BiDegree{d.s - 1, d.w});
        }
    }
    // Derivation rule on all pairs in a smaller window.
    auto small = f2_enumerate(Window::centered(12, 12));
    for (const auto& [dx, x] : small)
        for (const auto& [dy, y] : small) {
            F2Element lhs = f2_sq1(f2_multiply(x, y));
            F2Element rhs = f2_multiply(f2_sq1(x), F2Element(y)) +
                            f2_multiply(F2Element(x), f2_sq1(y));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("enumeration windows") {
    auto narrow = f2_enumerate({0, 0, -2, 2, 0});
    REQUIRE(narrow.size() == 4);
    CHECK(narrow[0].second == F2CoefMonomial::pc(2, 0));
    CHECK(narrow[0].first == BiDegree{0, -2});
    CHECK(narrow[1].second == F2CoefMonomial::pc(1, 0));
    CHECK(narrow[2].second == F2CoefMonomial::pc(0, 0));
    CHECK(narrow[3].second == F2CoefMonomial::nc(0, 1));

    CHECK(f2_enumerate({1, 0, 0, 0, 0}).empty());

    auto unit = f2_enumerate(Window::centered(1, 1));
    REQUIRE(unit.size() == 3);
    CHECK(unit[0].first == BiDegree{-1, -1});
    CHECK(unit[1].first == BiDegree{0, -1});
    CHECK(unit[2].first == BiDegree{0, 0});
}

TEST_CASE("display grammar") {
    CHECK(F2CoefMonomial::pc(0, 0).display() == "1");
    CHECK(F2CoefMonomial::pc(1, 0).display() == "t");
    CHECK(F2CoefMonomial::pc(3, 2).display() == "t^3 r^2");
    CHECK(F2CoefMonomial::pc(0, 1).display() == "r");
    CHECK(F2CoefMonomial::nc(0, 1).display() == "g/t");
    CHECK(F2CoefMonomial::nc(0, 3).display() == "g/t^3");
    CHECK(F2CoefMonomial::nc(2, 2).display() == "g/(r^2 t^2)");
    CHECK(F2CoefMonomial::nc(1, 1).display() == "g/(r t)");
    F2Element sum = F2Element(F2CoefMonomial::pc(2, 0));
    sum += F2Element(F2CoefMonomial::pc(2, 0));
    CHECK(sum.display() == "0");
}
