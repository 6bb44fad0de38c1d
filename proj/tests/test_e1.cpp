#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "c2eff/e1.hpp"

using namespace c2eff;

namespace {

const auto pc = F2CoefMonomial::pc;
const auto nc = F2CoefMonomial::nc;

E1Basis h1() { return E1Basis::h_part(pc(0, 0), 1, 0); }
E1Basis tau_h1() { return E1Basis::h_part(pc(1, 0), 1, 0); }
E1Basis v1_sq() { return E1Basis::z_part(Z2Generator::tau_even(0), 1); }

TriDegree degree_of(const E1Element& x) {
    REQUIRE(!x.is_zero());
    TriDegree t = x.terms().begin()->first.tridegree();
    for (const auto& [b, c] : x.terms()) CHECK(b.tridegree() == t);
    return t;
}

}  // namespace

TEST_CASE("enumeration at fixed tridegrees") {
    auto a = e1_enumerate(TriDegree{1, 1, 1});
    REQUIRE(a.size() == 1);
    CHECK(a[0] == h1());

    auto b = e1_enumerate(TriDegree{4, 2, 2});
    REQUIRE(b.size() == 1);
    CHECK(b[0] == v1_sq());

    auto c = e1_enumerate(TriDegree{0, 1, 0});
    REQUIRE(c.size() == 1);
    CHECK(c[0] == E1Basis::h_part(pc(0, 1), 1, 0));

    for (const auto& bb : e1_enumerate(Window::centered(14, 14, 18)))
        CHECK(e1_enumerate(bb.tridegree()).size() >= 1);
}

TEST_CASE("tridegree bookkeeping") {
    for (const auto& b : e1_enumerate(Window::centered(10, 10, 14))) {
        TriDegree t = b.tridegree();
        if (b.is_z_part()) {
            CHECK(t.q == 2 * b.m);
        } else {
            CHECK(t.q == b.p + 2 * b.m);
            CHECK(b.p >= 1);
        }
        // Enumeration at t returns this element exactly once.
        auto at = e1_enumerate(t);
        CHECK(std::count(at.begin(), at.end(), b) == 1);
    }
}

TEST_CASE("twisted square of tau h1") {
    E1Element sq = e1_multiply(tau_h1(), tau_h1());
    E1Element expected;
    expected += E1Element(E1Basis::h_part(pc(2, 0), 2, 0));
    expected += E1Element(E1Basis::z_part(Z2Generator::rho_tau(2, 0), 1));
    CHECK(sq == expected);
}

TEST_CASE("multiplication examples") {
    CHECK(e1_multiply(h1(), h1()) == E1Element(E1Basis::h_part(pc(0, 0), 2, 0)));

    E1Element prod = e1_multiply(E1Basis::h_part(nc(4, 3), 1, 0), tau_h1());
    E1Element expected;
    expected += E1Element(E1Basis::h_part(nc(4, 2), 2, 0));
    expected += E1Element(E1Basis::z_part(Z2Generator::nc_even(2, 2), 1));
    CHECK(prod == expected);

    CHECK(e1_multiply(v1_sq(), h1()) == E1Element(E1Basis::h_part(pc(0, 0), 1, 1)));
}

TEST_CASE("factorization examples and round trip") {
    using K = Atom::Kind;
    auto kinds = [](const std::vector<Atom>& v) {
        std::vector<K> out;
        for (const auto& a : v) out.push_back(a.kind);
        return out;
    };
    CHECK(kinds(e1_factorize(E1Basis::h_part(pc(3, 2), 2, 1))) ==
          std::vector<K>{K::Rho, K::Rho, K::TauSq, K::TauH1, K::H1, K::V1Sq});
    auto f = e1_factorize(E1Basis::h_part(nc(2, 3), 1, 0));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == Atom::z_atom(Z2Generator::nc_even(2, 2)));
    CHECK(f[1] == Atom::tau_h1());
    CHECK(kinds(e1_factorize(E1Basis::z_part(Z2Generator::tau_even(2), 1))) ==
          std::vector<K>{K::TauSq, K::TauSq, K::V1Sq});

    // Product of the factors recovers the element with coefficient one.
    for (const auto& b : e1_enumerate(Window::centered(10, 10, 12))) {
        E1Element prod(E1Basis::one());
        for (const auto& atom : e1_factorize(b))
            prod = e1_multiply(prod, E1Element(atom.element()));
        CHECK(prod == E1Element(b));
    }
}

TEST_CASE("d1 closed-form samples") {
    CHECK(e1_d1(E1Basis::z_part(Z2Generator::tau_even(1), 0)) ==
          E1Element(E1Basis::h_part(pc(1, 2), 1, 0)));
    CHECK(e1_d1(v1_sq()) == E1Element(E1Basis::h_part(pc(1, 0), 3, 0)));
    CHECK(e1_d1(E1Basis::z_part(Z2Generator::nc_even(2, 1), 0)) ==
          E1Element(E1Basis::h_part(nc(0, 3), 1, 0)));
    CHECK(e1_d1(E1Basis::h_part(pc(0, 1), 1, 0)).is_zero());

    E1Element d = e1_d1(E1Basis::h_part(nc(6, 1), 1, 0));
    E1Element expected;
    expected += E1Element(E1Basis::h_part(nc(4, 2), 2, 0));
    expected += E1Element(E1Basis::z_part(Z2Generator::nc_even(2, 2), 1));
    CHECK(d == expected);
}

TEST_CASE("d1 worked family") {
    for (int i = 4; i <= 7; ++i)
        for (int k = 0; k <= 1; ++k) {
            E1Element d = e1_d1(E1Basis::h_part(nc(i, 4 * k + 1), 1, 0));
            E1Element expected;
            expected += E1Element(E1Basis::h_part(nc(i - 2, 4 * k + 2), 2, 0));
            expected += E1Element(
                E1Basis::z_part(Z2Generator::nc_even(i - 4, 2 * k + 2), 1));
            CHECK(d == expected);
        }
}

TEST_CASE("d1 squares to zero and shifts degree by (-1,+1,0)") {
    for (const auto& b : e1_enumerate(Window::centered(14, 14, 18))) {
        E1Element d = e1_d1(b);
        if (!d.is_zero()) CHECK(degree_of(d) == d1_shift(b.tridegree()));
        CHECK(e1_d1(d).is_zero());
    }
}

namespace {

void check_leibniz(const E1Basis& x, const E1Basis& y) {
    E1Element lhs = e1_d1(e1_multiply(E1Element(x), E1Element(y)));
    E1Element rhs =
        e1_multiply(e1_d1(x), E1Element(y)) + e1_multiply(E1Element(x), e1_d1(y));
    CHECK(lhs == rhs);
}

}  // namespace

TEST_CASE("Leibniz rule, exhaustive on a small window") {
    auto basis = e1_enumerate(Window::centered(4, 4, 6));
    for (const auto& x : basis)
        for (const auto& y : basis) check_leibniz(x, y);
}

TEST_CASE("Leibniz rule, seeded sample over a large window") {
    auto basis = e1_enumerate(Window::centered(12, 12, 16));
    std::mt19937 rng(20260824);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    for (int i = 0; i < 20000; ++i) check_leibniz(basis[pick(rng)], basis[pick(rng)]);
}

TEST_CASE("factorization independence for even NC coefficients") {
    // b = NC(i,j)h1^p v^2m with even j also factors with one more integral
    // class and an explicit TauSq: ZAtom(NC at (i,j+2)) * TauSq * h1^p * v^2m.
    // Leibniz over that list must give the same d1.
    for (const auto& b : e1_enumerate(Window::centered(12, 12, 14))) {
        if (b.is_z_part() || b.c.is_pc() || b.c.y % 2 != 0) continue;
        std::vector<E1Element> factors;
        factors.emplace_back(
            E1Basis::z_part(Z2Generator::nc_even(b.c.x, b.c.y / 2 + 1), 0));
        factors.emplace_back(E1Basis::z_part(Z2Generator::tau_even(1), 0));
        for (int i = 0; i < b.p; ++i)
            factors.emplace_back(E1Basis::h_part(pc(0, 0), 1, 0));
        for (int i = 0; i < b.m; ++i) factors.emplace_back(v1_sq());
        // The alternative product really is b.
        E1Element prod(E1Basis::one());
        for (const auto& f : factors) prod = e1_multiply(prod, f);
        REQUIRE(prod == E1Element(b));
        E1Element alt;
        for (size_t i = 0; i < factors.size(); ++i) {
            E1Element term = e1_d1(factors[i]);
            for (size_t j = 0; j < factors.size(); ++j)
                if (j != i) term = e1_multiply(term, factors[j]);
            alt += term;
        }
        CHECK(alt == e1_d1(b));
    }
    // The TauH1 route: NC(i,j)h1^2 appears in TauH1 * NC(i,j+1)h1, and d1 of
    // that product is forced by d1(TauH1) = 0.
    for (int i = 0; i <= 8; ++i)
        for (int j = 2; j <= 8; j += 2) {
            E1Element bp(E1Basis::h_part(nc(i, j + 1), 1, 0));
            E1Element prod = e1_multiply(E1Element(tau_h1()), bp);
            CHECK(e1_d1(prod) == e1_multiply(E1Element(tau_h1()), e1_d1(bp)));
        }
}

TEST_CASE("all h-part elements have additive order two") {
    E1Element twice = E1Element(h1(), 2);
    CHECK(twice.is_zero());
    for (const auto& b : e1_enumerate(Window::centered(8, 8, 8)))
        if (b.has_order_two()) CHECK(E1Element(b, 2).is_zero());
}

TEST_CASE("display grammar") {
    CHECK(h1().display() == "h1");
    CHECK(tau_h1().display() == "t h1");
    CHECK(v1_sq().display() == "v^2");
    CHECK(E1Basis::one().display() == "1");
    CHECK(E1Basis::h_part(nc(0, 1), 1, 1).display() == "g/t h1 v^2");
    CHECK(E1Basis::z_part(Z2Generator::theta_odd(1), 1).display() == "g/t v^2");
    CHECK(E1Basis::h_part(pc(0, 0), 3, 0).display() == "h1^3");
    CHECK(E1Element(E1Basis::z_part(Z2Generator::tau_even(1), 0), 2).display() ==
          "2 t^2");
}
