// Acceptance run: twelve checks over the default window, one line each.
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "c2eff/chart.hpp"
#include "c2eff/homotopy.hpp"
#include "c2eff/json_io.hpp"
#include "c2eff/names.hpp"

using namespace c2eff;

namespace {

const Window kWindow = Window::centered(30, 30, 40);

E2Engine g_engine;
int g_failures = 0;

void report(int criterion, bool pass, const char* what, long long detail) {
    static auto last = std::chrono::steady_clock::now();
    auto now = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(now - last).count();
    last = now;
    std::printf("criterion %2d: %s  %s (%lld violations, %.1fs)\n", criterion,
                pass ? "PASS" : "FAIL", what, detail, secs);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

// 1. Closed form for the mod-2 coefficient groups against a brute-force scan
// of both monomial families.
void criterion_coeff_f2() {
    long long bad = 0;
    for (int s = kWindow.s_min; s <= kWindow.s_max; ++s)
        for (int w = kWindow.w_min; w <= kWindow.w_max; ++w) {
            std::vector<F2CoefMonomial> found;
            for (int a = 0; a <= 2 * (kWindow.s_max - kWindow.w_min); ++a)
                for (int b = 0; b <= kWindow.s_max - kWindow.s_min; ++b)
                    if (-b == s && -a - b == w) found.push_back(F2CoefMonomial::pc(a, b));
            for (int i = 0; i <= kWindow.s_max; ++i)
                for (int j = 1; j <= kWindow.w_max - kWindow.s_min; ++j)
                    if (i == s && i + j + 1 == w) found.push_back(F2CoefMonomial::nc(i, j));
            auto at = f2_group_at(s, w);
            if (found.size() > 1 || (found.empty() && at.has_value()) ||
                (found.size() == 1 && (!at || *at != found[0])))
                ++bad;
        }
    report(1, bad == 0, "mod-2 coefficient closed form", bad);
}

// 2. Bockstein run equals the integral closed form; the two differential
// families hold verbatim for 1 <= k <= 10.
void criterion_bockstein() {
    long long bad = static_cast<long long>(z2_verify_closed_form(kWindow).size());
    for (int k = 1; k <= 10; ++k) {
        auto d = bockstein_d1({F2CoefMonomial::pc(2 * k - 1, 0), 0});
        if (!d || d->monomial != F2CoefMonomial::pc(2 * k - 2, 1) || d->t_power != 1)
            ++bad;
        d = bockstein_d1({F2CoefMonomial::nc(1, 2 * k - 1), 0});
        if (!d || d->monomial != F2CoefMonomial::nc(0, 2 * k)) ++bad;
    }
    report(2, bad == 0, "Bockstein closed form and differential families", bad);
}

// 3. Ring axioms for both coefficient rings (exhaustive triples over
// |s|,|w| <= 12) and the page-1 algebra (exhaustive on a subwindow plus a
// seeded sample of triples from |s|,|w| <= 12, q <= 16).
void criterion_ring_axioms() {
    long long bad = 0;
    const Window coeff_win = Window::centered(12, 12);

    std::vector<F2CoefMonomial> f2b;
    for (const auto& [deg, m] : f2_enumerate(coeff_win)) f2b.push_back(m);
    for (const auto& x : f2b) {
        if (f2_multiply(x, F2CoefMonomial::one()) != F2Element(x)) ++bad;
        for (const auto& y : f2b) {
            F2Element xy = f2_multiply(x, y);
            if (xy != f2_multiply(y, x)) ++bad;
            for (const auto& z : f2b)
                if (f2_multiply(xy, F2Element(z)) !=
                    f2_multiply(F2Element(x), f2_multiply(y, z)))
                    ++bad;
        }
    }

    std::vector<Z2Generator> z2b;
    for (int s = coeff_win.s_min; s <= coeff_win.s_max; ++s)
        for (int w = coeff_win.w_min; w <= coeff_win.w_max; ++w)
            if (auto g = z2_generator_at(s, w)) z2b.push_back(*g);
    Z2Element one(Z2Generator::one());
    for (const auto& x : z2b) {
        if (z2_multiply(Z2Element(x), one) != Z2Element(x)) ++bad;
        for (const auto& y : z2b) {
            Z2Element xy = z2_multiply(x, y);
            if (xy != z2_multiply(y, x)) ++bad;
            for (const auto& z : z2b)
                if (z2_multiply(xy, Z2Element(z)) !=
                    z2_multiply(Z2Element(x), z2_multiply(y, z)))
                    ++bad;
        }
    }

    auto e1_assoc = [&bad](const E1Basis& x, const E1Basis& y, const E1Basis& z) {
        E1Element xy = e1_multiply(E1Element(x), E1Element(y));
        if (e1_multiply(xy, E1Element(z)) !=
            e1_multiply(E1Element(x), e1_multiply(E1Element(y), E1Element(z))))
            ++bad;
    };
    auto small = e1_enumerate(Window::centered(4, 4, 6));
    for (const auto& x : small) {
        if (e1_multiply(E1Element(x), E1Element(E1Basis::one())) != E1Element(x)) ++bad;
        for (const auto& y : small)
            if (e1_multiply(E1Element(x), E1Element(y)) !=
                e1_multiply(E1Element(y), E1Element(x)))
                ++bad;
    }
    auto tiny = e1_enumerate(Window::centered(3, 3, 4));
    for (const auto& x : tiny)
        for (const auto& y : tiny)
            for (const auto& z : tiny) e1_assoc(x, y, z);
    auto big = e1_enumerate(Window::centered(12, 12, 16));
    std::mt19937 rng(20260824);
    std::uniform_int_distribution<size_t> pick(0, big.size() - 1);
    for (int i = 0; i < 20000; ++i) {
        const E1Basis &x = big[pick(rng)], &y = big[pick(rng)], &z = big[pick(rng)];
        if (e1_multiply(E1Element(x), E1Element(y)) !=
            e1_multiply(E1Element(y), E1Element(x)))
            ++bad;
        e1_assoc(x, y, z);
    }

    report(3, bad == 0, "ring axioms for both coefficient rings and the page-1 algebra",
           bad);
}

// 4. Sq1 and the integral Bockstein form an exact pair over the window.
void criterion_steenrod() {
    long long bad = 0;
    auto basis = f2_enumerate(kWindow);
    for (const auto& [deg, x] : basis) {
        if (!f2_sq1(f2_sq1(x)).is_zero()) ++bad;
        if (z2_reduce(z2_integral_bockstein(x)) != f2_sq1(x)) ++bad;
    }
    std::vector<Z2Generator> z2b;
    for (int s = kWindow.s_min; s <= kWindow.s_max; ++s)
        for (int w = kWindow.w_min; w <= kWindow.w_max; ++w)
            if (auto g = z2_generator_at(s, w)) z2b.push_back(*g);
    for (const auto& g : z2b)
        if (!z2_integral_bockstein(z2_reduce(g)).is_zero()) ++bad;
    for (const auto& [dx, x] : basis)
        for (const auto& [dy, y] : basis)
            if (f2_sq1(f2_multiply(x, y)) !=
                f2_multiply(f2_sq1(x), F2Element(y)) + f2_multiply(F2Element(x), f2_sq1(y)))
                ++bad;
    report(4, bad == 0, "Sq1 derivation and Bockstein exactness", bad);
}

// 5. d1 squares to zero on the whole window; Leibniz (exhaustive subwindow
// plus seeded sample over |s|,|w| <= 12, q <= 16); factorization
// independence; the worked negative-cone family.
void criterion_d1() {
    long long bad = 0;
    for (const auto& b : e1_enumerate(kWindow))
        if (!e1_d1(e1_d1(b)).is_zero()) ++bad;

    auto leibniz = [&bad](const E1Basis& x, const E1Basis& y) {
        E1Element lhs = e1_d1(e1_multiply(E1Element(x), E1Element(y)));
        E1Element rhs =
            e1_multiply(e1_d1(x), E1Element(y)) + e1_multiply(E1Element(x), e1_d1(y));
        if (lhs != rhs) ++bad;
    };
    auto small = e1_enumerate(Window::centered(4, 4, 6));
    for (const auto& x : small)
        for (const auto& y : small) leibniz(x, y);
    auto big = e1_enumerate(Window::centered(12, 12, 16));
    std::mt19937 rng(20260824);
    std::uniform_int_distribution<size_t> pick(0, big.size() - 1);
    for (int i = 0; i < 20000; ++i) leibniz(big[pick(rng)], big[pick(rng)]);

    // Alternative factorization of every negative-cone h-part with even
    // denominator exponent gives the same differential.
    for (const auto& b : e1_enumerate(Window::centered(12, 12, 16))) {
        if (b.is_z_part() || b.c.is_pc() || b.c.y % 2 != 0) continue;
        std::vector<E1Element> factors;
        factors.emplace_back(E1Basis::z_part(Z2Generator::nc_even(b.c.x, b.c.y / 2 + 1), 0));
        factors.emplace_back(E1Basis::z_part(Z2Generator::tau_even(1), 0));
        for (int i = 0; i < b.p; ++i)
            factors.emplace_back(E1Basis::h_part(F2CoefMonomial::pc(0, 0), 1, 0));
        for (int i = 0; i < b.m; ++i)
            factors.emplace_back(E1Basis::z_part(Z2Generator::tau_even(0), 1));
        E1Element prod(E1Basis::one());
        for (const auto& f : factors) prod = e1_multiply(prod, f);
        if (prod != E1Element(b)) ++bad;
        E1Element alt;
        for (size_t i = 0; i < factors.size(); ++i) {
            E1Element term = e1_d1(factors[i]);
            for (size_t j = 0; j < factors.size(); ++j)
                if (j != i) term = e1_multiply(term, factors[j]);
            alt += term;
        }
        if (alt != e1_d1(b)) ++bad;
    }

    for (int i = 4; i <= 7; ++i)
        for (int k = 0; k <= 1; ++k) {
            E1Element d = e1_d1(E1Basis::h_part(F2CoefMonomial::nc(i, 4 * k + 1), 1, 0));
            E1Element expected;
            expected += E1Element(E1Basis::h_part(F2CoefMonomial::nc(i - 2, 4 * k + 2), 2, 0));
            expected +=
                E1Element(E1Basis::z_part(Z2Generator::nc_even(i - 4, 2 * k + 2), 1));
            if (d != expected) ++bad;
        }
    report(5, bad == 0, "differential engine: d1^2, Leibniz, factorization, worked family",
           bad);
}

// 6. The twisted square of tau h1.
void criterion_twisted_square() {
    E1Element sq = e1_multiply(E1Basis::h_part(F2CoefMonomial::pc(1, 0), 1, 0),
                               E1Basis::h_part(F2CoefMonomial::pc(1, 0), 1, 0));
    E1Element expected;
    expected += E1Element(E1Basis::h_part(F2CoefMonomial::pc(2, 0), 2, 0));
    expected += E1Element(E1Basis::z_part(Z2Generator::rho_tau(2, 0), 1));
    report(6, sq == expected, "twisted square (tau h1)^2 = tau^2 h1^2 + rho^2 v1^2",
           sq == expected ? 0 : 1);
}

// 7. Every potential higher differential in the window carries a
// justification tag.
void criterion_collapse() {
    long long bad = 0;
    for (const auto& e : collapse_report(g_engine, kWindow))
        if (e.tag == "UNJUSTIFIED") ++bad;
    report(7, bad == 0, "collapse certification", bad);
}

// 8. The infinity page vanishes on coweight 3 mod 4 from coweight -1 up.
void criterion_vanishing_line() {
    long long bad = 0;
    for (int s = kWindow.s_min; s <= kWindow.s_max; ++s)
        for (int w = kWindow.w_min; w <= kWindow.w_max; ++w) {
            int cw = s - w;
            if (cw < -1 || ((cw % 4) + 4) % 4 != 3) continue;
            for (int q = 0; q <= kWindow.q_max; ++q) {
                TriDegree t{s, q, w};
                if (!g_engine.basis(t).empty() && !g_engine.group(t).trivial()) ++bad;
            }
        }
    report(8, bad == 0, "vanishing line at coweight 3 mod 4", bad);
}

// 9. Coweight-0 assembly equals the presented ring, stems -10..16.
void criterion_coweight0() {
    Coweight0Report r = compare_coweight0(g_engine, -10, 16, 24);
    long long bad = static_cast<long long>(r.mismatched_stems.size() +
                                           r.unresolved_stems.size());
    report(9, bad == 0, "coweight-0 groups match the presented ring", bad);
}

// 10. The three periodicity reports follow the theorem patterns.
void criterion_periodicity() {
    long long bad = 0;
    for (const char* kind : {"tau4", "v14", "beta"}) {
        bool saw_injective = false, saw_zero = false;
        for (const auto& e : periodicity_check(g_engine, kind, kWindow)) {
            if (e.violation) ++bad;
            int cw = e.degree.s - e.degree.w;
            saw_injective = saw_injective || e.pattern == "injective";
            saw_zero = saw_zero || e.pattern == "zero";
            if (std::string(kind) != "beta") {
                if (cw == -5 && e.pattern != "zero") ++bad;
                if (cw == -4 && e.pattern != "injective") ++bad;
                if (cw >= -3 && e.pattern != "bijective") ++bad;
            }
        }
        if (!saw_injective) ++bad;
        if (std::string(kind) != "beta" && !saw_zero) ++bad;
    }
    report(10, bad == 0, "tau^4, v1^4 and beta periodicity patterns", bad);
}

// 11. Extension records validate; the named hidden products come out right.
void criterion_extensions() {
    long long bad = 0;
    auto table = extension_table(g_engine, kWindow);
    bad += static_cast<long long>(validate_extensions(g_engine, table).size());
    auto prod = [&](const char* x, const char* y) {
        return detected_product(g_engine, table, x, y);
    };
    if (prod("rho", "alpha") != "h1^3") ++bad;
    if (prod("alpha", "alpha") != "2 g/t^3 v^4") ++bad;
    if (prod("omega", "rho") != "0") ++bad;
    if (prod("omega", "eta") != "0") ++bad;
    if (prod("omega", "beta") != "g/t^3 v^4") ++bad;
    E1Element r3(E1Basis::z_part(Z2Generator::rho_tau(3, 0), 0));
    const NamedElement* beta = find_named("beta");
    if (detected_product(g_engine, table, r3, {-3, 0, -3}, beta->detector,
                         beta->detector_degree) != "g/t h1 v^2")
        ++bad;
    report(11, bad == 0, "extension validation and named hidden products", bad);
}

// 12. Serialization round-trips, the display grammar inverts on the whole
// window, and the charts carry the right glyph counts.
void criterion_roundtrip() {
    long long bad = 0;
    const Window jwin{-6, 6, -6, 6, 12};
    for (const std::string& text :
         {export_pages_json(g_engine, jwin), export_homotopy_json(g_engine, jwin, -4, 8),
          export_document(g_engine, jwin, -4, 8)})
        if (reserialize(text) != text) ++bad;

    for (const auto& b : e1_enumerate(kWindow)) {
        E1Basis p = parse_e1_basis(b.display());
        if (p != b || p.display() != b.display()) ++bad;
    }

    const Window cwin{-6, 6, -6, 6, 8};
    for (int c : {0, 3}) {
        size_t expected = 0;
        for (int s = cwin.s_min; s <= cwin.s_max; ++s) {
            int w = s - c;
            if (w < cwin.w_min || w > cwin.w_max) continue;
            for (int q = 0; q <= cwin.q_max; ++q)
                expected += g_engine.group(TriDegree{s, q, w}).generators.size();
        }
        std::string svg = emit_chart(g_engine, {c, "e2", "svg"}, cwin);
        size_t glyphs = 0;
        for (const char* tag : {"<circle class=\"gen\"", "<rect class=\"gen\""})
            for (size_t at = svg.find(tag); at != std::string::npos;
                 at = svg.find(tag, at + 1))
                ++glyphs;
        if (glyphs != expected) ++bad;
        if (c == 3 && (expected != 0 || svg.find("empty chart") == std::string::npos))
            ++bad;
    }
    report(12, bad == 0, "serialization, name grammar and chart round-trips", bad);
}

}  // namespace

int main() {
    for (void (*step)() : {criterion_coeff_f2, criterion_bockstein, criterion_ring_axioms,
                           criterion_steenrod, criterion_d1, criterion_twisted_square,
                           criterion_collapse, criterion_vanishing_line,
                           criterion_coweight0, criterion_periodicity,
                           criterion_extensions, criterion_roundtrip})
        step();
    std::printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT");
    return g_failures == 0 ? 0 : 1;
}
