#include "c2eff/coeff_z2.hpp"

#include <cassert>
#include <sstream>

namespace c2eff {

std::string Z2Generator::display() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::TauEven:
            if (x == 0) return "1";
            out << "t^" << 2 * x;
            break;
        case Kind::ThetaOdd:
            out << "g/t";
            if (2 * x - 1 != 1) out << '^' << 2 * x - 1;
            break;
        case Kind::RhoTau:
            out << 'r';
            if (x != 1) out << '^' << x;
            if (y != 0) out << " t^" << 2 * y;
            break;
        case Kind::NCEven:
            if (x == 0) {
                out << "g/t^" << 2 * y;
            } else {
                out << "g/(r";
                if (x != 1) out << '^' << x;
                out << " t^" << 2 * y << ')';
            }
            break;
    }
    return out.str();
}

void Z2Element::add(Z2Generator g, const Int& c) {
    Int v = c;
    if (!g.is_free()) {
        v %= 2;
        if (v < 0) v += 2;
    }
    if (v == 0) return;
    auto it = coef_.find(g);
    if (it == coef_.end()) {
        coef_.emplace(g, v);
        return;
    }
    it->second += v;
    if (!g.is_free()) {
        it->second %= 2;
        if (it->second < 0) it->second += 2;
    }
    if (it->second == 0) coef_.erase(it);
}

std::string Z2Element::display() const {
    if (coef_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : coef_) {
        if (!first) out << " + ";
        first = false;
        if (c != 1) out << c.get_str() << ' ';
        out << g.display();
    }
    return out.str();
}

std::optional<BocksteinClass> bockstein_d1(const BocksteinClass& x) {
    F2Element dx = f2_sq1(x.monomial);
    if (dx.is_zero()) return std::nullopt;
    return BocksteinClass{*dx.terms().begin(), x.t_power + 1};
}

std::optional<Z2Generator> z2_generator_at(int s, int w) {
    if (s == 0 && w % 2 == 0) {
        if (w <= 0) return Z2Generator::tau_even(-w / 2);
        return Z2Generator::theta_odd(w / 2);
    }
    if (s <= -1 && w <= s && (s - w) % 2 == 0)
        return Z2Generator::rho_tau(-s, (s - w) / 2);
    if (s >= 0 && w >= s + 3 && (w - s) % 2 == 1)
        return Z2Generator::nc_even(s, (w - s - 1) / 2);
    return std::nullopt;
}

namespace {

// Name a surviving Bockstein class by its filtration-0 representative.
std::optional<Z2Generator> name_survivor(F2CoefMonomial m) {
    if (m.is_pc()) {
        if (m.x % 2 != 0) return std::nullopt;
        if (m.y == 0) return Z2Generator::tau_even(m.x / 2);
        return Z2Generator::rho_tau(m.y, m.x / 2);
    }
    if (m.y % 2 == 1) {
        if (m.x != 0) return std::nullopt;
        return Z2Generator::theta_odd((m.y + 1) / 2);
    }
    return Z2Generator::nc_even(m.x, m.y / 2);
}

}  // namespace

std::map<BiDegree, BocksteinGroup> bockstein_einf(const Window& window,
                                                  const BocksteinD1& d1) {
    // One monomial per bidegree, so the t-towers interact in a simple way:
    // a class supporting d1 dies, a class hit by d1 keeps only filtration 0,
    // and an untouched class keeps its whole t-tower.
    std::map<BiDegree, BocksteinGroup> out;
    for (int s = window.s_min; s <= window.s_max; ++s) {
        for (int w = window.w_min; w <= window.w_max; ++w) {
            BocksteinGroup group;
            auto m = f2_group_at(s, w);
            if (m && !d1({*m, 0})) {
                bool hit = false;
                if (auto pre = f2_group_at(s + 1, w)) {
                    auto dpre = d1({*pre, 0});
                    hit = dpre && dpre->monomial == *m;
                }
                group.order = hit ? BocksteinGroup::Order::Two : BocksteinGroup::Order::Z2;
                group.generator = name_survivor(*m);
            }
            out[{s, w}] = group;
        }
    }
    return out;
}

Z2Element z2_multiply(Z2Generator x, Z2Generator y) {
    using Kind = Z2Generator::Kind;
    if (x.kind > y.kind) std::swap(x, y);
    switch (x.kind) {
        case Kind::TauEven: {
            int k = x.x;
            switch (y.kind) {
                case Kind::TauEven: return Z2Generator::tau_even(k + y.x);
                case Kind::ThetaOdd:
                    if (k < y.x) return Z2Generator::theta_odd(y.x - k);
                    return {Z2Generator::tau_even(k - y.x), 2};
                case Kind::RhoTau: return Z2Generator::rho_tau(y.x, y.y + k);
                case Kind::NCEven:
                    if (k < y.y) return Z2Generator::nc_even(y.x, y.y - k);
                    return Z2Element::zero();
            }
            break;
        }
        case Kind::ThetaOdd:
            if (y.kind == Kind::ThetaOdd)
                return {Z2Generator::theta_odd(x.x + y.x), 2};
            return Z2Element::zero();  // ThetaOdd * RhoTau, ThetaOdd * NCEven
        case Kind::RhoTau:
            if (y.kind == Kind::RhoTau)
                return Z2Generator::rho_tau(x.x + y.x, x.y + y.y);
            // RhoTau * NCEven
            if (y.x >= x.x && y.y > x.y)
                return Z2Generator::nc_even(y.x - x.x, y.y - x.y);
            return Z2Element::zero();
        case Kind::NCEven:
            return Z2Element::zero();
    }
    return Z2Element::zero();
}

Z2Element z2_multiply(const Z2Element& x, const Z2Element& y) {
    Z2Element out;
    for (const auto& [g, c] : x.terms())
        for (const auto& [h, d] : y.terms()) out += (c * d) * z2_multiply(g, h);
    return out;
}

F2Element z2_reduce(Z2Generator g) {
    using Kind = Z2Generator::Kind;
    switch (g.kind) {
        case Kind::TauEven: return F2CoefMonomial::pc(2 * g.x, 0);
        case Kind::ThetaOdd: return F2CoefMonomial::nc(0, 2 * g.x - 1);
        case Kind::RhoTau: return F2CoefMonomial::pc(2 * g.y, g.x);
        case Kind::NCEven: return F2CoefMonomial::nc(g.x, 2 * g.y);
    }
    return F2Element::zero();
}

F2Element z2_reduce(const Z2Element& x) {
    F2Element out;
    for (const auto& [g, c] : x.terms())
        if (c % 2 != 0) out += z2_reduce(g);
    return out;
}

Z2Element z2_integral_bockstein(F2CoefMonomial x) {
    if (x.is_pc()) {
        if (x.x % 2 == 1) return Z2Generator::rho_tau(x.y + 1, (x.x - 1) / 2);
        return Z2Element::zero();
    }
    if (x.y % 2 == 1 && x.x >= 1) return Z2Generator::nc_even(x.x - 1, (x.y + 1) / 2);
    return Z2Element::zero();
}

Z2Element z2_integral_bockstein(const F2Element& x) {
    Z2Element out;
    for (const auto& m : x.terms()) out += z2_integral_bockstein(m);
    return out;
}

Int z2_underlying_image(const Z2Element& x) {
    Int out = 0;
    for (const auto& [g, c] : x.terms()) {
        if (g.kind == Z2Generator::Kind::TauEven) out += c;
        else if (g.kind == Z2Generator::Kind::ThetaOdd) out += 2 * c;
    }
    return out;
}

std::vector<ClosedFormMismatch> z2_verify_closed_form(const Window& window,
                                                      const BocksteinD1& d1) {
    auto einf = bockstein_einf(window, d1);
    std::vector<ClosedFormMismatch> out;
    for (const auto& [deg, group] : einf) {
        auto expected = z2_generator_at(deg.s, deg.w);
        std::string want = expected ? (expected->is_free() ? "Z2 " : "F2 ") + expected->display()
                                    : std::string("0");
        std::string got = "0";
        if (!group.is_zero()) {
            got = (group.order == BocksteinGroup::Order::Z2 ? "Z2 " : "F2 ");
            got += group.generator ? group.generator->display() : "?";
        }
        bool match = false;
        if (!expected && group.is_zero()) {
            match = true;
        } else if (expected && !group.is_zero()) {
            bool want_free = expected->is_free();
            bool got_free = group.order == BocksteinGroup::Order::Z2;
            match = want_free == got_free && group.generator == expected;
        }
        if (!match) out.push_back({deg, want, got});
    }
    return out;
}

}  // namespace c2eff
