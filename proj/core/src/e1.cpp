#include "c2eff/e1.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>
#include <utility>

namespace c2eff {

std::string E1Basis::display() const {
    std::vector<std::string> parts;
    if (is_z_part()) {
        std::string zs = z.display();
        if (zs != "1" || m == 0) parts.push_back(zs);
    } else {
        std::string cs = c.display();
        if (cs != "1") parts.push_back(cs);
        std::ostringstream h;
        h << "h1";
        if (p != 1) h << '^' << p;
        parts.push_back(h.str());
    }
    if (m > 0) {
        std::ostringstream v;
        v << "v^" << 2 * m;
        parts.push_back(v.str());
    }
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += ' ';
        out += s;
    }
    return out;
}

void E1Element::add(E1Basis b, const Int& c) {
    Int v = c;
    if (b.has_order_two()) {
        v %= 2;
        if (v < 0) v += 2;
    }
    if (v == 0) return;
    auto it = coef_.find(b);
    if (it == coef_.end()) {
        coef_.emplace(b, v);
        return;
    }
    it->second += v;
    if (b.has_order_two()) {
        it->second %= 2;
        if (it->second < 0) it->second += 2;
    }
    if (it->second == 0) coef_.erase(it);
}

std::string E1Element::display() const {
    if (coef_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [b, c] : coef_) {
        if (!first) out << " + ";
        first = false;
        std::string bs = b.display();
        if (c != 1) {
            out << c.get_str();
            if (bs != "1") out << ' ' << bs;
        } else {
            out << bs;
        }
    }
    return out.str();
}

std::vector<E1Basis> e1_enumerate(const TriDegree& t) {
    std::vector<E1Basis> out;
    if (t.q < 0) return out;
    if (t.q % 2 == 0) {
        int m = t.q / 2;
        if (auto z = z2_generator_at(t.s - 4 * m, t.w - 2 * m))
            out.push_back(E1Basis::z_part(*z, m));
    }
    for (int m = 0; 2 * m < t.q; ++m) {
        int p = t.q - 2 * m;
        if (auto c = f2_group_at(t.s - p - 4 * m, t.w - p - 2 * m))
            out.push_back(E1Basis::h_part(*c, p, m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<E1Basis> e1_enumerate(const Window& window) {
    std::vector<E1Basis> out;
    for (int s = window.s_min; s <= window.s_max; ++s)
        for (int w = window.w_min; w <= window.w_max; ++w)
            for (int q = 0; q <= window.q_max; ++q) {
                auto at = e1_enumerate(TriDegree{s, q, w});
                out.insert(out.end(), at.begin(), at.end());
            }
    return out;
}

E1Element e1_multiply(const E1Basis& x, const E1Basis& y) {
    using Kind = E1Basis::Kind;
    E1Element out;
    if (x.kind == Kind::ZPart && y.kind == Kind::ZPart) {
        Z2Element prod = z2_multiply(x.z, y.z);
        for (const auto& [g, c] : prod.terms())
            out.add(E1Basis::z_part(g, x.m + y.m), c);
        return out;
    }
    if (x.kind != y.kind) {
        const E1Basis& zp = x.kind == Kind::ZPart ? x : y;
        const E1Basis& hp = x.kind == Kind::HPart ? x : y;
        F2Element prod = f2_multiply(z2_reduce(zp.z), F2Element(hp.c));
        for (const auto& mono : prod.terms())
            out.add(E1Basis::h_part(mono, hp.p, zp.m + hp.m), 1);
        return out;
    }
    // HPart * HPart: twisted product ah1^p * bh1^p' =
    // (ab)h1^(p+p') + Sq1(a)Sq1(b) h1^(p+p'-2) v^2, with the integral lift of
    // the cross term when it lands in slice filtration 0.
    F2Element main = f2_multiply(x.c, y.c);
    for (const auto& mono : main.terms())
        out.add(E1Basis::h_part(mono, x.p + y.p, x.m + y.m), 1);
    if (x.p == 1 && y.p == 1) {
        Z2Element cross = z2_integral_bockstein(f2_multiply(F2Element(x.c), f2_sq1(y.c)));
        for (const auto& [g, c] : cross.terms())
            out.add(E1Basis::z_part(g, x.m + y.m + 1), c);
    } else {
        F2Element cross = f2_multiply(f2_sq1(x.c), f2_sq1(y.c));
        for (const auto& mono : cross.terms())
            out.add(E1Basis::h_part(mono, x.p + y.p - 2, x.m + y.m + 1), 1);
    }
    return out;
}

E1Element e1_multiply(const E1Element& x, const E1Element& y) {
    E1Element out;
    for (const auto& [a, c] : x.terms())
        for (const auto& [b, d] : y.terms()) out += (c * d) * e1_multiply(a, b);
    return out;
}

E1Basis Atom::element() const {
    switch (kind) {
        case Kind::Rho: return E1Basis::z_part(Z2Generator::rho_tau(1, 0), 0);
        case Kind::H1: return E1Basis::h_part(F2CoefMonomial::pc(0, 0), 1, 0);
        case Kind::TauH1: return E1Basis::h_part(F2CoefMonomial::pc(1, 0), 1, 0);
        case Kind::TauSq: return E1Basis::z_part(Z2Generator::tau_even(1), 0);
        case Kind::V1Sq: return E1Basis::z_part(Z2Generator::tau_even(0), 1);
        case Kind::ZAtom: return E1Basis::z_part(z, 0);
    }
    return E1Basis::one();
}

E1Element Atom::d1() const {
    switch (kind) {
        case Kind::Rho:
        case Kind::H1:
        case Kind::TauH1:
            return E1Element::zero();
        case Kind::TauSq:
            return E1Basis::h_part(F2CoefMonomial::pc(1, 2), 1, 0);
        case Kind::V1Sq:
            return E1Basis::h_part(F2CoefMonomial::pc(1, 0), 3, 0);
        case Kind::ZAtom:
            if (z.kind == Z2Generator::Kind::NCEven && z.y % 2 == 1 && z.x >= 2)
                return E1Basis::h_part(F2CoefMonomial::nc(z.x - 2, 2 * z.y + 1), 1, 0);
            return E1Element::zero();
    }
    return E1Element::zero();
}

std::vector<Atom> e1_factorize(const E1Basis& b) {
    std::vector<Atom> out;
    auto push = [&out](Atom a, int count) {
        for (int i = 0; i < count; ++i) out.push_back(a);
    };
    if (b.kind == E1Basis::Kind::HPart) {
        if (b.c.is_pc()) {
            push(Atom::rho(), b.c.y);
            push(Atom::tau_sq(), b.c.x / 2);
            push(Atom::tau_h1(), b.c.x % 2);
            push(Atom::h1(), b.p - b.c.x % 2);
        } else if (b.c.y % 2 == 0) {
            push(Atom::z_atom(Z2Generator::nc_even(b.c.x, b.c.y / 2)), 1);
            push(Atom::h1(), b.p);
        } else {
            push(Atom::z_atom(Z2Generator::nc_even(b.c.x, (b.c.y + 1) / 2)), 1);
            push(Atom::tau_h1(), 1);
            push(Atom::h1(), b.p - 1);
        }
    } else {
        switch (b.z.kind) {
            case Z2Generator::Kind::TauEven:
                push(Atom::tau_sq(), b.z.x);
                break;
            case Z2Generator::Kind::RhoTau:
                push(Atom::rho(), b.z.x);
                push(Atom::tau_sq(), b.z.y);
                break;
            case Z2Generator::Kind::ThetaOdd:
            case Z2Generator::Kind::NCEven:
                push(Atom::z_atom(b.z), 1);
                break;
        }
    }
    push(Atom::v1_sq(), b.m);
    return out;
}

namespace {

// Strips the trailing atom of the canonical factorization: b = a * x exactly
// (the twisted cross terms vanish in every removal case, since one factor is
// either a unit or carries Sq1 = 0).  nullopt when no splitting helps: single
// atoms, pure rho powers, and the unit, all with cheap direct d1.
std::optional<std::pair<E1Basis, Atom>> split_last_atom(const E1Basis& b) {
    using ZK = Z2Generator::Kind;
    if (b.m > 0) {
        E1Basis a = b;
        --a.m;
        return {{a, Atom::v1_sq()}};
    }
    if (b.kind == E1Basis::Kind::HPart) {
        const F2CoefMonomial& c = b.c;
        if (c.is_pc()) {
            if (b.p - c.x % 2 > 0) {
                // trailing h1; at p == 1 the exponent of t is even and the
                // quotient drops to the integral row
                if (b.p == 1)
                    return {{E1Basis::z_part(c.y == 0
                                                 ? Z2Generator::tau_even(c.x / 2)
                                                 : Z2Generator::rho_tau(c.y, c.x / 2),
                                             0),
                             Atom::h1()}};
                E1Basis a = b;
                --a.p;
                return {{a, Atom::h1()}};
            }
            // trailing tau h1: p == 1 with t exponent odd
            int k = (c.x - 1) / 2;
            return {{E1Basis::z_part(
                         c.y == 0 ? Z2Generator::tau_even(k) : Z2Generator::rho_tau(c.y, k),
                         0),
                     Atom::tau_h1()}};
        }
        if (c.y % 2 == 0) {
            if (b.p == 1)
                return {{E1Basis::z_part(Z2Generator::nc_even(c.x, c.y / 2), 0), Atom::h1()}};
            E1Basis a = b;
            --a.p;
            return {{a, Atom::h1()}};
        }
        if (b.p >= 2) {
            E1Basis a = b;
            --a.p;
            return {{a, Atom::h1()}};
        }
        return {{E1Basis::z_part(Z2Generator::nc_even(c.x, (c.y + 1) / 2), 0),
                 Atom::tau_h1()}};
    }
    switch (b.z.kind) {
        case ZK::TauEven: {
            if (b.z.x == 0) return std::nullopt;
            E1Basis a = b;
            --a.z.x;
            return {{a, Atom::tau_sq()}};
        }
        case ZK::RhoTau: {
            if (b.z.y == 0) return std::nullopt;
            E1Basis a = b;
            --a.z.y;
            return {{a, Atom::tau_sq()}};
        }
        default:
            return std::nullopt;
    }
}

E1Element e1_d1_uncached(const E1Basis& b) {
    std::vector<Atom> atoms = e1_factorize(b);
    E1Element out;
    for (size_t i = 0; i < atoms.size(); ++i) {
        E1Element term = atoms[i].d1();
        if (term.is_zero()) continue;
        for (size_t j = 0; j < atoms.size(); ++j) {
            if (j == i) continue;
            term = e1_multiply(term, E1Element(atoms[j].element()));
        }
        out += term;
    }
    return out;
}

}  // namespace

E1Element e1_d1(const E1Basis& b) {
    // Per-thread cache: duplicated work across threads is cheaper than a
    // shared lock held over the Leibniz expansion.
    thread_local std::map<E1Basis, E1Element> cache;
    auto it = cache.find(b);
    if (it != cache.end()) return it->second;
    E1Element out;
    if (auto split = split_last_atom(b)) {
        // d1(a x) = d1(a) x + a d1(x), one cached step per atom
        const auto& [a, x] = *split;
        out = e1_multiply(e1_d1(a), E1Element(x.element()));
        out += e1_multiply(E1Element(a), x.d1());
    } else {
        out = e1_d1_uncached(b);
    }
    cache.emplace(b, out);
    return out;
}

E1Element e1_d1(const E1Element& x) {
    E1Element out;
    for (const auto& [b, c] : x.terms()) out += c * e1_d1(b);
    return out;
}

}  // namespace c2eff
