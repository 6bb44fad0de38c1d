#pragma once

#include <map>
#include <string>
#include <vector>

#include "c2eff/coeff_f2.hpp"
#include "c2eff/coeff_z2.hpp"
#include "c2eff/grading.hpp"

namespace c2eff {

// Basis element of the tri-graded first page.  Two families:
//   HPart(c,p,m) = c * h1^p * v^2m   (c mod-2 monomial, p >= 1; order 2)
//   ZPart(z,m)   = z * v^2m          (z integral generator; order from z)
struct E1Basis {
    enum class Kind : std::uint8_t { ZPart, HPart };

    Kind kind = Kind::ZPart;
    Z2Generator z;     // ZPart only
    F2CoefMonomial c;  // HPart only
    int p = 0;         // HPart only, >= 1
    int m = 0;

    static E1Basis z_part(Z2Generator z, int m) {
        E1Basis b;
        b.kind = Kind::ZPart;
        b.z = z;
        b.m = m;
        return b;
    }
    static E1Basis h_part(F2CoefMonomial c, int p, int m) {
        E1Basis b;
        b.kind = Kind::HPart;
        b.c = c;
        b.p = p;
        b.m = m;
        return b;
    }
    static E1Basis one() { return z_part(Z2Generator::one(), 0); }

    bool is_z_part() const { return kind == Kind::ZPart; }
    // True when the basis element generates a group of order 2.
    bool has_order_two() const { return kind == Kind::HPart || !z.is_free(); }

    TriDegree tridegree() const {
        if (is_z_part()) {
            BiDegree d = z.degree();
            return {d.s + 4 * m, 2 * m, d.w + 2 * m};
        }
        BiDegree d = c.degree();
        return {d.s + p + 4 * m, p + 2 * m, d.w + p + 2 * m};
    }

    std::string display() const;
    auto operator<=>(const E1Basis&) const = default;
};

// Integer combination of basis elements of one tridegree; coefficients on
// order-2 elements are kept reduced mod 2.
class E1Element {
public:
    E1Element() = default;
    E1Element(E1Basis b, Int coef = 1) { add(b, coef); }

    static E1Element zero() { return {}; }

    bool is_zero() const { return coef_.empty(); }
    const std::map<E1Basis, Int>& terms() const { return coef_; }

    void add(E1Basis b, const Int& c);
    E1Element& operator+=(const E1Element& o) {
        for (const auto& [b, c] : o.coef_) add(b, c);
        return *this;
    }
    friend E1Element operator+(E1Element a, const E1Element& b) { return a += b; }
    friend E1Element operator*(const Int& c, const E1Element& e) {
        E1Element out;
        for (const auto& [b, k] : e.coef_) out.add(b, c * k);
        return out;
    }

    std::string display() const;
    auto operator<=>(const E1Element&) const = default;

private:
    std::map<E1Basis, Int> coef_;
};

// All basis elements of the given tridegree, in the canonical sort order.
std::vector<E1Basis> e1_enumerate(const TriDegree& t);
// All basis elements with degree in the window and 0 <= q <= q_max.
std::vector<E1Basis> e1_enumerate(const Window& window);

E1Element e1_multiply(const E1Basis& x, const E1Basis& y);
E1Element e1_multiply(const E1Element& x, const E1Element& y);

// Multiplicative atom of the factorization used by the Leibniz engine.
struct Atom {
    enum class Kind : std::uint8_t { Rho, H1, TauH1, TauSq, V1Sq, ZAtom };
    Kind kind = Kind::Rho;
    Z2Generator z;  // ZAtom only

    static Atom rho() { return {Kind::Rho, {}}; }
    static Atom h1() { return {Kind::H1, {}}; }
    static Atom tau_h1() { return {Kind::TauH1, {}}; }
    static Atom tau_sq() { return {Kind::TauSq, {}}; }
    static Atom v1_sq() { return {Kind::V1Sq, {}}; }
    static Atom z_atom(Z2Generator z) { return {Kind::ZAtom, z}; }

    E1Basis element() const;
    E1Element d1() const;
    auto operator<=>(const Atom&) const = default;
};

// Canonical factorization; the product of the returned atoms recovers b with
// coefficient exactly 1.
std::vector<Atom> e1_factorize(const E1Basis& b);

// d1 via the Leibniz rule over e1_factorize; shifts degree by (-1,+1,0).
E1Element e1_d1(const E1Basis& b);
E1Element e1_d1(const E1Element& x);

}  // namespace c2eff
