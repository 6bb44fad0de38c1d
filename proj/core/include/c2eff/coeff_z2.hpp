#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "c2eff/coeff_f2.hpp"
#include "c2eff/grading.hpp"

namespace c2eff {

using Int = mpz_class;

// Basis generator of the 2-complete integral coefficient ring.  Weights are
// normalized so that t sits at (0,-1), hence t^2 at (0,-2).
struct Z2Generator {
    enum class Kind : std::uint8_t {
        TauEven,  // t^2k           at (0, -2k),       free over Z2
        ThetaOdd, // g/t^(2m-1)     at (0, 2m),        free over Z2
        RhoTau,   // r^b t^2a       at (-b, -2a-b),    order 2
        NCEven,   // g/(r^i t^2m)   at (i, i+2m+1),    order 2
    };

    Kind kind = Kind::TauEven;
    int x = 0;  // TauEven: k.  ThetaOdd: m.  RhoTau: b.  NCEven: i.
    int y = 0;  // RhoTau: a.  NCEven: m.

    static Z2Generator tau_even(int k) { return {Kind::TauEven, k, 0}; }
    static Z2Generator theta_odd(int m) { return {Kind::ThetaOdd, m, 0}; }
    static Z2Generator rho_tau(int b, int a) { return {Kind::RhoTau, b, a}; }
    static Z2Generator nc_even(int i, int m) { return {Kind::NCEven, i, m}; }
    static Z2Generator one() { return tau_even(0); }

    // True for the Z2-free generators, false for the order-2 ones.
    bool is_free() const { return kind == Kind::TauEven || kind == Kind::ThetaOdd; }
    bool is_one() const { return kind == Kind::TauEven && x == 0; }

    BiDegree degree() const {
        switch (kind) {
            case Kind::TauEven: return {0, -2 * x};
            case Kind::ThetaOdd: return {0, 2 * x};
            case Kind::RhoTau: return {-x, -2 * y - x};
            case Kind::NCEven: return {x, x + 2 * y + 1};
        }
        return {};
    }

    std::string display() const;
    auto operator<=>(const Z2Generator&) const = default;
};

// Z-linear combination of generators of one common bidegree.  Coefficients on
// order-2 generators are kept reduced mod 2; zero coefficients are dropped.
class Z2Element {
public:
    Z2Element() = default;
    Z2Element(Z2Generator g, Int c = 1) { add(g, c); }

    static Z2Element zero() { return {}; }

    bool is_zero() const { return coef_.empty(); }
    const std::map<Z2Generator, Int>& terms() const { return coef_; }

    void add(Z2Generator g, const Int& c);
    Z2Element& operator+=(const Z2Element& o) {
        for (const auto& [g, c] : o.coef_) add(g, c);
        return *this;
    }
    friend Z2Element operator+(Z2Element a, const Z2Element& b) { return a += b; }
    friend Z2Element operator*(const Int& c, const Z2Element& e) {
        Z2Element out;
        for (const auto& [g, k] : e.coef_) out.add(g, c * k);
        return out;
    }

    std::string display() const;
    auto operator<=>(const Z2Element&) const = default;

private:
    std::map<Z2Generator, Int> coef_;
};

// Class on the E1-page of the 2-Bockstein spectral sequence; t_power is the
// Bockstein filtration.
struct BocksteinClass {
    F2CoefMonomial monomial;
    int t_power = 0;
    auto operator<=>(const BocksteinClass&) const = default;
};

using BocksteinD1 = std::function<std::optional<BocksteinClass>(const BocksteinClass&)>;

std::optional<BocksteinClass> bockstein_d1(const BocksteinClass& x);

// Isomorphism type of one bidegree of the Bockstein E-infinity page.
struct BocksteinGroup {
    enum class Order : std::uint8_t { Zero, Two, Z2 };
    Order order = Order::Zero;
    std::optional<Z2Generator> generator;
    bool is_zero() const { return order == Order::Zero; }
    auto operator<=>(const BocksteinGroup&) const = default;
};

// E2 = E-infinity of the t-graded complex, computed degreewise from d1.
std::map<BiDegree, BocksteinGroup> bockstein_einf(const Window& window,
                                                  const BocksteinD1& d1 = bockstein_d1);

// The unique generator at (s,w) per the closed-form region description, if any.
std::optional<Z2Generator> z2_generator_at(int s, int w);

Z2Element z2_multiply(Z2Generator x, Z2Generator y);
Z2Element z2_multiply(const Z2Element& x, const Z2Element& y);

// Mod-2 reduction (induced by HZ -> HF2).
F2Element z2_reduce(Z2Generator g);
F2Element z2_reduce(const Z2Element& x);

// Integral Bockstein (connecting homomorphism), degree (-1, 0).
Z2Element z2_integral_bockstein(F2CoefMonomial x);
Z2Element z2_integral_bockstein(const F2Element& x);

// Underlying image of the s = 0 row generators under the forgetful functor:
// 1 on t^2k, 2 on g/t^(2m-1), 0 on the order-2 generators.
Int z2_underlying_image(const Z2Element& x);

struct ClosedFormMismatch {
    BiDegree degree;
    std::string expected;
    std::string computed;
};

std::vector<ClosedFormMismatch> z2_verify_closed_form(const Window& window,
                                                      const BocksteinD1& d1 = bockstein_d1);

}  // namespace c2eff
