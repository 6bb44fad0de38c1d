#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "c2eff/grading.hpp"

namespace c2eff {

// Basis monomial of the mod-2 coefficient ring.  Two multiplicative regions:
//   PC(a,b) = t^a r^b            in degree (-b, -a-b)
//   NC(i,j) = g/(r^i t^j), j>=1  in degree (i, i+j+1)
// There is at most one monomial per bidegree.
struct F2CoefMonomial {
    enum class Cone : std::uint8_t { PC, NC };

    Cone cone = Cone::PC;
    int x = 0;  // PC: exponent of t.  NC: exponent of r.
    int y = 0;  // PC: exponent of r.  NC: exponent of t.

    static F2CoefMonomial pc(int a, int b) { return {Cone::PC, a, b}; }
    static F2CoefMonomial nc(int i, int j) { return {Cone::NC, i, j}; }
    static F2CoefMonomial one() { return pc(0, 0); }

    bool is_pc() const { return cone == Cone::PC; }
    bool is_one() const { return is_pc() && x == 0 && y == 0; }

    BiDegree degree() const {
        if (is_pc()) return {-y, -x - y};
        return {x, x + y + 1};
    }

    std::string display() const;
    auto operator<=>(const F2CoefMonomial&) const = default;
};

// Formal F2-sum of monomials of one common bidegree.  Addition is mod 2, so
// an element is just the set of its monomials; empty set = zero.
class F2Element {
public:
    F2Element() = default;
    F2Element(F2CoefMonomial m) { terms_.insert(m); }

    static F2Element zero() { return {}; }

    bool is_zero() const { return terms_.empty(); }
    const std::set<F2CoefMonomial>& terms() const { return terms_; }

    void add(F2CoefMonomial m) {
        auto [it, inserted] = terms_.insert(m);
        if (!inserted) terms_.erase(it);
    }
    F2Element& operator+=(const F2Element& o) {
        for (const auto& m : o.terms_) add(m);
        return *this;
    }
    friend F2Element operator+(F2Element a, const F2Element& b) { return a += b; }

    std::string display() const;
    auto operator<=>(const F2Element&) const = default;

private:
    std::set<F2CoefMonomial> terms_;
};

// The unique basis monomial at (s,w), if the group there is nonzero.
std::optional<F2CoefMonomial> f2_group_at(int s, int w);

F2Element f2_multiply(F2CoefMonomial x, F2CoefMonomial y);
F2Element f2_multiply(const F2Element& x, const F2Element& y);

// Sq^1, degree (-1, 0).
F2Element f2_sq1(F2CoefMonomial x);
F2Element f2_sq1(const F2Element& x);

// All monomials with degree in the window, ordered lexicographically on (s,w).
std::vector<std::pair<BiDegree, F2CoefMonomial>> f2_enumerate(const Window& window);

}  // namespace c2eff
