#pragma once

#include <compare>
#include <cstdint>

namespace c2eff {

// Bigraded degree (stem s, weight w).  The coweight s - w counts trivial
// representation summands in the equivariant degree.
struct BiDegree {
    int s = 0;
    int w = 0;

    int coweight() const { return s - w; }

    friend BiDegree operator+(BiDegree a, BiDegree b) { return {a.s + b.s, a.w + b.w}; }
    friend BiDegree operator-(BiDegree a, BiDegree b) { return {a.s - b.s, a.w - b.w}; }
    auto operator<=>(const BiDegree&) const = default;
};

// Trigraded degree (stem s, slice filtration q, weight w).  d_r shifts by
// (-1, +r, 0).
struct TriDegree {
    int s = 0;
    int q = 0;
    int w = 0;

    int coweight() const { return s - w; }
    BiDegree bidegree() const { return {s, w}; }

    friend TriDegree operator+(TriDegree a, TriDegree b) {
        return {a.s + b.s, a.q + b.q, a.w + b.w};
    }
    auto operator<=>(const TriDegree&) const = default;
};

inline TriDegree d1_shift(TriDegree t) { return {t.s - 1, t.q + 1, t.w}; }

// A finite computation region.
struct Window {
    int s_min = 0;
    int s_max = -1;
    int w_min = 0;
    int w_max = -1;
    int q_max = 0;

    static Window centered(int s_radius, int w_radius, int q_max = 0) {
        return {-s_radius, s_radius, -w_radius, w_radius, q_max};
    }

    bool empty() const { return s_min > s_max || w_min > w_max; }
    bool contains(BiDegree d) const {
        return d.s >= s_min && d.s <= s_max && d.w >= w_min && d.w <= w_max;
    }
    bool contains(TriDegree t) const {
        return contains(t.bidegree()) && t.q >= 0 && t.q <= q_max;
    }
};

}  // namespace c2eff
