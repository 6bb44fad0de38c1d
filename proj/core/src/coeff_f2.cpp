#include "c2eff/coeff_f2.hpp"

#include <sstream>

namespace c2eff {

namespace {

void append_power(std::ostringstream& out, const char* sym, int e, bool& first) {
    if (e == 0) return;
    if (!first) out << ' ';
    first = false;
    out << sym;
    if (e != 1) out << '^' << e;
}

}  // namespace

std::string F2CoefMonomial::display() const {
    if (is_pc()) {
        if (is_one()) return "1";
        std::ostringstream out;
        bool first = true;
        append_power(out, "t", x, first);
        append_power(out, "r", y, first);
        return out.str();
    }
    std::ostringstream out;
    out << "g/";
    if (x == 0) {
        out << 't';
        if (y != 1) out << '^' << y;
    } else {
        out << '(';
        bool first = true;
        append_power(out, "r", x, first);
        append_power(out, "t", y, first);
        out << ')';
    }
    return out.str();
}

std::string F2Element::display() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& m : terms_) {
        if (!first) out << " + ";
        first = false;
        out << m.display();
    }
    return out.str();
}

std::optional<F2CoefMonomial> f2_group_at(int s, int w) {
    if (s <= 0 && w <= s) return F2CoefMonomial::pc(s - w, -s);
    if (s >= 0 && w >= s + 2) return F2CoefMonomial::nc(s, w - s - 1);
    return std::nullopt;
}

F2Element f2_multiply(F2CoefMonomial x, F2CoefMonomial y) {
    using Cone = F2CoefMonomial::Cone;
    if (x.cone == Cone::NC && y.cone == Cone::PC) std::swap(x, y);
    if (x.cone == Cone::PC && y.cone == Cone::PC)
        return F2CoefMonomial::pc(x.x + y.x, x.y + y.y);
    if (x.cone == Cone::PC && y.cone == Cone::NC) {
        // t^a r^b * g/(r^i t^j) = g/(r^(i-b) t^(j-a)), when still in the ring.
        int i = y.x - x.y;
        int j = y.y - x.x;
        if (i >= 0 && j >= 1) return F2CoefMonomial::nc(i, j);
        return F2Element::zero();
    }
    return F2Element::zero();  // NC * NC
}

F2Element f2_multiply(const F2Element& x, const F2Element& y) {
    F2Element out;
    for (const auto& a : x.terms())
        for (const auto& b : y.terms()) out += f2_multiply(a, b);
    return out;
}

F2Element f2_sq1(F2CoefMonomial x) {
    if (x.is_pc()) {
        if (x.x % 2 == 1) return F2CoefMonomial::pc(x.x - 1, x.y + 1);
        return F2Element::zero();
    }
    if (x.y % 2 == 1 && x.x >= 1) return F2CoefMonomial::nc(x.x - 1, x.y + 1);
    return F2Element::zero();
}

F2Element f2_sq1(const F2Element& x) {
    F2Element out;
    for (const auto& m : x.terms()) out += f2_sq1(m);
    return out;
}

std::vector<std::pair<BiDegree, F2CoefMonomial>> f2_enumerate(const Window& window) {
    std::vector<std::pair<BiDegree, F2CoefMonomial>> out;
    for (int s = window.s_min; s <= window.s_max; ++s)
        for (int w = window.w_min; w <= window.w_max; ++w)
            if (auto m = f2_group_at(s, w)) out.push_back({{s, w}, *m});
    return out;
}

}  // namespace c2eff
