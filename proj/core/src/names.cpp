#include "c2eff/names.hpp"

#include <cctype>
#include <vector>

namespace c2eff {

namespace {

// One multiplicative factor of a displayed name.
struct Factor {
    enum class Kind { One, T, R, H1, V, NC };
    Kind kind = Kind::One;
    int exp = 1;             // T/R/H1/V
    int nc_r = 0, nc_t = 0;  // NC denominator exponents
    std::size_t pos = 0;
};

struct Cursor {
    const std::string& text;
    std::size_t i = 0;

    bool done() const { return i >= text.size(); }
    char peek() const { return done() ? '\0' : text[i]; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
    }

    int number() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number", i);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000) throw ParseError("exponent too large", i);
            ++i;
        }
        return static_cast<int>(v);
    }

    // Optional "^e" suffix; a bare symbol means exponent 1.
    int exponent() { return eat('^') ? number() : 1; }
};

// A single "r^i"/"t^j" power inside an NC denominator.
void nc_power(Cursor& c, Factor& f) {
    std::size_t at = c.i;
    if (c.eat('r')) {
        if (f.nc_r || f.nc_t) throw ParseError("misordered denominator", at);
        f.nc_r = c.exponent();
    } else if (c.eat('t')) {
        if (f.nc_t) throw ParseError("repeated denominator factor", at);
        f.nc_t = c.exponent();
    } else {
        throw ParseError("expected 'r' or 't'", at);
    }
}

Factor factor(Cursor& c) {
    Factor f;
    f.pos = c.i;
    if (c.eat('1')) {
        f.kind = Factor::Kind::One;
        return f;
    }
    if (c.eat('g')) {
        f.kind = Factor::Kind::NC;
        c.expect('/');
        if (c.eat('(')) {
            nc_power(c, f);
            if (c.eat(' ')) nc_power(c, f);
            c.expect(')');
        } else {
            nc_power(c, f);
        }
        return f;
    }
    if (c.eat('h')) {
        c.expect('1');
        f.kind = Factor::Kind::H1;
        f.exp = c.exponent();
        return f;
    }
    if (c.eat('v')) {
        f.kind = Factor::Kind::V;
        c.expect('^');
        f.exp = c.number();
        return f;
    }
    if (c.eat('t')) {
        f.kind = Factor::Kind::T;
        f.exp = c.exponent();
        return f;
    }
    if (c.eat('r')) {
        f.kind = Factor::Kind::R;
        f.exp = c.exponent();
        return f;
    }
    throw ParseError("unexpected character", c.i);
}

std::vector<Factor> factors(const std::string& text) {
    Cursor c{text};
    std::vector<Factor> out;
    out.push_back(factor(c));
    while (c.eat(' ')) out.push_back(factor(c));
    if (!c.done()) throw ParseError("trailing input", c.i);
    return out;
}

F2CoefMonomial f2_from(const std::vector<Factor>& fs) {
    using K = Factor::Kind;
    if (fs.size() == 1 && fs[0].kind == K::One) return F2CoefMonomial::one();
    if (fs.size() == 1 && fs[0].kind == K::NC)
        return F2CoefMonomial::nc(fs[0].nc_r, fs[0].nc_t);
    // positive cone prints t before r
    int a = 0, b = 0;
    std::size_t k = 0;
    if (k < fs.size() && fs[k].kind == K::T) a = fs[k++].exp;
    if (k < fs.size() && fs[k].kind == K::R) b = fs[k++].exp;
    if (k != fs.size() || (a == 0 && b == 0))
        throw ParseError("not a mod-2 monomial", fs[k < fs.size() ? k : fs.size() - 1].pos);
    return F2CoefMonomial::pc(a, b);
}

Z2Generator z2_from(const std::vector<Factor>& fs) {
    using K = Factor::Kind;
    if (fs.size() == 1 && fs[0].kind == K::One) return Z2Generator::one();
    if (fs.size() == 1 && fs[0].kind == K::T) {
        if (fs[0].exp % 2) throw ParseError("odd t exponent in the integral ring", fs[0].pos);
        return Z2Generator::tau_even(fs[0].exp / 2);
    }
    if (fs.size() == 1 && fs[0].kind == K::NC) {
        const Factor& f = fs[0];
        if (f.nc_r == 0)
            return f.nc_t % 2 ? Z2Generator::theta_odd((f.nc_t + 1) / 2)
                              : Z2Generator::nc_even(0, f.nc_t / 2);
        if (f.nc_t % 2) throw ParseError("odd t exponent in the integral ring", f.pos);
        return Z2Generator::nc_even(f.nc_r, f.nc_t / 2);
    }
    // rho-tau family prints r before t
    int b = 0, a2 = 0;
    std::size_t k = 0;
    if (k < fs.size() && fs[k].kind == K::R) b = fs[k++].exp;
    if (k < fs.size() && fs[k].kind == K::T) a2 = fs[k++].exp;
    if (k != fs.size() || b == 0)
        throw ParseError("not an integral generator", fs[k < fs.size() ? k : fs.size() - 1].pos);
    if (a2 % 2) throw ParseError("odd t exponent in the integral ring", fs.back().pos);
    return Z2Generator::rho_tau(b, a2 / 2);
}

}  // namespace

F2CoefMonomial parse_f2_monomial(const std::string& text) { return f2_from(factors(text)); }

Z2Generator parse_z2_generator(const std::string& text) { return z2_from(factors(text)); }

E1Basis parse_e1_basis(const std::string& text) {
    using K = Factor::Kind;
    std::vector<Factor> fs = factors(text);
    int m = 0;
    if (fs.back().kind == K::V) {
        if (fs.back().exp % 2) throw ParseError("odd v exponent", fs.back().pos);
        m = fs.back().exp / 2;
        fs.pop_back();
    }
    int p = 0;
    if (!fs.empty() && fs.back().kind == K::H1) {
        p = fs.back().exp;
        if (p < 1) throw ParseError("h1 exponent must be positive", fs.back().pos);
        fs.pop_back();
    }
    for (const auto& f : fs)
        if (f.kind == K::H1 || f.kind == K::V)
            throw ParseError("misplaced factor", f.pos);
    if (p > 0) {
        F2CoefMonomial c = fs.empty() ? F2CoefMonomial::one() : f2_from(fs);
        return E1Basis::h_part(c, p, m);
    }
    Z2Generator z = fs.empty() ? Z2Generator::one() : z2_from(fs);
    return E1Basis::z_part(z, m);
}

ParsedName parse_name(const std::string& text, NameContext context) {
    ParsedName out;
    switch (context) {
        case NameContext::Mod2:
            out.kind = ParsedName::Kind::F2;
            out.f2 = parse_f2_monomial(text);
            break;
        case NameContext::Integral:
            out.kind = ParsedName::Kind::Z2;
            out.z2 = parse_z2_generator(text);
            break;
        case NameContext::Basis:
            out.kind = ParsedName::Kind::E1;
            out.e1 = parse_e1_basis(text);
            break;
    }
    return out;
}

}  // namespace c2eff
