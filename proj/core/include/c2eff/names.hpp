#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "c2eff/e1.hpp"

namespace c2eff {

// Thrown on malformed input; position is a 0-based offset into the text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

// The same denominator text names different generators in the two coefficient
// rings ("g/(r^2 t^2)" is NC(2,2) mod 2 but NCEven(2,1) integrally), so the
// caller states which grammar applies.  Basis covers the full first-page
// grammar; the h1 factor decides the coefficient ring there.
enum class NameContext { Mod2, Integral, Basis };

struct ParsedName {
    enum class Kind { F2, Z2, E1 };
    Kind kind = Kind::F2;
    F2CoefMonomial f2;
    Z2Generator z2;
    E1Basis e1;
};

// Exact inverses of the display functions: parse(display(x)) == x and
// display(parse(text)) == text for every displayed basis element.
F2CoefMonomial parse_f2_monomial(const std::string& text);
Z2Generator parse_z2_generator(const std::string& text);
E1Basis parse_e1_basis(const std::string& text);

ParsedName parse_name(const std::string& text, NameContext context);

}  // namespace c2eff
