#pragma once

#include <string>
#include <vector>

#include "c2eff/pages.hpp"

namespace c2eff {

// A distinguished homotopy element with its lowest-filtration detector on
// the infinity page.
struct NamedElement {
    std::string name;  // eta, rho, omega, tau4, v14, alpha, beta
    BiDegree degree;
    E1Element detector;
    TriDegree detector_degree;  // degree.s, filtration, degree.w
};

const std::vector<NamedElement>& named_elements();
const NamedElement* find_named(const std::string& name);

// A hidden extension: multiplication by the named element carries the class
// detected by source to the class detected by target, strictly raising
// filtration.
struct ExtensionRecord {
    std::string kind;  // rho, eta, tau4, omega
    E1Element source;
    TriDegree source_degree;
    E1Element target;
    TriDegree target_degree;
};

// The seed extensions.
std::vector<ExtensionRecord> extension_seeds();

// Seeds closed under multiplication by tau^4, v1^4 and h1, keeping records
// whose endpoints stay inside the window and nonzero on the infinity page.
std::vector<ExtensionRecord> extension_table(E2Engine& engine, const Window& window);

struct ExtensionViolation {
    std::size_t index = 0;
    std::string reason;
};

// Degree bookkeeping, endpoint survival, and vanishing of detector * source
// on the infinity page, per record.
std::vector<ExtensionViolation> validate_extensions(
    E2Engine& engine, const std::vector<ExtensionRecord>& table);

struct Summand {
    std::string name;
    MInt order = 0;      // 0 = free 2-adic summand, else a power of 2
    int filtration = 0;  // infinity-page level of the detecting generator
    bool tower = false;  // detected by a chain climbing through all levels
};

struct HomotopyGroup {
    BiDegree degree;
    std::vector<Summand> summands;
    std::string status = "resolved";  // or "unresolved-extensions"
};

// Assemble the homotopy group at (s,w) from the infinity-page column:
// free generators give 2-adic summands; order-2 generators are grouped
// into chains under multiplication by rho*h1, a chain of length k giving
// Z/2^k and a chain surviving past the certified stable height giving the
// 2-adics.  The doubling rule 2x = (w0 - rho*eta)x with w0*x resolved by
// divisibility or by a hidden-extension record; chain heads outside both
// rules mark the column unresolved-extensions.
HomotopyGroup assemble(E2Engine& engine, int s, int w, int q_max,
                       const std::vector<ExtensionRecord>* table = nullptr);

// Degree-s part of the presented coweight-0 ring
//   Z2[e,r,a,b] / (r(er+2), e(er+2), ra - e^3, r^3 b - ea, a^2 - 4b)
// with stems |e|=1, |r|=-1, |a|=4, |b|=8, by monomial enumeration and
// Smith normal form, certified by stabilization under degree-bound growth.
// Independent of the page machinery.
GradedGroup oracle_degree(int s);

struct Coweight0Report {
    std::vector<int> mismatched_stems;
    std::vector<int> unresolved_stems;
};

// Assembled groups on the coweight-0 line against the presented-ring
// oracle, stem by stem.
Coweight0Report compare_coweight0(E2Engine& engine, int s_min, int s_max, int q_max);

struct PeriodicityEntry {
    BiDegree degree;
    std::string pattern;  // bijective, injective, zero
    bool violation = false;
};

// kind "tau4": (s,w) against (s,w-4); "v14": against (s+8,w+4); both are
// bijective except coweight -4 (injective) and -5 (zero).  kind "beta":
// against (s+8,w+8), bijective everywhere.
std::vector<PeriodicityEntry> periodicity_check(E2Engine& engine,
                                                const std::string& kind,
                                                const Window& window);

// Product of two detected classes: the detector product when it survives,
// else the hidden-extension value, else the defining relations; returns
// "unresolved" when none of them decides.
std::string detected_product(E2Engine& engine,
                             const std::vector<ExtensionRecord>& table,
                             const E1Element& x, const TriDegree& xd,
                             const E1Element& y, const TriDegree& yd);
std::string detected_product(E2Engine& engine,
                             const std::vector<ExtensionRecord>& table,
                             const std::string& x, const std::string& y);

}  // namespace c2eff
