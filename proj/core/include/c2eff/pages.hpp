#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "c2eff/e1.hpp"
#include "c2eff/exact.hpp"

namespace c2eff {

struct GeneratorInfo {
    std::string name;
    MInt order = 0;  // 0 = free over Z2, else a power of 2
    E1Element rep;   // surviving representative on the first page
};

struct GradedGroup {
    std::vector<GeneratorInfo> generators;
    IntMat presentation;  // diagonal relation matrix over the generators

    bool trivial() const { return generators.empty(); }
    int rank() const {
        int r = 0;
        for (const auto& g : generators)
            if (g.order == 0) ++r;
        return r;
    }
};

struct Page {
    int r = 1;
    std::map<TriDegree, GradedGroup> groups;       // nontrivial degrees only
    std::map<TriDegree, IntMat> differentials;
};

// Matrix of d1 from the ordered basis at t to the ordered basis at the
// (-1,+1,0)-shifted degree; entries in {0,1}.
IntMat d1_matrix(const TriDegree& t);

// Per-tridegree homology of the first page, with memoized bases, matrices,
// and Smith-normal-form subquotients.  Groups here are exact: they do not
// depend on any window.
class E2Engine {
public:
    const std::vector<E1Basis>& basis(const TriDegree& t);
    const IntMat& differential(const TriDegree& t);
    const Subquotient& homology(const TriDegree& t);
    const GradedGroup& group(const TriDegree& t);

    // Coordinates of x over the basis at t (x must be supported there).
    std::vector<MInt> ambient(const TriDegree& t, const E1Element& x);
    // Homology coordinates of the cycle x; nullopt when x is not a cycle.
    std::optional<std::vector<MInt>> project(const TriDegree& t, const E1Element& x);
    bool vanishes(const TriDegree& t, const E1Element& x);

    // Matrix of multiplication by u: group(src) -> group(src + degree(u)),
    // columns in homology coordinates of the target (reduced mod orders).
    IntMat multiplication_matrix(const E1Element& u, const TriDegree& src);

private:
    // Caches may be filled from several threads; values are computed outside
    // the lock (ties are recomputed, the first insert wins) and map node
    // stability keeps returned references valid.
    std::mutex mu_;
    std::map<TriDegree, std::vector<E1Basis>> basis_;
    std::map<TriDegree, IntMat> dmat_;
    std::map<TriDegree, Subquotient> hom_;
    std::map<TriDegree, GradedGroup> group_;
};

// Whether v (coordinates in target, reduced mod orders) is in the image of
// the columns of m modulo the target's relations.
bool map_hits(const IntMat& m, const GradedGroup& target, const std::vector<MInt>& v);

struct TowerFlag {
    BiDegree degree;
    std::string pattern;
};

struct CertifiedWindow {
    Window window;
    std::vector<TowerFlag> flags;
    bool certified = false;
};

// Flags bidegrees whose basis continues past q_max and certifies that every
// flagged column enters the stable regime where multiplication by rho*h1 is a
// basis bijection (checked on two consecutive steps above the stable height).
CertifiedWindow certify_window(int s_min, int s_max, int w_min, int w_max, int q_max);

// The q-height above which the column at (s,w) is a pure rho*h1 tower.
int stable_height(int s, int w);

// Second page over a certified window.  Throws std::runtime_error on an
// uncertified window.
Page compute_e2(E2Engine& engine, const Window& window);

struct CollapseEntry {
    TriDegree source;
    int r = 2;
    std::string generator;
    std::string tag;  // "rho-tower", "v14-linear", or "UNJUSTIFIED"
};

// Every degree-permitted higher differential out of a nonzero E2 class in the
// window, with the argument that rules it out.
std::vector<CollapseEntry> collapse_report(E2Engine& engine, const Window& window);

struct RankMismatch {
    BiDegree degree;
    long long e1_rank_sum = 0;
    long long e2_rank_sum = 0;
};

// Alternating sums of free ranks across each finite (s,w) column agree
// between the first and second pages.
std::vector<RankMismatch> euler_rank_check(E2Engine& engine, const Window& window);

struct Tau4Mismatch {
    TriDegree degree;
    std::string generator;
};

// Each E2 generator with coweight outside {-4,-5} corresponds to exactly one
// equal-order generator at (s, q, w-4).
std::vector<Tau4Mismatch> tau4_stability_check(E2Engine& engine, const Window& window);

}  // namespace c2eff
