#include "c2eff/pages.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace c2eff {

namespace {

E1Basis rho_h1() { return E1Basis::h_part(F2CoefMonomial::pc(0, 1), 1, 0); }

TriDegree d1_presource(const TriDegree& t) { return {t.s + 1, t.q - 1, t.w}; }

// Columns o_i * e_i for the torsion generators of an ordered basis.
IntMat torsion_relations(const std::vector<E1Basis>& basis) {
    int n = static_cast<int>(basis.size());
    std::vector<int> torsion;
    for (int i = 0; i < n; ++i)
        if (basis[i].has_order_two()) torsion.push_back(i);
    IntMat r(n, static_cast<int>(torsion.size()));
    for (size_t j = 0; j < torsion.size(); ++j) r.at(torsion[j], static_cast<int>(j)) = 2;
    return r;
}

IntMat d1_matrix_for(const std::vector<E1Basis>& from, const std::vector<E1Basis>& to) {
    IntMat m(static_cast<int>(to.size()), static_cast<int>(from.size()));
    for (size_t j = 0; j < from.size(); ++j) {
        E1Element d = e1_d1(from[j]);
        for (const auto& [b, c] : d.terms()) {
            auto it = std::lower_bound(to.begin(), to.end(), b);
            assert(it != to.end() && *it == b);
            // d1 lands in order-2 classes only, so the coefficient is 0 or 1.
            assert(c == 0 || c == 1);
            m.at(static_cast<int>(it - to.begin()), static_cast<int>(j)) =
                static_cast<MInt>(c.get_si());
        }
    }
    return m;
}

}  // namespace

IntMat d1_matrix(const TriDegree& t) {
    return d1_matrix_for(e1_enumerate(t), e1_enumerate(d1_shift(t)));
}

const std::vector<E1Basis>& E2Engine::basis(const TriDegree& t) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = basis_.find(t);
        if (it != basis_.end()) return it->second;
    }
    auto value = e1_enumerate(t);
    std::lock_guard<std::mutex> lock(mu_);
    return basis_.try_emplace(t, std::move(value)).first->second;
}

const IntMat& E2Engine::differential(const TriDegree& t) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = dmat_.find(t);
        if (it != dmat_.end()) return it->second;
    }
    IntMat value = d1_matrix_for(basis(t), basis(d1_shift(t)));
    std::lock_guard<std::mutex> lock(mu_);
    return dmat_.try_emplace(t, std::move(value)).first->second;
}

const Subquotient& E2Engine::homology(const TriDegree& t) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = hom_.find(t);
        if (it != hom_.end()) return it->second;
    }

    const auto& bas = basis(t);
    int n = static_cast<int>(bas.size());
    const IntMat& dout = differential(t);
    IntMat rel_target = torsion_relations(basis(d1_shift(t)));

    // Cycles: x with d(x) = 0 modulo the target's torsion relations.
    IntMat k = kernel_basis(dout.hcat(rel_target));
    IntMat cycles(n, k.cols);
    for (int j = 0; j < k.cols; ++j)
        for (int i = 0; i < n; ++i) cycles.at(i, j) = k.at(i, j);

    IntMat boundaries = differential(d1_presource(t)).hcat(torsion_relations(bas));
    Subquotient value(cycles, boundaries, n);
    std::lock_guard<std::mutex> lock(mu_);
    return hom_.try_emplace(t, std::move(value)).first->second;
}

std::vector<MInt> E2Engine::ambient(const TriDegree& t, const E1Element& x) {
    const auto& bas = basis(t);
    std::vector<MInt> v(bas.size(), 0);
    for (const auto& [b, c] : x.terms()) {
        auto it = std::lower_bound(bas.begin(), bas.end(), b);
        assert(it != bas.end() && *it == b);
        assert(c.fits_slong_p());
        v[it - bas.begin()] = c.get_si();
    }
    return v;
}

std::optional<std::vector<MInt>> E2Engine::project(const TriDegree& t,
                                                   const E1Element& x) {
    return homology(t).coords(ambient(t, x));
}

bool E2Engine::vanishes(const TriDegree& t, const E1Element& x) {
    auto c = project(t, x);
    assert(c && "element is not a d1 cycle");
    for (MInt v : *c)
        if (v != 0) return false;
    return true;
}

namespace {

std::string name_from_rep(const E1Element& rep) { return rep.display(); }

E1Element rep_element(const std::vector<E1Basis>& bas, std::vector<MInt> coords) {
    // Canonical sign: make the first nonzero coordinate positive.
    for (MInt c : coords) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : coords) x = -x;
        break;
    }
    E1Element out;
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) out.add(bas[i], Int(static_cast<long>(coords[i])));
    return out;
}

}  // namespace

const GradedGroup& E2Engine::group(const TriDegree& t) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = group_.find(t);
        if (it != group_.end()) return it->second;
    }

    const Subquotient& h = homology(t);
    GradedGroup g;
    g.presentation = IntMat(h.num_generators(), h.num_generators());
    for (int i = 0; i < h.num_generators(); ++i) {
        GeneratorInfo info;
        info.order = h.order(i);
        info.rep = rep_element(basis(t), h.generator(i));
        info.name = name_from_rep(info.rep);
        g.presentation.at(i, i) = info.order;
        g.generators.push_back(std::move(info));
    }
    std::lock_guard<std::mutex> lock(mu_);
    return group_.try_emplace(t, std::move(g)).first->second;
}

IntMat E2Engine::multiplication_matrix(const E1Element& u, const TriDegree& src) {
    assert(!u.is_zero());
    TriDegree shift = u.terms().begin()->first.tridegree();
    TriDegree dst = src + shift;
    const GradedGroup& sg = group(src);
    const GradedGroup& dg = group(dst);
    IntMat m(static_cast<int>(dg.generators.size()),
             static_cast<int>(sg.generators.size()));
    for (size_t j = 0; j < sg.generators.size(); ++j) {
        E1Element prod = e1_multiply(sg.generators[j].rep, u);
        auto coords = project(dst, prod);
        assert(coords && "product of cycles must be a cycle");
        for (size_t i = 0; i < coords->size(); ++i)
            m.at(static_cast<int>(i), static_cast<int>(j)) = (*coords)[i];
    }
    return m;
}

namespace {

// Columns o_i * e_i for the torsion generators of a group.
IntMat group_relations(const GradedGroup& g) {
    std::vector<int> torsion;
    for (size_t i = 0; i < g.generators.size(); ++i)
        if (g.generators[i].order != 0) torsion.push_back(static_cast<int>(i));
    IntMat r(static_cast<int>(g.generators.size()), static_cast<int>(torsion.size()));
    for (size_t j = 0; j < torsion.size(); ++j)
        r.at(torsion[j], static_cast<int>(j)) = g.generators[torsion[j]].order;
    return r;
}

}  // namespace

bool map_hits(const IntMat& m, const GradedGroup& target, const std::vector<MInt>& v) {
    return solve(m.hcat(group_relations(target)), v).has_value();
}

int stable_height(int s, int w) { return std::max({s, s - w, 0}) + 1; }

namespace {

// Multiplication by rho*h1 maps the basis at (s,q,w) bijectively onto the
// basis at (s,q+1,w), each image a single term with coefficient 1.
bool rho_h1_step_bijective(const TriDegree& t) {
    auto from = e1_enumerate(t);
    auto to = e1_enumerate(TriDegree{t.s, t.q + 1, t.w});
    if (from.size() != to.size()) return false;
    std::vector<E1Basis> images;
    for (const auto& b : from) {
        E1Element prod = e1_multiply(b, rho_h1());
        if (prod.terms().size() != 1) return false;
        const auto& [ib, c] = *prod.terms().begin();
        if (c != 1) return false;
        images.push_back(ib);
    }
    std::sort(images.begin(), images.end());
    return images == to;
}

}  // namespace

CertifiedWindow certify_window(int s_min, int s_max, int w_min, int w_max, int q_max) {
    CertifiedWindow out;
    out.window = {s_min, s_max, w_min, w_max, q_max};
    out.certified = true;
    for (int s = s_min; s <= s_max; ++s)
        for (int w = w_min; w <= w_max; ++w) {
            // Probe up to the stable height: above it the column is either
            // empty forever or a periodic tower.
            int h = stable_height(s, w);
            bool beyond = false;
            for (int q = q_max + 1; q <= std::max(q_max + 1, h + 1) && !beyond; ++q)
                beyond = !e1_enumerate(TriDegree{s, q, w}).empty();
            if (!beyond) continue;
            TowerFlag flag;
            flag.degree = {s, w};
            std::ostringstream p;
            p << "rho*h1 tower above q=" << h;
            flag.pattern = p.str();
            out.flags.push_back(flag);
            // Two consecutive periods of the (period-1) tower pattern.
            if (!rho_h1_step_bijective({s, h, w}) ||
                !rho_h1_step_bijective({s, h + 1, w}))
                out.certified = false;
        }
    return out;
}

Page compute_e2(E2Engine& engine, const Window& window) {
    auto cert = certify_window(window.s_min, window.s_max, window.w_min,
                               window.w_max, window.q_max);
    if (!cert.certified) throw std::runtime_error("uncertified window");
    Page page;
    page.r = 2;
    for (int s = window.s_min; s <= window.s_max; ++s)
        for (int w = window.w_min; w <= window.w_max; ++w)
            for (int q = 0; q <= window.q_max; ++q) {
                TriDegree t{s, q, w};
                if (engine.basis(t).empty()) continue;
                const GradedGroup& g = engine.group(t);
                if (!g.trivial()) page.groups.emplace(t, g);
            }
    return page;
}

namespace {

// The generator is core * v1^4k with v1^4 a permanent cycle, so by Leibniz
// d_r(gen) = d_r(core) v1^4k.  Both factors are ruled out degreewise: every
// d_rr target of the core and of v1^4 itself (which sits on the vanishing
// coweight-3 line) is a trivial group for 2 <= rr <= r.
bool v14_translation_argument(E2Engine& engine, const E1Element& rep, int r) {
    if (rep.terms().size() != 1) return false;
    E1Basis core = rep.terms().begin()->first;
    core.m %= 2;
    TriDegree c = core.tridegree();
    for (int rr = 2; rr <= r; ++rr) {
        if (!engine.group(TriDegree{c.s - 1, c.q + rr, c.w}).trivial()) return false;
        if (!engine.group(TriDegree{7, 4 + rr, 4}).trivial()) return false;
    }
    return true;
}

// Multiplication by u on group(src) has trivial kernel.
bool mult_injective(E2Engine& engine, const E1Element& u, const TriDegree& src) {
    const GradedGroup& sg = engine.group(src);
    if (sg.trivial()) return true;
    TriDegree dst = src + u.terms().begin()->first.tridegree();
    IntMat t = engine.multiplication_matrix(u, src);
    IntMat k = kernel_basis(t.hcat(group_relations(engine.group(dst))));
    int n = static_cast<int>(sg.generators.size());
    for (int j = 0; j < k.cols; ++j)
        for (int i = 0; i < n; ++i) {
            MInt o = sg.generators[i].order;
            MInt x = k.at(i, j);
            if (o == 0 ? x != 0 : x % o != 0) return false;
        }
    return true;
}

// True when some rho-power argument rules out a differential from gen j at
// src into (s-1, q+r, w).  Two cases, both using that rho is a permanent
// cycle so d_r commutes with multiplication by rho^n:
//  - the generator is rho^n-divisible while rho^n annihilates everything
//    that could map into the target;
//  - the generator is rho^n-torsion while the target has no rho^n-torsion.
bool rho_tower_argument(E2Engine& engine, const TriDegree& src, int j, int r) {
    constexpr int kMaxPower = 8;
    TriDegree trg{src.s - 1, src.q + r, src.w};
    bool divisible_possible = true;
    for (int n = 1; n <= kMaxPower; ++n) {
        E1Element rho_n(E1Basis::z_part(Z2Generator::rho_tau(n, 0), 0));

        // rho^n * gen = 0 and rho^n acts injectively on the target.
        IntMat down = engine.multiplication_matrix(rho_n, src);
        bool killed = true;
        for (int i = 0; i < down.rows && killed; ++i) killed = down.at(i, j) == 0;
        if (killed && mult_injective(engine, rho_n, trg)) return true;

        if (!divisible_possible) continue;
        TriDegree up{src.s + n, src.q, src.w + n};
        const GradedGroup& up_group = engine.group(up);
        if (up_group.trivial()) {
            // No rho^n preimage, hence none for any larger power either.
            divisible_possible = false;
            continue;
        }
        IntMat into = engine.multiplication_matrix(rho_n, up);
        std::vector<MInt> v(engine.group(src).generators.size(), 0);
        v[j] = 1;
        if (!map_hits(into, engine.group(src), v)) continue;
        // d(gen) = rho^n * d(preimage); d(preimage) lives one stem left of up.
        TriDegree pre_target{up.s - 1, src.q + r, up.w};
        if (engine.group(pre_target).trivial()) return true;
        IntMat tail = engine.multiplication_matrix(rho_n, pre_target);
        if (tail.is_zero()) return true;
    }
    return false;
}

}  // namespace

std::vector<CollapseEntry> collapse_report(E2Engine& engine, const Window& window) {
    std::vector<CollapseEntry> out;
    for (int s = window.s_min; s <= window.s_max; ++s)
        for (int w = window.w_min; w <= window.w_max; ++w)
            for (int q = 0; q <= window.q_max; ++q) {
                TriDegree t{s, q, w};
                if (engine.basis(t).empty()) continue;
                const GradedGroup& g = engine.group(t);
                if (g.trivial()) continue;
                for (int r = 2; q + r <= window.q_max; ++r) {
                    TriDegree trg{s - 1, q + r, w};
                    if (engine.basis(trg).empty()) continue;
                    if (engine.group(trg).trivial()) continue;
                    for (size_t j = 0; j < g.generators.size(); ++j) {
                        CollapseEntry e;
                        e.source = t;
                        e.r = r;
                        e.generator = g.generators[j].name;
                        if (v14_translation_argument(engine, g.generators[j].rep, r))
                            e.tag = "v14-linear";
                        else if (rho_tower_argument(engine, t, static_cast<int>(j), r))
                            e.tag = "rho-tower";
                        else
                            e.tag = "UNJUSTIFIED";
                        out.push_back(std::move(e));
                    }
                }
            }
    return out;
}

std::vector<RankMismatch> euler_rank_check(E2Engine& engine, const Window& window) {
    std::vector<RankMismatch> out;
    for (int s = window.s_min; s <= window.s_max; ++s)
        for (int w = window.w_min; w <= window.w_max; ++w) {
            bool beyond = false;
            for (int q = window.q_max + 1; q <= window.q_max + 4 && !beyond; ++q)
                beyond = !e1_enumerate(TriDegree{s, q, w}).empty();
            if (beyond || stable_height(s, w) > window.q_max) continue;
            long long e1_sum = 0, e2_sum = 0;
            int sign = 1;
            for (int q = 0; q <= window.q_max; ++q, sign = -sign) {
                const auto& bas = engine.basis({s, q, w});
                for (const auto& b : bas)
                    if (!b.has_order_two()) e1_sum += sign;
                if (!bas.empty()) e2_sum += sign * engine.group({s, q, w}).rank();
            }
            if (e1_sum != e2_sum) out.push_back({{s, w}, e1_sum, e2_sum});
        }
    return out;
}

namespace {

// Orders of all E2 generators in the column at (s,w) for q <= q_max, or
// nullopt when the column is still alive near the cutoff so the multiset
// would be truncated.
std::optional<std::vector<MInt>> column_orders(E2Engine& engine, int s, int w,
                                               int q_max) {
    constexpr int kBuffer = 2;
    std::vector<MInt> orders;
    for (int q = 0; q <= q_max; ++q) {
        TriDegree t{s, q, w};
        if (engine.basis(t).empty()) continue;
        const GradedGroup& g = engine.group(t);
        if (!g.trivial() && q > q_max - kBuffer) return std::nullopt;
        for (const auto& gen : g.generators) orders.push_back(gen.order);
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

}  // namespace

std::vector<Tau4Mismatch> tau4_stability_check(E2Engine& engine, const Window& window) {
    // The correspondence across a weight-4 shift moves classes between
    // filtrations (the negative-cone classes drop), so orders are compared
    // per (s,w) column, not per tridegree.  Columns whose groups are still
    // nonzero near q_max (the permanent towers) are skipped.
    std::vector<Tau4Mismatch> out;
    for (int s = window.s_min; s <= window.s_max; ++s)
        for (int w = window.w_min; w <= window.w_max; ++w) {
            if (s - w == -4 || s - w == -5) continue;
            auto a = column_orders(engine, s, w, window.q_max);
            auto b = column_orders(engine, s, w - 4, window.q_max);
            if (!a || !b) continue;
            if (*a != *b) out.push_back({{s, 0, w}, "column order multiset"});
        }
    return out;
}

}  // namespace c2eff
