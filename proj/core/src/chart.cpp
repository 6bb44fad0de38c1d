#include "c2eff/chart.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace c2eff {

namespace {

struct Glyph {
    int s = 0;
    int q = 0;
    bool free_gen = false;
    std::string name;
    E1Element rep;  // empty on the homotopy page
    int label = 0;  // tau^-4 torsion order, 0 = unlabeled
};

struct Line {
    int s0, q0, s1, q1;
    enum class Kind { Rho, H1, RhoTower, H1Tower, HiddenRho, HiddenEta, HiddenOmega };
    Kind kind;
};

E1Element rho_elem() { return E1Element(E1Basis::z_part(Z2Generator::rho_tau(1, 0), 0)); }
E1Element h1_elem() { return E1Element(E1Basis::h_part(F2CoefMonomial::one(), 1, 0)); }

bool einf_nonzero(E2Engine& engine, const TriDegree& t, const E1Element& x) {
    if (x.is_zero()) return false;
    auto c = engine.project(t, x);
    if (!c) return false;
    for (MInt v : *c)
        if (v != 0) return true;
    return false;
}

bool negative_cone_lead(const E1Element& rep) {
    if (rep.is_zero()) return false;
    const E1Basis& b = rep.terms().begin()->first;
    if (b.is_z_part()) return b.z.kind == Z2Generator::Kind::NCEven;
    return !b.c.is_pc();
}

struct ChartData {
    std::vector<Glyph> glyphs;
    std::vector<Line> lines;
};

ChartData collect(E2Engine& engine, const ChartSpec& spec, const Window& window) {
    ChartData data;
    int c = spec.coweight;
    bool label_line = ((c % 4) + 4) % 4 == 0 && spec.page != "e1";

    std::vector<ExtensionRecord> table;
    if (spec.page != "e1") table = extension_table(engine, window);

    for (int s = window.s_min; s <= window.s_max; ++s) {
        int w = s - c;
        if (w < window.w_min || w > window.w_max) continue;
        if (spec.page == "homotopy") {
            HomotopyGroup g = assemble(engine, s, w, window.q_max, &table);
            for (const auto& sm : g.summands)
                data.glyphs.push_back({s, sm.filtration, sm.order == 0, sm.name, {}, 0});
            continue;
        }
        for (int q = 0; q <= window.q_max; ++q) {
            TriDegree t{s, q, w};
            if (spec.page == "e1") {
                for (const auto& b : engine.basis(t))
                    data.glyphs.push_back(
                        {s, q, !b.has_order_two(), b.display(), E1Element(b), 0});
            } else {
                for (const auto& gen : engine.group(t).generators) {
                    Glyph g{s, q, gen.order == 0, gen.name, gen.rep, 0};
                    if (label_line && gen.order != 0 && negative_cone_lead(gen.rep))
                        g.label = tau4_torsion_order(engine, t, gen.rep);
                    data.glyphs.push_back(std::move(g));
                }
            }
        }
    }

    // solid multiplication lines, with arrows where the product leaves the
    // rendered region
    if (spec.page != "homotopy") {
        for (const auto& g : data.glyphs) {
            TriDegree t{g.s, g.q, g.s - c};
            E1Element pr = e1_multiply(rho_elem(), g.rep);
            TriDegree tr{t.s - 1, t.q, t.w - 1};
            bool hit = spec.page == "e1" ? !pr.is_zero() : einf_nonzero(engine, tr, pr);
            if (hit) {
                bool inside = tr.s >= window.s_min;
                data.lines.push_back({g.s, g.q, tr.s, tr.q,
                                      inside ? Line::Kind::Rho : Line::Kind::RhoTower});
            }
            E1Element ph = e1_multiply(h1_elem(), g.rep);
            TriDegree th{t.s + 1, t.q + 1, t.w + 1};
            hit = spec.page == "e1" ? !ph.is_zero() : einf_nonzero(engine, th, ph);
            if (hit) {
                bool inside = th.s <= window.s_max && th.q <= window.q_max;
                data.lines.push_back({g.s, g.q, th.s, th.q,
                                      inside ? Line::Kind::H1 : Line::Kind::H1Tower});
            }
        }
    }

    // hidden extensions along this coweight line
    if (spec.page != "e1") {
        for (const auto& r : table) {
            if (r.source_degree.coweight() != c) continue;
            if (r.source_degree.q > window.q_max || r.target_degree.q > window.q_max)
                continue;
            if (r.source_degree.s < window.s_min || r.source_degree.s > window.s_max ||
                r.target_degree.s < window.s_min || r.target_degree.s > window.s_max)
                continue;
            Line::Kind k = r.kind == "rho"   ? Line::Kind::HiddenRho
                           : r.kind == "eta" ? Line::Kind::HiddenEta
                                             : Line::Kind::HiddenOmega;
            if (r.kind == "tau4") continue;  // weight shift leaves the line
            data.lines.push_back({r.source_degree.s, r.source_degree.q,
                                  r.target_degree.s, r.target_degree.q, k});
        }
    }
    return data;
}

const char* legend_text =
    "legend:\n"
    "  o order-2 group    # free 2-adic group\n"
    "  - rho multiplication    / h1 multiplication\n"
    "  < infinite rho tower    ^ infinite h1 tower\n"
    "  hidden extensions: red dashed rho, black dashed eta, orange dashed omega\n"
    "  numeric labels: order of the tau^-4 torsion\n";

std::string render_text(const ChartData& data, const ChartSpec& spec,
                        const Window& window) {
    std::ostringstream out;
    out << "coweight " << spec.coweight << ", page " << spec.page << "\n";
    if (data.glyphs.empty()) {
        out << "empty chart\n" << legend_text;
        return out.str();
    }
    int cols = window.s_max - window.s_min + 1;
    int rows = window.q_max + 1;
    int width = 2 * cols + 1, height = 2 * rows + 1;
    std::vector<std::string> canvas(height, std::string(width, ' '));
    auto col = [&](int s) { return 1 + 2 * (s - window.s_min); };
    auto row = [&](int q) { return 1 + 2 * (window.q_max - q); };

    std::map<std::pair<int, int>, int> count;
    for (const auto& g : data.glyphs) ++count[{g.s, g.q}];
    for (const auto& g : data.glyphs) {
        int n = count[{g.s, g.q}];
        char ch = n > 1 ? static_cast<char>('0' + std::min(n, 9)) : (g.free_gen ? '#' : 'o');
        canvas[row(g.q)][col(g.s)] = ch;
    }
    for (const auto& l : data.lines) {
        switch (l.kind) {
            case Line::Kind::Rho: canvas[row(l.q0)][col(l.s0) - 1] = '-'; break;
            case Line::Kind::H1: canvas[row(l.q0) - 1][col(l.s0) + 1] = '/'; break;
            case Line::Kind::RhoTower: canvas[row(l.q0)][col(l.s0) - 1] = '<'; break;
            case Line::Kind::H1Tower: canvas[row(l.q0) - 1][col(l.s0) + 1] = '^'; break;
            default: break;  // dashed extensions are listed below the grid
        }
    }
    for (const auto& line : canvas) {
        std::string trimmed = line;
        while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
        out << trimmed << "\n";
    }
    out << "s: " << window.s_min << " .. " << window.s_max << ", q up to "
        << window.q_max << "\n";
    for (const auto& l : data.lines) {
        const char* kind = nullptr;
        if (l.kind == Line::Kind::HiddenRho) kind = "hidden rho";
        if (l.kind == Line::Kind::HiddenEta) kind = "hidden eta";
        if (l.kind == Line::Kind::HiddenOmega) kind = "hidden omega";
        if (kind)
            out << kind << ": (" << l.s0 << "," << l.q0 << ") -> (" << l.s1 << ","
                << l.q1 << ")\n";
    }
    out << legend_text;
    return out.str();
}

std::string render_svg(const ChartData& data, const ChartSpec& spec,
                       const Window& window) {
    const int unit = 40, margin = 40, legend_h = 120;
    int cols = window.s_max - window.s_min + 1;
    int rows = window.q_max + 1;
    int width = 2 * margin + (cols - 1) * unit + 1;
    int height = 2 * margin + (rows - 1) * unit + legend_h;
    auto cx = [&](int s) { return margin + (s - window.s_min) * unit; };
    auto cy = [&](int q) { return margin + (window.q_max - q) * unit; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" font-family=\"monospace\">\n";
    out << "<title>coweight " << spec.coweight << ", page " << spec.page
        << "</title>\n";

    if (data.glyphs.empty())
        out << "<text class=\"notice\" x=\"" << margin << "\" y=\"" << margin
            << "\" font-size=\"14\">empty chart</text>\n";

    std::map<std::pair<int, int>, int> count, seen;
    for (const auto& g : data.glyphs) ++count[{g.s, g.q}];
    auto offset = [&](int s, int q, int i) {
        int n = count[{s, q}];
        return cx(s) + (2 * i - (n - 1)) * 5;
    };

    for (const auto& l : data.lines) {
        double x0 = cx(l.s0), y0 = cy(l.q0), x1 = cx(l.s1), y1 = cy(l.q1);
        switch (l.kind) {
            case Line::Kind::Rho:
            case Line::Kind::H1:
                out << "<line class=\"mult\" x1=\"" << x0 << "\" y1=\"" << y0
                    << "\" x2=\"" << x1 << "\" y2=\"" << y1
                    << "\" stroke=\"black\"/>\n";
                break;
            case Line::Kind::RhoTower:
            case Line::Kind::H1Tower: {
                // arrow head at the window edge
                double mx = (x0 + x1) / 2, my = (y0 + y1) / 2;
                out << "<line class=\"tower\" x1=\"" << x0 << "\" y1=\"" << y0
                    << "\" x2=\"" << mx << "\" y2=\"" << my
                    << "\" stroke=\"black\"/>\n";
                out << "<circle class=\"arrow\" cx=\"" << mx << "\" cy=\"" << my
                    << "\" r=\"2\"/>\n";
                break;
            }
            case Line::Kind::HiddenRho:
            case Line::Kind::HiddenEta:
            case Line::Kind::HiddenOmega: {
                const char* color = l.kind == Line::Kind::HiddenRho   ? "red"
                                    : l.kind == Line::Kind::HiddenEta ? "black"
                                                                      : "orange";
                out << "<line class=\"hidden\" x1=\"" << x0 << "\" y1=\"" << y0
                    << "\" x2=\"" << x1 << "\" y2=\"" << y1 << "\" stroke=\"" << color
                    << "\" stroke-dasharray=\"4 3\"/>\n";
                break;
            }
        }
    }

    for (const auto& g : data.glyphs) {
        int i = seen[{g.s, g.q}]++;
        double x = offset(g.s, g.q, i), y = cy(g.q);
        if (g.free_gen)
            out << "<rect class=\"gen\" x=\"" << x - 4 << "\" y=\"" << y - 4
                << "\" width=\"8\" height=\"8\"><title>" << g.name
                << "</title></rect>\n";
        else
            out << "<circle class=\"gen\" cx=\"" << x << "\" cy=\"" << y
                << "\" r=\"4\"><title>" << g.name << "</title></circle>\n";
        if (g.label > 0)
            out << "<text class=\"torsion\" x=\"" << x + 5 << "\" y=\"" << y - 5
                << "\" font-size=\"9\">" << g.label << "</text>\n";
    }

    // axes
    for (int s = window.s_min; s <= window.s_max; ++s)
        out << "<text class=\"axis\" x=\"" << cx(s) << "\" y=\""
            << cy(0) + 20 << "\" font-size=\"9\" text-anchor=\"middle\">" << s
            << "</text>\n";
    for (int q = 0; q <= window.q_max; ++q)
        out << "<text class=\"axis\" x=\"" << margin - 20 << "\" y=\"" << cy(q) + 3
            << "\" font-size=\"9\" text-anchor=\"middle\">" << q << "</text>\n";

    int ly = 2 * margin + (rows - 1) * unit;
    const char* legend_lines[] = {
        "dot: order-2 group, square: free 2-adic group",
        "solid horizontal: rho multiplication, solid diagonal: h1 multiplication",
        "arrows: infinite rho / h1 towers",
        "dashed red: hidden rho, dashed black: hidden eta, dashed orange: hidden omega",
        "numeric labels: order of the tau^-4 torsion",
    };
    int k = 0;
    for (const char* line : legend_lines)
        out << "<text class=\"legend\" x=\"" << margin << "\" y=\"" << ly + 16 * ++k
            << "\" font-size=\"11\">" << line << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace

int tau4_torsion_order(E2Engine& engine, const TriDegree& t, const E1Element& rep) {
    E1Element tau4(E1Basis::z_part(Z2Generator::tau_even(2), 0));
    E1Element x = rep;
    TriDegree at = t;
    for (int k = 1; k <= 64; ++k) {
        x = e1_multiply(tau4, x);
        at = at + TriDegree{0, 0, -4};
        if (!einf_nonzero(engine, at, x)) return k;
    }
    return 0;
}

std::string emit_chart(E2Engine& engine, const ChartSpec& spec, const Window& window) {
    if (spec.page != "e1" && spec.page != "e2" && spec.page != "homotopy")
        throw std::runtime_error("unknown page: " + spec.page);
    if (spec.format != "svg" && spec.format != "text")
        throw std::runtime_error("unknown format: " + spec.format);
    if (spec.page != "e1") {
        auto cert = certify_window(window.s_min, window.s_max, window.w_min,
                                   window.w_max, window.q_max);
        if (!cert.certified) throw std::runtime_error("uncertified window");
    }
    ChartData data = collect(engine, spec, window);
    return spec.format == "svg" ? render_svg(data, spec, window)
                                : render_text(data, spec, window);
}

}  // namespace c2eff
