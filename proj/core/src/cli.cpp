#include "c2eff/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <string_view>
#include <iostream>

#include "c2eff/chart.hpp"
#include "c2eff/json_io.hpp"
#include "c2eff/names.hpp"

namespace c2eff {

namespace {

struct Settings {
    int s_min = -6, s_max = 6, w_min = -6, w_max = 6, q_max = 10;
    int s_radius = 0, w_radius = 0;
    int oracle_min = -10, oracle_max = 16;
    std::string output_dir;

    Window window() const { return {s_min, s_max, w_min, w_max, q_max}; }
};

std::string order_text(MInt order) {
    if (order == 0) return "Z2";
    return "Z/" + std::to_string(order);
}

void list_coeff(const std::string& ring, const Window& win, std::ostream& out) {
    int count = 0;
    for (int s = win.s_min; s <= win.s_max; ++s)
        for (int w = win.w_min; w <= win.w_max; ++w) {
            if (ring == "f2") {
                if (auto m = f2_group_at(s, w)) {
                    out << "(" << s << "," << w << ") F2 " << m->display() << "\n";
                    ++count;
                }
            } else if (auto g = z2_generator_at(s, w)) {
                out << "(" << s << "," << w << ") " << (g->is_free() ? "Z2 " : "Z/2 ")
                    << g->display() << "\n";
                ++count;
            }
        }
    out << count << " nonzero bidegrees\n";
}

void list_e1(const Window& win, std::ostream& out) {
    int count = 0;
    for (int s = win.s_min; s <= win.s_max; ++s)
        for (int w = win.w_min; w <= win.w_max; ++w)
            for (int q = 0; q <= win.q_max; ++q) {
                auto basis = e1_enumerate(TriDegree{s, q, w});
                if (basis.empty()) continue;
                out << "(" << s << "," << q << "," << w << ")";
                for (const auto& b : basis) {
                    out << " " << b.display() << ";";
                    ++count;
                }
                out << "\n";
            }
    out << count << " basis elements\n";
}

void list_e2(E2Engine& engine, const Window& win, std::ostream& out) {
    Page page = compute_e2(engine, win);
    for (const auto& [t, g] : page.groups) {
        out << "(" << t.s << "," << t.q << "," << t.w << ")";
        for (const auto& gen : g.generators)
            out << " " << order_text(gen.order) << "{" << gen.name << "};";
        out << "\n";
    }
    out << page.groups.size() << " nonzero tridegrees\n";
}

void list_homotopy(E2Engine& engine, const Settings& st, std::ostream& out) {
    Window win = st.window();
    auto table = extension_table(engine, win);
    int count = 0;
    for (int s = win.s_min; s <= win.s_max; ++s)
        for (int w = win.w_min; w <= win.w_max; ++w) {
            HomotopyGroup g = assemble(engine, s, w, win.q_max, &table);
            if (g.summands.empty()) continue;
            ++count;
            out << "pi(" << s << "," << w << ") =";
            bool first = true;
            for (const auto& sm : g.summands) {
                out << (first ? " " : " + ") << order_text(sm.order) << "{" << sm.name
                    << "}";
                first = false;
            }
            if (g.status != "resolved") out << "  [" << g.status << "]";
            out << "\n";
        }
    out << count << " nonzero bidegrees\n";
}

int verify(E2Engine& engine, const std::string& suite, const Settings& st,
           std::ostream& out) {
    Window win = st.window();
    long long total = 0;
    auto report = [&](const std::string& name, long long n) {
        out << name << ": " << n << " mismatches\n";
        total += n;
    };

    if (suite == "all" || suite == "coeff") {
        long long n = static_cast<long long>(z2_verify_closed_form(win).size());
        // bidegrees where the two coefficient descriptions disagree about
        // reduction: every integral generator must reduce into the mod-2 group
        for (int s = win.s_min; s <= win.s_max; ++s)
            for (int w = win.w_min; w <= win.w_max; ++w)
                if (auto g = z2_generator_at(s, w)) {
                    F2Element r = z2_reduce(*g);
                    for (const auto& m : r.terms())
                        if (!f2_group_at(m.degree().s, m.degree().w)) ++n;
                }
        report("coeff", n);
    }
    if (suite == "all" || suite == "d1") {
        long long n = 0;
        for (const auto& b : e1_enumerate(win))
            if (!e1_d1(e1_d1(b)).is_zero()) ++n;
        report("d1", n);
    }
    if (suite == "all" || suite == "collapse") {
        long long n = 0;
        for (const auto& e : collapse_report(engine, win))
            if (e.tag == "UNJUSTIFIED") ++n;
        report("collapse", n);
    }
    if (suite == "all" || suite == "ring") {
        // chains on stem s live in filtrations up to about s + 8
        int q_depth = std::max(win.q_max, st.oracle_max + 8);
        Coweight0Report r =
            compare_coweight0(engine, st.oracle_min, st.oracle_max, q_depth);
        report("ring", static_cast<long long>(r.mismatched_stems.size() +
                                              r.unresolved_stems.size()));
    }
    if (suite == "all" || suite == "periodicity") {
        long long n = 0;
        for (const char* kind : {"tau4", "v14", "beta"})
            for (const auto& e : periodicity_check(engine, kind, win))
                if (e.violation) ++n;
        report("periodicity", n);
    }
    return total == 0 ? 0 : 1;
}

int write_out(const std::string& text, const std::string& path, const Settings& st,
              std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return 0;
    }
    std::string full =
        st.output_dir.empty() ? path : st.output_dir + "/" + path;
    std::ofstream f(full, std::ios::binary);
    if (!f) {
        err << "cannot open " << full << "\n";
        return 2;
    }
    f << text;
    out << "wrote " << full << "\n";
    return 0;
}

// key = value lines, '#' comments; applied before flag parsing so that any
// explicit flag overrides the file.
bool apply_config(const std::string& path, Settings& st, std::ostream& err) {
    std::ifstream f(path);
    if (!f) {
        err << "cannot read config file " << path << "\n";
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::string key, value;
        auto eq = line.find('=');
        auto trim = [](std::string s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.pop_back();
            return s;
        };
        if (eq == std::string::npos) {
            if (trim(line).empty()) continue;
            err << path << ":" << lineno << ": expected key = value\n";
            return false;
        }
        key = trim(line.substr(0, eq));
        value = trim(line.substr(eq + 1));
        try {
            if (key == "s-min") st.s_min = std::stoi(value);
            else if (key == "s-max") st.s_max = std::stoi(value);
            else if (key == "w-min") st.w_min = std::stoi(value);
            else if (key == "w-max") st.w_max = std::stoi(value);
            else if (key == "q-max") st.q_max = std::stoi(value);
            else if (key == "oracle-min") st.oracle_min = std::stoi(value);
            else if (key == "oracle-max") st.oracle_max = std::stoi(value);
            else if (key == "output-dir") st.output_dir = value;
            else {
                err << path << ":" << lineno << ": unknown key " << key << "\n";
                return false;
            }
        } catch (const std::exception&) {
            err << path << ":" << lineno << ": bad value for " << key << "\n";
            return false;
        }
    }
    return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computation and verification for a C2-effective spectral sequence"};
    app.require_subcommand(1);
    Settings st;

    // pull --config out before the flag parse
    std::vector<std::string> rest;
    for (size_t i = 0; i < args.size(); ++i) {
        std::string_view a = args[i];
        std::string path;
        if (a == "--config") {
            if (i + 1 >= args.size()) {
                err << "--config needs a file\n";
                return 2;
            }
            path = args[++i];
        } else if (a.rfind("--config=", 0) == 0) {
            path = std::string(a.substr(9));
        } else {
            rest.push_back(args[i]);
            continue;
        }
        if (!apply_config(path, st, err)) return 2;
    }

    app.add_option("--s-min", st.s_min, "lowest stem");
    app.add_option("--s-max", st.s_max, "highest stem");
    app.add_option("--w-min", st.w_min, "lowest weight");
    app.add_option("--w-max", st.w_max, "highest weight");
    app.add_option("--q-max", st.q_max, "highest slice filtration");
    app.add_option("--s", st.s_radius, "stem radius shorthand: -s .. s");
    app.add_option("--w", st.w_radius, "weight radius shorthand: -w .. w");
    app.add_option("--oracle-min", st.oracle_min, "lowest oracle stem");
    app.add_option("--oracle-max", st.oracle_max, "highest oracle stem");
    app.add_option("--output-dir", st.output_dir, "directory for written files");

    std::string ring = "f2", page = "e2", format = "svg", suite = "all";
    std::string chart_out, export_path;
    int coweight = 0;
    bool as_json = false;

    CLI::App* c_coeff = app.add_subcommand("coeff", "coefficient ring groups");
    c_coeff->add_option("--ring", ring, "f2 or z2")
        ->check(CLI::IsMember({"f2", "z2"}));
    CLI::App* c_e1 = app.add_subcommand("e1", "first-page basis");
    CLI::App* c_e2 = app.add_subcommand("e2", "second (= infinity) page groups");
    c_e2->add_flag("--json", as_json, "emit the JSON export schema");
    CLI::App* c_hom = app.add_subcommand("homotopy", "assembled homotopy groups");
    c_hom->add_flag("--json", as_json, "emit the JSON export schema");
    CLI::App* c_chart = app.add_subcommand("chart", "one coweight line as a chart");
    c_chart->add_option("--coweight", coweight, "coweight of the line")->required();
    c_chart->add_option("--page", page, "e1, e2 or homotopy")
        ->check(CLI::IsMember({"e1", "e2", "homotopy"}));
    c_chart->add_option("--format", format, "svg or text")
        ->check(CLI::IsMember({"svg", "text"}));
    c_chart->add_option("--out", chart_out, "output file (default stdout)");
    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite, "all, coeff, d1, collapse, ring, periodicity")
        ->check(CLI::IsMember({"all", "coeff", "d1", "collapse", "ring", "periodicity"}));
    CLI::App* c_export = app.add_subcommand("export", "write the full JSON document");
    c_export->add_option("path", export_path, "output file")->required();
    for (CLI::App* sub : {c_coeff, c_e1, c_e2, c_hom, c_chart, c_verify, c_export})
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("c2eff");
    for (const auto& a : rest) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    if (app.count("--s") > 0) {
        if (app.count("--s-min") == 0) st.s_min = -st.s_radius;
        if (app.count("--s-max") == 0) st.s_max = st.s_radius;
    }
    if (app.count("--w") > 0) {
        if (app.count("--w-min") == 0) st.w_min = -st.w_radius;
        if (app.count("--w-max") == 0) st.w_max = st.w_radius;
    }
    if (st.s_min > st.s_max || st.w_min > st.w_max || st.q_max < 0) {
        err << "invalid window: require s-min <= s-max, w-min <= w-max, q-max >= 0\n";
        return 2;
    }

    try {
        E2Engine engine;
        if (c_coeff->parsed()) {
            list_coeff(ring, st.window(), out);
        } else if (c_e1->parsed()) {
            list_e1(st.window(), out);
        } else if (c_e2->parsed()) {
            if (as_json)
                out << export_pages_json(engine, st.window());
            else
                list_e2(engine, st.window(), out);
        } else if (c_hom->parsed()) {
            if (as_json)
                out << export_homotopy_json(engine, st.window(), st.oracle_min,
                                            st.oracle_max);
            else
                list_homotopy(engine, st, out);
        } else if (c_chart->parsed()) {
            ChartSpec spec{coweight, page, format};
            std::string doc = emit_chart(engine, spec, st.window());
            return write_out(doc, chart_out, st, out, err);
        } else if (c_verify->parsed()) {
            return verify(engine, suite, st, out);
        } else if (c_export->parsed()) {
            std::string doc =
                export_document(engine, st.window(), st.oracle_min, st.oracle_max);
            return write_out(doc, export_path, st, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace c2eff
