#include "c2eff/json_io.hpp"

#include <json.hpp>

namespace c2eff {

namespace {

using json = nlohmann::ordered_json;

std::string order_label(const MInt& order) {
    if (order == 0) return "Z2";
    int k = 0;
    MInt v = order;  // count the 2-exponent
    while (v > 1) {
        v /= 2;
        ++k;
    }
    return k == 1 ? "2" : "2^" + std::to_string(k);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json pages_section(E2Engine& engine, const Window& window) {
    json out;
    out["page"] = 2;
    out["groups"] = json::array();
    Page page = compute_e2(engine, window);
    for (const auto& [t, g] : page.groups) {
        json entry;
        entry["s"] = t.s;
        entry["q"] = t.q;
        entry["w"] = t.w;
        entry["gens"] = json::array();
        for (const auto& gen : g.generators)
            entry["gens"].push_back({{"name", gen.name}, {"order", order_label(gen.order)}});
        out["groups"].push_back(std::move(entry));
    }
    out["differentials"] = json::array();
    return out;
}

json summand_list(const std::vector<Summand>& summands) {
    json out = json::array();
    for (const auto& sm : summands)
        out.push_back({{"name", sm.name},
                       {"order", sm.order == 0 ? "Z2" : std::to_string(sm.order)}});
    return out;
}

json homotopy_section(E2Engine& engine, const Window& window, int oracle_min,
                      int oracle_max) {
    std::vector<ExtensionRecord> table = extension_table(engine, window);
    json out;
    out["groups"] = json::array();
    for (int s = window.s_min; s <= window.s_max; ++s)
        for (int w = window.w_min; w <= window.w_max; ++w) {
            HomotopyGroup g = assemble(engine, s, w, window.q_max, &table);
            if (g.summands.empty()) continue;
            out["groups"].push_back({{"s", s},
                                     {"w", w},
                                     {"summands", summand_list(g.summands)},
                                     {"status", g.status}});
        }
    out["oracle"] = json::array();
    for (int s = oracle_min; s <= oracle_max; ++s) {
        GradedGroup g = oracle_degree(s);
        if (g.trivial()) continue;
        json summands = json::array();
        for (const auto& gen : g.generators)
            summands.push_back({{"name", gen.name},
                                {"order", gen.order == 0 ? "Z2" : std::to_string(gen.order)}});
        out["oracle"].push_back({{"s", s}, {"summands", std::move(summands)}});
    }
    return out;
}

}  // namespace

std::string export_pages_json(E2Engine& engine, const Window& window) {
    json doc;
    doc["schema_version"] = 1;
    doc.update(pages_section(engine, window));
    return dump(doc);
}

std::string export_homotopy_json(E2Engine& engine, const Window& window,
                                 int oracle_min, int oracle_max) {
    json doc;
    doc["schema_version"] = 1;
    doc.update(homotopy_section(engine, window, oracle_min, oracle_max));
    return dump(doc);
}

std::string export_document(E2Engine& engine, const Window& window,
                            int oracle_min, int oracle_max) {
    json doc;
    doc["schema_version"] = 1;
    doc["window"] = {{"s_min", window.s_min},
                     {"s_max", window.s_max},
                     {"w_min", window.w_min},
                     {"w_max", window.w_max},
                     {"q_max", window.q_max}};
    doc["pages"] = pages_section(engine, window);
    doc["homotopy"] = homotopy_section(engine, window, oracle_min, oracle_max);
    return dump(doc);
}

std::string reserialize(const std::string& text) {
    json doc = json::parse(text);
    if (!doc.contains("schema_version") || doc["schema_version"] != 1)
        throw std::runtime_error("unsupported schema_version");
    return dump(doc);
}

}  // namespace c2eff
