#pragma once

#include <string>

#include "c2eff/homotopy.hpp"

namespace c2eff {

// Serializations are deterministic: fixed key order, groups sorted by degree,
// two-space indentation, trailing newline.  All documents carry
// "schema_version": 1.

// Second page over the window:
// {"schema_version", "page": 2, "groups": [{"s","q","w","gens":
// [{"name","order":"Z2"|"2^k"}]}], "differentials": []} (the page collapses,
// so the differential list is empty by the collapse certificate).
std::string export_pages_json(E2Engine& engine, const Window& window);

// Assembled homotopy groups over the window plus the coweight-0 oracle:
// {"schema_version", "groups": [{"s","w","summands":[{"name","order"}],
// "status"}], "oracle": [{"s","summands":[...]}]}; order is "Z2" for a free
// 2-adic summand, otherwise the decimal order.
std::string export_homotopy_json(E2Engine& engine, const Window& window,
                                 int oracle_min, int oracle_max);

// Both sections under one root, for the export subcommand.
std::string export_document(E2Engine& engine, const Window& window,
                            int oracle_min, int oracle_max);

// Parse and re-serialize; the result is byte-identical to a document produced
// by the exporters.  Throws std::runtime_error on malformed input or a
// schema_version mismatch.
std::string reserialize(const std::string& text);

}  // namespace c2eff
