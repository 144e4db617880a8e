#pragma once

#include <json.hpp>

#include "posetcalc/grothendieck.hpp"

namespace posetcalc {

using nlohmann::json;

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Poset files: terse text ("objects: a b c" / "cover: u v" lines, '#'
// comments) or JSON ({"objects": [...], "covers": [["u","v"], ...]}).
json poset_to_json(const Poset& p);
PosetPtr poset_from_json(const json& j);
std::string poset_to_text(const Poset& p);
PosetPtr poset_from_text(const std::string& text);
PosetPtr parse_poset(const std::string& content);  // sniffs JSON vs text
PosetPtr load_poset(const std::string& path);

// Module files: {"poset": <inline object or file path>, "dims": {obj: int},
// "maps": {"u,v": [[entries]]}}. Entries are integers or rational strings;
// omitted dims are zero, omitted cover maps are zero matrices.
json module_to_json(const PosetModule& m);
PosetModule module_from_json(const json& j, const Field& f,
                             const std::string& base_dir = ".");
PosetModule load_module(const std::string& path, const Field& f);

json dimvec_to_json(const DimVector& d, const Poset& p);
json rank_invariant_to_json(const RankInvariant& r, const Poset& p);
json module_map_to_json(const ModuleMap& t, const Poset& p);
// {"verdict": ..., "witness"?: ..., "failure_bound"?: "p/q", ...}
json iso_result_to_json(const IsoResult& r, const Poset& p);

// Aligned dimension-vector grids for grid posets and their line posets;
// falls back to a flat listing when the poset is not grid-shaped.
std::string report_dimvec_grid_text(const DimVector& d, const Poset& p);
json report_dimvec_grid_json(const DimVector& d, const Poset& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace posetcalc
