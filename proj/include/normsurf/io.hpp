#pragma once

#include "normsurf/bogomolov.hpp"
#include "normsurf/bounds.hpp"
#include "normsurf/lattice.hpp"
#include "normsurf/stability.hpp"
#include "normsurf/walls.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace normsurf::io {

// Insertion order is kept so reports read top-down; rationals are strings,
// and no float ever enters or leaves a file.
using json = nlohmann::ordered_json;

json rational_to_json(const Rational& q);
// Accepts "p/q" strings and exact JSON integers; rejects floating point.
Rational rational_from_json(const json& j);
long long int_from_json(const json& j);

// Comma-separated rational coordinates, e.g. "1,0,-2/3".
std::vector<Rational> parse_coords(const std::string& text);

json to_json(const SurfaceLattice& lattice);
SurfaceLattice lattice_from_json(const json& j);

json to_json(const ResolutionProfile& profile);
ResolutionProfile profile_from_json(const json& j);

struct KosekiParams {
    KosekiKind kind = KosekiKind::other;
    long long k_squared = 0;
    long long chi_O = 0;
};

KosekiKind koseki_kind_from_name(const std::string& name);
std::string koseki_kind_name(KosekiKind kind);

// Top-level input schema. When koseki data is present the profile's base
// constant is derived from it (an explicit value must agree); in
// characteristic 0 an omitted base constant defaults to 0.
struct SurfaceDescription {
    std::string name;
    long long characteristic = 0;
    SurfaceLattice lattice;
    std::optional<ResolutionProfile> profile;
    std::optional<KosekiParams> koseki;
};

SurfaceDescription surface_from_json(const json& j);
SurfaceDescription load_surface(const std::string& path);
json to_json(const SurfaceDescription& surface);

json to_json(const ChernCharacter& ch);
ChernCharacter chern_from_json(const json& j);
json to_json(const StabilityPoint& pt);

json to_json(const CxEstimate& estimate);
json to_json(const VanishingReport& report);
json to_json(const Candidate& candidate);
json to_json(const ReiderTable& table);
json walls_report_json(const LemmaHodgeReport& report, const SearchWindow& window,
                       const Rational& c_x, long long l);

// Minimal fixed-width renderer for --table output: one row per entry,
// columns padded to the widest cell.
std::string render_aligned(const std::vector<std::vector<std::string>>& rows);
// Key/value lines from a flat JSON object (nested values are dumped inline).
std::string render_kv(const json& j);

}  // namespace normsurf::io
