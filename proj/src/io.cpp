#include "normsurf/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace normsurf::io {

json rational_to_json(const Rational& q) {
    return rational_to_string(q);
}

Rational rational_from_json(const json& j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned())
        return Rational(j.get<long long>());
    if (j.is_number_float())
        throw std::invalid_argument("floating-point value rejected; use \"p/q\" strings");
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

long long int_from_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned())
        return j.get<long long>();
    throw std::invalid_argument("expected an integer");
}

std::vector<Rational> parse_coords(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_rational(item));
    if (out.empty())
        throw std::invalid_argument("empty coordinate list");
    return out;
}

namespace {

std::vector<Rational> rational_vector(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& entry : j)
        out.push_back(rational_from_json(entry));
    return out;
}

json rational_vector_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& q : v)
        out.push_back(rational_to_json(q));
    return out;
}

}  // namespace

json to_json(const SurfaceLattice& lattice) {
    json j;
    j["rank"] = lattice.rank;
    json gram = json::array();
    for (const auto& row : lattice.gram)
        gram.push_back(rational_vector_json(row));
    j["gram"] = gram;
    json blocks = json::array();
    for (const auto& block : lattice.exceptional_blocks)
        blocks.push_back(block);
    j["exceptional_blocks"] = blocks;
    if (lattice.ample)
        j["ample"] = rational_vector_json(*lattice.ample);
    if (!lattice.canonical_pairing.empty()) {
        json k = json::array();
        for (const auto& entry : lattice.canonical_pairing)
            k.push_back(entry ? rational_to_json(*entry) : json(nullptr));
        j["canonical_pairing"] = k;
    }
    return j;
}

SurfaceLattice lattice_from_json(const json& j) {
    SurfaceLattice lattice;
    const long long rank = int_from_json(j.at("rank"));
    if (rank <= 0)
        throw std::invalid_argument("lattice rank must be positive");
    lattice.rank = static_cast<std::size_t>(rank);

    const auto& gram = j.at("gram");
    if (!gram.is_array() || gram.size() != lattice.rank)
        throw std::invalid_argument("gram must be a rank x rank array");
    for (const auto& row : gram) {
        auto parsed = rational_vector(row);
        if (parsed.size() != lattice.rank)
            throw std::invalid_argument("gram must be a rank x rank array");
        lattice.gram.push_back(std::move(parsed));
    }

    if (j.contains("exceptional_blocks")) {
        for (const auto& block : j.at("exceptional_blocks")) {
            std::vector<std::size_t> indices;
            for (const auto& entry : block) {
                const long long i = int_from_json(entry);
                if (i < 0 || i >= rank)
                    throw std::invalid_argument("exceptional index out of range");
                indices.push_back(static_cast<std::size_t>(i));
            }
            lattice.exceptional_blocks.push_back(std::move(indices));
        }
    }

    if (j.contains("ample")) {
        auto ample = rational_vector(j.at("ample"));
        if (ample.size() != lattice.rank)
            throw std::invalid_argument("ample class has wrong length");
        lattice.ample = std::move(ample);
    }

    if (j.contains("canonical_pairing")) {
        const auto& k = j.at("canonical_pairing");
        if (!k.is_array() || k.size() != lattice.rank)
            throw std::invalid_argument("canonical_pairing has wrong length");
        for (const auto& entry : k)
            lattice.canonical_pairing.push_back(
                entry.is_null() ? std::nullopt
                                : std::optional<Rational>(rational_from_json(entry)));
    }
    return lattice;
}

json to_json(const ResolutionProfile& profile) {
    json j;
    json points = json::array();
    for (const auto& point : profile.points) {
        json p;
        p["gram"] = point.gram;
        p["chi"] = point.chi;
        if (point.canonical)
            p["canonical"] = rational_vector_json(*point.canonical);
        points.push_back(std::move(p));
    }
    j["points"] = points;
    j["h0_r1"] = profile.h0_r1;
    j["base_constant"] = rational_to_json(profile.base_constant);
    return j;
}

ResolutionProfile profile_from_json(const json& j) {
    ResolutionProfile profile;
    if (j.contains("points")) {
        for (const auto& p : j.at("points")) {
            SingularPointData point;
            for (const auto& row : p.at("gram")) {
                std::vector<long long> parsed;
                for (const auto& entry : row)
                    parsed.push_back(int_from_json(entry));
                point.gram.push_back(std::move(parsed));
            }
            for (const auto& entry : p.at("chi"))
                point.chi.push_back(int_from_json(entry));
            if (p.contains("canonical"))
                point.canonical = rational_vector(p.at("canonical"));
            profile.points.push_back(std::move(point));
        }
    }
    if (j.contains("h0_r1"))
        profile.h0_r1 = int_from_json(j.at("h0_r1"));
    if (j.contains("base_constant"))
        profile.base_constant = rational_from_json(j.at("base_constant"));
    return profile;
}

KosekiKind koseki_kind_from_name(const std::string& name) {
    if (name == "minimal_general_type") return KosekiKind::minimal_general_type;
    if (name == "quasi_elliptic_kappa1") return KosekiKind::quasi_elliptic_kappa1;
    if (name == "other") return KosekiKind::other;
    throw std::invalid_argument("unknown koseki kind: " + name);
}

std::string koseki_kind_name(KosekiKind kind) {
    switch (kind) {
        case KosekiKind::minimal_general_type: return "minimal_general_type";
        case KosekiKind::quasi_elliptic_kappa1: return "quasi_elliptic_kappa1";
        case KosekiKind::other: return "other";
    }
    throw std::logic_error("unreachable");
}

SurfaceDescription surface_from_json(const json& j) {
    SurfaceDescription surface;
    if (j.contains("name"))
        surface.name = j.at("name").get<std::string>();
    if (j.contains("characteristic")) {
        surface.characteristic = int_from_json(j.at("characteristic"));
        if (surface.characteristic < 0)
            throw std::invalid_argument("characteristic must be 0 or a prime");
    }
    surface.lattice = lattice_from_json(j.at("lattice"));

    if (j.contains("koseki")) {
        const auto& k = j.at("koseki");
        KosekiParams params;
        params.kind = koseki_kind_from_name(k.at("kind").get<std::string>());
        if (k.contains("k_squared"))
            params.k_squared = int_from_json(k.at("k_squared"));
        if (k.contains("chi_O"))
            params.chi_O = int_from_json(k.at("chi_O"));
        surface.koseki = params;
    }

    if (j.contains("resolution_profile")) {
        auto profile = profile_from_json(j.at("resolution_profile"));
        if (surface.koseki) {
            const Rational derived = koseki_base_constant(
                surface.koseki->kind, surface.koseki->k_squared, surface.koseki->chi_O);
            if (j.at("resolution_profile").contains("base_constant") &&
                profile.base_constant != derived)
                throw std::invalid_argument(
                    "explicit base_constant disagrees with the koseki-derived value " +
                    rational_to_string(derived));
            profile.base_constant = derived;
        }
        surface.profile = std::move(profile);
    }
    return surface;
}

SurfaceDescription load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return surface_from_json(j);
}

json to_json(const SurfaceDescription& surface) {
    json j;
    j["name"] = surface.name;
    j["characteristic"] = surface.characteristic;
    j["lattice"] = to_json(surface.lattice);
    if (surface.profile)
        j["resolution_profile"] = to_json(*surface.profile);
    if (surface.koseki) {
        json k;
        k["kind"] = koseki_kind_name(surface.koseki->kind);
        k["k_squared"] = surface.koseki->k_squared;
        k["chi_O"] = surface.koseki->chi_O;
        j["koseki"] = k;
    }
    return j;
}

json to_json(const ChernCharacter& ch) {
    json j;
    j["ch0"] = ch.ch0;
    j["ch1"] = rational_vector_json(ch.ch1.coords);
    j["ch2"] = rational_to_json(ch.ch2);
    return j;
}

ChernCharacter chern_from_json(const json& j) {
    ChernCharacter ch;
    ch.ch0 = int_from_json(j.at("ch0"));
    ch.ch1 = DivisorClass{rational_vector(j.at("ch1")), std::nullopt};
    ch.ch2 = rational_from_json(j.at("ch2"));
    return ch;
}

json to_json(const StabilityPoint& pt) {
    json j;
    j["s"] = rational_to_json(pt.s);
    j["t_sq"] = rational_to_json(pt.t_sq);
    j["c_x"] = rational_to_json(pt.c_x);
    return j;
}

json to_json(const CxEstimate& estimate) {
    json j;
    j["value"] = rational_to_json(estimate.value);
    j["method"] = method_name(estimate.method);
    if (estimate.r_cap)
        j["r_cap"] = *estimate.r_cap;
    if (estimate.witness) {
        json w;
        w["r"] = estimate.witness->r;
        w["v"] = estimate.witness->v;
        j["witness"] = w;
    }
    if (estimate.method == CxMethod::integer_heuristic)
        j["warning"] = "estimate not certified: raise r_cap until the value "
                       "dominates the continuous envelope";
    return j;
}

json to_json(const VanishingReport& report) {
    json j;
    j["satisfied"] = report.satisfied;
    j["partition"] = {{"l1", report.l1}, {"l2", report.l2}};
    json failed = json::array();
    for (const auto& f : report.failed) {
        json entry;
        entry["condition"] = f.name;
        entry["lhs"] = rational_to_json(f.lhs);
        entry["rhs"] = rational_to_json(f.rhs);
        failed.push_back(std::move(entry));
    }
    j["failed_conditions"] = failed;
    return j;
}

json to_json(const Candidate& candidate) {
    json j;
    j["r"] = candidate.r;
    j["a"] = rational_vector_json(candidate.a.coords);
    j["a_dot_h"] = rational_to_json(candidate.a_dot_h);
    j["a_sq"] = rational_to_json(candidate.a_sq);
    return j;
}

json to_json(const ReiderTable& table) {
    json j;
    j["l_prime"] = table.l_prime;
    j["hypothesis_ok"] = table.hypothesis_ok;
    json pairs = json::array();
    for (const auto& pair : table.pairs) {
        json entry;
        entry["d_dot_h"] = rational_to_json(pair.d_dot_h);
        entry["d_sq"] = rational_to_json(pair.d_sq);
        pairs.push_back(std::move(entry));
    }
    j["pairs"] = pairs;
    return j;
}

json walls_report_json(const LemmaHodgeReport& report, const SearchWindow& window,
                       const Rational& c_x, long long l) {
    json j;
    json candidates = json::array();
    for (const auto& cand : report.candidates)
        candidates.push_back(to_json(cand));
    json violations = json::array();
    for (const auto& cand : report.violations)
        violations.push_back(to_json(cand));
    j["candidates"] = candidates;
    j["violations"] = violations;
    json w;
    w["r_max"] = window.r_max;
    json bounds = json::array();
    for (const auto& [lo, hi] : window.coord_bounds)
        bounds.push_back(json::array({lo, hi}));
    w["coord_bounds"] = bounds;
    j["window"] = w;
    json hyp;
    hyp["c_x"] = rational_to_json(c_x);
    hyp["l"] = l;
    hyp["h_sq"] = rational_to_json(report.h_sq);
    hyp["threshold"] = rational_to_json(report.threshold);
    hyp["hypothesis_met"] = report.hypothesis_met;
    if (!report.refusal.empty())
        hyp["refusal"] = report.refusal;
    j["hypotheses"] = hyp;
    j["modeling_errors"] = report.modeling_errors;
    j["pass"] = report.pass();
    return j;
}

std::string render_aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size())
            widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                os << "  ";
            os << row[i];
            if (i + 1 < row.size())
                os << std::string(widths[i] - row[i].size(), ' ');
        }
        os << '\n';
    }
    return os.str();
}

std::string render_kv(const json& j) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, value] : j.items()) {
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        rows.push_back({key, std::move(text)});
    }
    return render_aligned(rows);
}

}  // namespace normsurf::io
