#include "normsurf/bogomolov.hpp"
#include "normsurf/bounds.hpp"
#include "normsurf/io.hpp"
#include "normsurf/lattice.hpp"
#include "normsurf/walls.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using normsurf::Rational;
using json = normsurf::io::json;

// Exit-code contract across every subcommand:
//   0 computed / satisfied, 1 computed / not satisfied (or lemma hypothesis
//   unmet), 2 input error.
constexpr int kExitSatisfied = 0;
constexpr int kExitUnsatisfied = 1;
constexpr int kExitInputError = 2;

void emit(const json& report, bool table) {
    if (table)
        std::cout << normsurf::io::render_kv(report);
    else
        std::cout << report.dump(2) << '\n';
}

struct CxArgs {
    std::string input;
    std::string method = "continuous";
    long long r_cap = 3;
    bool table = false;
};

int run_cx(const CxArgs& args) {
    const auto surface = normsurf::io::load_surface(args.input);
    if (!surface.profile)
        throw std::invalid_argument("input has no resolution_profile; `cx` needs one");
    normsurf::require_valid(*surface.profile);
    normsurf::CxEstimate estimate;
    if (args.method == "continuous")
        estimate = normsurf::cx_continuous(*surface.profile);
    else if (args.method == "integer")
        estimate = normsurf::cx_integer(*surface.profile, args.r_cap);
    else
        throw std::invalid_argument("unknown method: " + args.method);
    json report = normsurf::io::to_json(estimate);
    report["surface"] = surface.name;
    emit(report, args.table);
    return kExitSatisfied;
}

struct BoundArgs {
    std::string c_x;
    long long l_z = 0;
    long long l_t = 0;
    bool closed_form = false;
    bool compare = false;
    long long l_max = 0;
    bool table = false;
};

int run_bound(const BoundArgs& args) {
    const Rational c_x = normsurf::parse_rational(args.c_x);
    const normsurf::BoundQuery query{c_x, args.l_z + args.l_t};
    json report;
    report["c_x"] = normsurf::io::rational_to_json(c_x);
    report["l"] = query.l;
    report["m"] = normsurf::io::rational_to_json(normsurf::m_bound(query));
    report["m_prime"] = normsurf::io::rational_to_json(normsurf::m_prime_bound(query));
    report["a"] = normsurf::fujita_power(c_x, query.l).a;
    if (args.closed_form)
        report["closed_form"] = normsurf::io::rational_to_json(normsurf::m_closed_form(query));
    if (args.compare) {
        json rows = json::array();
        for (const auto& d : normsurf::compare_m_forms({c_x}, args.l_max)) {
            json row;
            row["c_x"] = normsurf::io::rational_to_json(d.c_x);
            row["l"] = d.l;
            row["m"] = normsurf::io::rational_to_json(d.brute);
            row["closed_form"] = normsurf::io::rational_to_json(d.closed);
            rows.push_back(std::move(row));
        }
        report["disagreements"] = rows;
    }
    emit(report, args.table);
    return kExitSatisfied;
}

struct CheckArgs {
    std::string h_sq, hc_min, c_x;
    long long l_z = 0;
    long long l_t = 0;
    std::optional<long long> l1, l2;
    bool table = false;
};

int run_check(const CheckArgs& args) {
    std::optional<std::pair<long long, long long>> partition;
    if (args.l1.has_value() != args.l2.has_value())
        throw std::invalid_argument("--l1 and --l2 must be given together");
    if (args.l1)
        partition = {{*args.l1, *args.l2}};
    const auto report = normsurf::check_general_vanishing(
        normsurf::parse_rational(args.h_sq), normsurf::parse_rational(args.hc_min),
        normsurf::parse_rational(args.c_x), args.l_z, args.l_t, partition);
    emit(normsurf::io::to_json(report), args.table);
    return report.satisfied ? kExitSatisfied : kExitUnsatisfied;
}

struct WallsArgs {
    std::string input;
    std::string c_x = "0";
    long long l = 0;
    long long r_max = 1;
    long long box = 1;
    bool table = false;
};

int run_walls(const WallsArgs& args) {
    const auto surface = normsurf::io::load_surface(args.input);
    const Rational c_x = normsurf::parse_rational(args.c_x);
    const auto window =
        normsurf::SearchWindow::symmetric_box(args.r_max, surface.lattice.rank, args.box);
    const auto report = normsurf::verify_lemma_hodge(surface.lattice, c_x, args.l, window);
    json out = normsurf::io::walls_report_json(report, window, c_x, args.l);
    out["surface"] = surface.name;
    if (args.table) {
        std::cout << "surface      " << surface.name << '\n'
                  << "pass         " << (report.pass() ? "yes" : "no") << '\n'
                  << "candidates   " << report.candidates.size() << '\n'
                  << "violations   " << report.violations.size() << '\n';
        if (!report.refusal.empty())
            std::cout << "refusal      " << report.refusal << '\n';
        std::vector<std::vector<std::string>> rows{{"r", "A", "A.H", "A^2", "status"}};
        for (const auto& cand : report.candidates) {
            std::string coords;
            for (const auto& c : cand.a.coords)
                coords += (coords.empty() ? "" : ",") + normsurf::rational_to_string(c);
            const bool violating =
                std::find_if(report.violations.begin(), report.violations.end(),
                             [&](const normsurf::Candidate& v) {
                                 return v.r == cand.r && v.a.coords == cand.a.coords;
                             }) != report.violations.end();
            rows.push_back({std::to_string(cand.r), coords,
                            normsurf::rational_to_string(cand.a_dot_h),
                            normsurf::rational_to_string(cand.a_sq),
                            violating ? "VIOLATES" : "ok"});
        }
        if (rows.size() > 1)
            std::cout << normsurf::io::render_aligned(rows);
    } else {
        std::cout << out.dump(2) << '\n';
    }
    return report.pass() ? kExitSatisfied : kExitUnsatisfied;
}

struct ReiderArgs {
    std::string c_x, h_sq;
    long long l_z = 0;
    long long l_t = 0;
    long long denom = 1;
    bool table = false;
};

int run_reider(const ReiderArgs& args) {
    const Rational c_x = normsurf::parse_rational(args.c_x);
    const Rational h_sq = normsurf::parse_rational(args.h_sq);
    const auto table = normsurf::reider_table(c_x, args.l_z, args.l_t, h_sq, args.denom);
    json report = normsurf::io::to_json(table);
    report["c_x"] = normsurf::io::rational_to_json(c_x);
    report["h_sq"] = normsurf::io::rational_to_json(h_sq);
    report["denom"] = args.denom;
    if (!table.hypothesis_ok)
        report["warning"] = "H^2 <= (C_X + l' + 1)^2: the theorem's hypothesis fails, "
                            "table listed anyway";
    if (args.table) {
        std::cout << "l_prime        " << table.l_prime << '\n'
                  << "hypothesis_ok  " << (table.hypothesis_ok ? "yes" : "no") << '\n';
        std::vector<std::vector<std::string>> rows{{"D.H", "D^2"}};
        for (const auto& pair : table.pairs)
            rows.push_back({normsurf::rational_to_string(pair.d_dot_h),
                            normsurf::rational_to_string(pair.d_sq)});
        std::cout << normsurf::io::render_aligned(rows);
    } else {
        std::cout << report.dump(2) << '\n';
    }
    return kExitSatisfied;
}

struct MumfordArgs {
    std::string input;
    std::string a, b;
    bool table = false;
};

int run_mumford(const MumfordArgs& args) {
    const auto surface = normsurf::io::load_surface(args.input);
    normsurf::require_valid(surface.lattice);
    const normsurf::DivisorClass a{normsurf::io::parse_coords(args.a), std::nullopt};
    const normsurf::DivisorClass b{normsurf::io::parse_coords(args.b), std::nullopt};
    const auto pa = normsurf::mumford_pullback(a, surface.lattice);
    const auto pb = normsurf::mumford_pullback(b, surface.lattice);
    const Rational product = normsurf::mumford_product(a, b, surface.lattice);

    auto class_json = [](const normsurf::MumfordClass& mc) {
        json j;
        json tilde = json::array(), delta = json::array(), total = json::array();
        for (const auto& c : mc.tilde_part.coords)
            tilde.push_back(normsurf::rational_to_string(c));
        for (const auto& c : mc.delta_part.coords)
            delta.push_back(normsurf::rational_to_string(c));
        for (const auto& c : mc.total())
            total.push_back(normsurf::rational_to_string(c));
        j["tilde"] = tilde;
        j["delta"] = delta;
        j["pullback"] = total;
        return j;
    };
    json report;
    report["surface"] = surface.name;
    report["a"] = class_json(pa);
    report["b"] = class_json(pb);
    report["product"] = normsurf::io::rational_to_json(product);
    emit(report, args.table);
    return kExitSatisfied;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intersection products, Bogomolov constants, and "
                 "Reider-type bound tables for normal surfaces"};
    app.require_subcommand(1);

    CxArgs cx_args;
    auto* cx = app.add_subcommand("cx", "Estimate the Bogomolov constant from resolution data");
    cx->add_option("input", cx_args.input, "surface description JSON")->required();
    cx->add_option("--method", cx_args.method, "continuous or integer")
        ->check(CLI::IsMember({"continuous", "integer"}));
    cx->add_option("--r-cap", cx_args.r_cap, "rank cap for the integer search")
        ->check(CLI::PositiveNumber);
    cx->add_flag("--table", cx_args.table, "human-readable output");

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "Fujita-power functions m, m' and the power a");
    bound->add_option("--cx", bound_args.c_x, "Bogomolov constant, exact rational")->required();
    bound->add_option("--lz", bound_args.l_z)->required()->check(CLI::NonNegativeNumber);
    bound->add_option("--lt", bound_args.l_t)->check(CLI::NonNegativeNumber);
    bound->add_flag("--closed-form", bound_args.closed_form, "also print the closed form");
    bound->add_flag("--compare", bound_args.compare, "audit the closed form up to --lmax");
    bound->add_option("--lmax", bound_args.l_max)->check(CLI::NonNegativeNumber);
    bound->add_flag("--table", bound_args.table);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Check the vanishing theorem's hypotheses");
    check->add_option("--hsq", check_args.h_sq, "H^2")->required();
    check->add_option("--hcmin", check_args.hc_min, "min of H.C over nonzero effective C")
        ->required();
    check->add_option("--cx", check_args.c_x)->required();
    check->add_option("--lz", check_args.l_z)->required()->check(CLI::NonNegativeNumber);
    check->add_option("--lt", check_args.l_t)->required()->check(CLI::NonNegativeNumber);
    check->add_option("--l1", check_args.l1, "fix the partition instead of scanning");
    check->add_option("--l2", check_args.l2);
    check->add_flag("--table", check_args.table);

    WallsArgs walls_args;
    auto* walls = app.add_subcommand(
        "walls", "Enumerate candidate destabilizers and verify the trichotomy");
    walls->add_option("input", walls_args.input, "surface description JSON")->required();
    walls->add_option("--cx", walls_args.c_x)->required();
    walls->add_option("--l", walls_args.l)->required()->check(CLI::NonNegativeNumber);
    walls->add_option("--rmax", walls_args.r_max)->required()->check(CLI::PositiveNumber);
    walls->add_option("--box", walls_args.box, "symmetric coordinate box half-width")
        ->required()
        ->check(CLI::NonNegativeNumber);
    walls->add_flag("--table", walls_args.table);

    ReiderArgs reider_args;
    auto* reider = app.add_subcommand("reider", "Divisor constraint table of the Reider-type theorem");
    reider->add_option("--cx", reider_args.c_x)->required();
    reider->add_option("--lz", reider_args.l_z)->required()->check(CLI::NonNegativeNumber);
    reider->add_option("--lt", reider_args.l_t)->required()->check(CLI::NonNegativeNumber);
    reider->add_option("--hsq", reider_args.h_sq)->required();
    reider->add_option("--denom", reider_args.denom, "denominator bound N of the lattice")
        ->check(CLI::PositiveNumber);
    reider->add_flag("--table", reider_args.table);

    MumfordArgs mumford_args;
    auto* mumford = app.add_subcommand("mumford", "Mumford intersection product of two classes");
    mumford->add_option("input", mumford_args.input, "surface description JSON")->required();
    mumford->add_option("--a", mumford_args.a, "proper-transform coordinates, comma separated")
        ->required();
    mumford->add_option("--b", mumford_args.b, "proper-transform coordinates, comma separated")
        ->required();
    mumford->add_flag("--table", mumford_args.table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (cx->parsed())
            return run_cx(cx_args);
        if (bound->parsed())
            return run_bound(bound_args);
        if (check->parsed())
            return run_check(check_args);
        if (walls->parsed())
            return run_walls(walls_args);
        if (reider->parsed())
            return run_reider(reider_args);
        if (mumford->parsed())
            return run_mumford(mumford_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
