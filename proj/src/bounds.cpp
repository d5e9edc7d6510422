#include "normsurf/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace normsurf {

namespace {

void check_query(const BoundQuery& q) {
    if (q.c_x < 0)
        throw std::invalid_argument("c_x must be nonnegative");
    if (q.l < 0)
        throw std::invalid_argument("l must be nonnegative");
}

Rational partition_value(const Rational& c_x, long long l1, long long l2) {
    const Rational from_l1 = 2 * (Rational(2 * l1) + c_x);
    const Rational from_l2 = c_x + Rational(2 * l2) + 1;
    return std::max(from_l1, from_l2);
}

}  // namespace

Rational m_bound(const BoundQuery& q) {
    check_query(q);
    Rational best = partition_value(q.c_x, 0, q.l);
    for (long long l1 = 1; l1 <= q.l; ++l1)
        best = std::min(best, partition_value(q.c_x, l1, q.l - l1));
    return best;
}

Rational m_prime_bound(const BoundQuery& q) {
    check_query(q);
    if (q.c_x == 1 && q.l == 0)
        return 3;
    return m_bound(q);
}

Rational m_closed_form(const BoundQuery& q) {
    check_query(q);
    const Rational twice_cx = 2 * q.c_x;
    const Rational linear = q.c_x + Rational(2 * q.l) + 1;
    const Rational a = std::max(twice_cx, linear);
    const Rational b =
        q.c_x + 2 * Rational(ceil_rational((Rational(4 * q.l) + q.c_x + 1) / 6)) + 1;
    const Rational c =
        2 * q.c_x + 4 * Rational(ceil_rational((Rational(2 * q.l) - q.c_x + 1) / 6));
    return std::min({a, b, c});
}

std::vector<MDisagreement> compare_m_forms(const std::vector<Rational>& c_x_grid,
                                           long long l_max) {
    std::vector<MDisagreement> out;
    for (const auto& c_x : c_x_grid) {
        for (long long l = 0; l <= l_max; ++l) {
            const BoundQuery q{c_x, l};
            const Rational brute = m_bound(q);
            const Rational closed = m_closed_form(q);
            if (brute != closed)
                out.push_back(MDisagreement{c_x, l, brute, closed});
        }
    }
    return out;
}

namespace {

VanishingReport check_partition(const Rational& h_sq, const Rational& hc_min,
                                const Rational& c_x, long long l1, long long l2) {
    VanishingReport report;
    report.l1 = l1;
    report.l2 = l2;
    auto require = [&](const std::string& name, const Rational& lhs, const Rational& rhs,
                       bool strict) {
        const bool ok = strict ? lhs > rhs : lhs >= rhs;
        if (!ok)
            report.failed.push_back(FailedCondition{name, lhs, rhs});
    };
    const Rational lin2 = c_x + Rational(2 * l2) + 1;
    require("H^2 >= (C_X + 2*l2 + 1)^2", h_sq, lin2 * lin2, false);
    require("H^2 > 4*(l1 + l2 + C_X)", h_sq, 4 * (Rational(l1 + l2) + c_x), true);
    require("H.C >= 2*(2*l1 + C_X)", hc_min, 2 * (Rational(2 * l1) + c_x), false);
    require("H.C >= C_X + 2*l2 + 1", hc_min, lin2, false);
    report.satisfied = report.failed.empty();
    return report;
}

}  // namespace

VanishingReport check_general_vanishing(const Rational& h_sq, const Rational& hc_min,
                                        const Rational& c_x, long long l_z, long long l_t,
                                        std::optional<std::pair<long long, long long>>
                                            partition) {
    if (c_x < 0 || l_z < 0 || l_t < 0)
        throw std::invalid_argument("check_general_vanishing: negative input");
    const long long l = l_z + l_t;
    if (partition) {
        const auto [l1, l2] = *partition;
        if (l1 < 0 || l2 < 0 || l1 + l2 != l)
            throw std::invalid_argument(
                "check_general_vanishing: partition must split l_z + l_t");
        return check_partition(h_sq, hc_min, c_x, l1, l2);
    }
    std::optional<VanishingReport> best;
    for (long long l1 = 0; l1 <= l; ++l1) {
        VanishingReport report = check_partition(h_sq, hc_min, c_x, l1, l - l1);
        if (report.satisfied)
            return report;
        if (!best || report.failed.size() < best->failed.size())
            best = std::move(report);
    }
    return *best;
}

FujitaResult fujita_power(const Rational& c_x, long long l_z) {
    const Rational mp = m_prime_bound(BoundQuery{c_x, l_z});
    const Integer a_big = ceil_rational(mp);
    const long long a = a_big.convert_to<long long>();
    FujitaResult result;
    result.a = a;
    result.verification =
        check_general_vanishing(Rational(a) * Rational(a), Rational(a), c_x, l_z, 0);
    if (!result.verification.satisfied)
        throw std::logic_error("fujita_power: re-verification failed; implementation bug");
    return result;
}

StabilityProp stability_prop_from_name(const std::string& name) {
    if (name == "prop_O") return StabilityProp::prop_O;
    if (name == "prop_Ork1") return StabilityProp::prop_Ork1;
    if (name == "prop_rk1") return StabilityProp::prop_rk1;
    if (name == "prop_liz") return StabilityProp::prop_liz;
    throw std::invalid_argument("unknown stability proposition: " + name);
}

std::string stability_prop_name(StabilityProp prop) {
    switch (prop) {
        case StabilityProp::prop_O: return "prop_O";
        case StabilityProp::prop_Ork1: return "prop_Ork1";
        case StabilityProp::prop_rk1: return "prop_rk1";
        case StabilityProp::prop_liz: return "prop_liz";
    }
    throw std::logic_error("unreachable");
}

StabilityHypothesisReport check_stability_hypothesis(StabilityProp prop, const Rational& h_sq,
                                                     const Rational& aux, const Rational& c_x,
                                                     long long l) {
    if (c_x < 0 || l < 0)
        throw std::invalid_argument("check_stability_hypothesis: negative input");
    StabilityHypothesisReport report;
    auto require = [&](const std::string& name, const Rational& lhs, const Rational& rhs,
                       bool strict) {
        const bool ok = strict ? lhs > rhs : lhs >= rhs;
        if (!ok)
            report.failed.push_back(FailedCondition{name, lhs, rhs});
    };
    const Rational lin = c_x + Rational(2 * l) + 1;
    const Rational twice = 2 * (c_x + Rational(2 * l));
    switch (prop) {
        case StabilityProp::prop_O:
            require("H^2 > (C_X + 2l + 1)^2", h_sq, lin * lin, true);
            require("M >= C_X + 2l + 1", aux, lin, false);
            break;
        case StabilityProp::prop_Ork1:
            require("H^2 >= (C_X + 2l + 1)^2", h_sq, lin * lin, false);
            require("H.C >= C_X + 2l + 1", aux, lin, false);
            // t^2 = 1/4 - (2l + c_x)/H^2 degenerates exactly here.
            if (h_sq == 4 * (Rational(2 * l) + c_x))
                report.degenerate_point = true;
            break;
        case StabilityProp::prop_rk1:
            require("H^2 > 4*(2l + C_X)", h_sq, 4 * (Rational(2 * l) + c_x), true);
            require("H.C >= 2*(2l + C_X)", aux, twice, false);
            break;
        case StabilityProp::prop_liz: {
            require("H^2 > (C_X + 2l + 1)^2", h_sq, lin * lin, true);
            const Rational cx1 = c_x + 1;
            require("M >= max(2*(C_X + 2l), C_X + 1)", aux, std::max(twice, cx1), false);
            break;
        }
    }
    report.satisfied = report.failed.empty() && !report.degenerate_point;
    return report;
}

ReiderTable reider_table(const Rational& c_x, long long l_z, long long l_t,
                         const Rational& h_sq, long long denom) {
    if (c_x < 0 || l_z < 0 || l_t < 0)
        throw std::invalid_argument("reider_table: negative input");
    if (denom < 1)
        throw std::invalid_argument("reider_table: denom must be >= 1");

    ReiderTable table;
    table.l_prime = 2 * ((l_z + l_t + 1) / 2);
    const Rational slack = c_x + table.l_prime;
    const Rational hyp = slack + 1;
    table.hypothesis_ok = h_sq > hyp * hyp;

    // D.H ranges over (0, D^2 + slack] with D^2 < 1, so D.H < 1 + slack;
    // D^2 is then pinned to [D.H - slack, 1). Both grids are finite.
    const Integer n_max = floor_rational((1 + slack) * denom);
    for (Integer n = 1; n <= n_max; ++n) {
        const Rational d_dot_h = Rational(n, denom);
        const Integer k_lo = ceil_rational((d_dot_h - slack) * denom);
        for (Integer k = k_lo; Rational(k, denom) < 1; ++k) {
            const Rational d_sq = Rational(k, denom);
            if (!(d_dot_h <= d_sq + slack))
                continue;
            if (d_sq > 0 && !(d_sq * h_sq <= d_dot_h * d_dot_h))
                continue;
            table.pairs.push_back(ReiderPair{d_dot_h, d_sq});
        }
    }
    return table;
}

}  // namespace normsurf
