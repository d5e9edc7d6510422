#pragma once

#include "normsurf/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace normsurf {

struct BoundQuery {
    Rational c_x;     // >= 0
    long long l = 0;  // l_Z + l_T
};

// min over partitions l1 + l2 = l of max(2(2 l1 + c_x), c_x + 2 l2 + 1),
// by exhaustive scan of the l + 1 partitions. This is the authoritative
// definition; the closed form below is audited against it.
Rational m_bound(const BoundQuery& q);

// m with the one adjusted value: 3 at (c_x, l) = (1, 0).
Rational m_prime_bound(const BoundQuery& q);

// min( max(2 c_x, c_x + 2l + 1),
//      c_x + 2 ceil((4l + c_x + 1)/6) + 1,
//      2 c_x + 4 ceil((2l - c_x + 1)/6) ).
// Known to exceed m_bound at some points ((0, 9): 15 vs 13), which is why
// compare_m_forms exists.
Rational m_closed_form(const BoundQuery& q);

struct MDisagreement {
    Rational c_x;
    long long l = 0;
    Rational brute;   // m_bound, authoritative
    Rational closed;  // m_closed_form
};

std::vector<MDisagreement> compare_m_forms(const std::vector<Rational>& c_x_grid,
                                           long long l_max);

struct FailedCondition {
    std::string name;
    Rational lhs;
    Rational rhs;
};

struct VanishingReport {
    bool satisfied = false;
    long long l1 = 0;
    long long l2 = 0;
    std::vector<FailedCondition> failed;
};

// The hypotheses of the vanishing theorem at one partition, or scanning all
// partitions of l = l_z + l_t when none is given (first satisfying partition
// wins; on failure the partition with the fewest failed conditions is
// reported). hc_min is the caller's asserted minimum of H.C over nonzero
// effective divisors. Conditions, with the epsilon term read as strict:
//   H^2 >= (c_x + 2 l2 + 1)^2        H^2 > 4(l1 + l2 + c_x)
//   H.C >= 2(2 l1 + c_x)             H.C >= c_x + 2 l2 + 1
VanishingReport check_general_vanishing(const Rational& h_sq, const Rational& hc_min,
                                        const Rational& c_x, long long l_z, long long l_t,
                                        std::optional<std::pair<long long, long long>>
                                            partition = std::nullopt);

struct FujitaResult {
    long long a = 0;
    VanishingReport verification;
};

// a = ceil(m'(c_x, l_z)), re-verified through check_general_vanishing with
// H^2 = a^2 and H.C = a. A failed re-verification is an internal error.
FujitaResult fujita_power(const Rational& c_x, long long l_z);

enum class StabilityProp { prop_O, prop_Ork1, prop_rk1, prop_liz };
StabilityProp stability_prop_from_name(const std::string& name);
std::string stability_prop_name(StabilityProp prop);

struct StabilityHypothesisReport {
    bool satisfied = false;
    // t = 0 exclusion (only reachable for prop_Ork1: l = 0, c_x = 1, H^2 = 4),
    // reported separately from the inequality list.
    bool degenerate_point = false;
    std::vector<FailedCondition> failed;
};

// Numerical hypotheses of the four stability statements. aux is the
// divisibility bound M for prop_O / prop_liz and the minimum of H.C over
// nonzero effective divisors for prop_Ork1 / prop_rk1. prop_Ork1 uses the
// non-strict H^2 bound, prop_O the strict one, copied verbatim from each
// statement.
StabilityHypothesisReport check_stability_hypothesis(StabilityProp prop, const Rational& h_sq,
                                                     const Rational& aux, const Rational& c_x,
                                                     long long l);

struct ReiderPair {
    Rational d_dot_h;
    Rational d_sq;
};

struct ReiderTable {
    long long l_prime = 0;
    std::vector<ReiderPair> pairs;
    bool hypothesis_ok = false;  // h_sq > (c_x + l' + 1)^2
};

// All (D.H, D^2) in the (1/denom)Z grid with D^2 < 1,
// 0 < D.H <= D^2 + c_x + l', and D^2 H^2 <= (D.H)^2 when D^2 > 0, where
// l' = 2 floor((l_z + l_t + 1)/2). denom is the lattice denominator bound
// (1 for a smooth surface). Sorted by (D.H, D^2).
ReiderTable reider_table(const Rational& c_x, long long l_z, long long l_t,
                         const Rational& h_sq, long long denom);

}  // namespace normsurf
