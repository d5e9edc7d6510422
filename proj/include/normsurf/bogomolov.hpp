#pragma once

#include "normsurf/lattice.hpp"
#include "normsurf/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace normsurf {

// Exceptional data of one singular point: the intersection matrix of its
// exceptional curves, their Euler characteristics, and (optionally) their
// pairings with the canonical class. When omitted, the pairing is derived
// by adjunction k_j = -E_j^2 - 2 chi_j; a supplied vector must agree.
struct SingularPointData {
    std::vector<std::vector<long long>> gram;
    std::vector<long long> chi;
    std::optional<std::vector<Rational>> canonical;

    std::size_t size() const { return gram.size(); }
    std::vector<Rational> derived_canonical() const;
};

struct ResolutionProfile {
    std::vector<SingularPointData> points;
    long long h0_r1 = 0;       // h^0 of R^1 f_* O on the base
    Rational base_constant{0}; // Bogomolov constant of the resolution
};

ValidationReport validate_profile(const ResolutionProfile& profile);
void require_valid(const ResolutionProfile& profile);

enum class CxMethod { continuous, integer_certified, integer_heuristic };
std::string method_name(CxMethod method);

struct CxWitness {
    long long r = 0;
    // Per singular point, the intersection vector v_j = c1(f,F).E_j of the
    // correction divisor attaining the maximum.
    std::vector<std::vector<long long>> v;
};

struct CxEstimate {
    Rational value;
    CxMethod method = CxMethod::continuous;
    std::optional<CxWitness> witness;
    std::optional<long long> r_cap;
};

enum class KosekiKind { minimal_general_type, quasi_elliptic_kappa1, other };

// Positive-characteristic base constants by birational type, floored at 0.
Rational koseki_base_constant(KosekiKind kind, long long k_squared, long long chi_O);

// Envelope of the continuous relaxation at fixed rank r:
//   e(r) = base + 4 h0 / r + (1/4) sum_p k_p^T (-M_p)^{-1} k_p.
// Strictly decreasing in r, which is what makes certification possible.
Rational continuous_envelope(const ResolutionProfile& profile, long long r);

// Smallest constant obtained by relaxing the correction divisor to a real
// variable and dropping the box constraints: max(0, e(1)). Any such value is
// a valid choice of the Bogomolov constant for the profile.
CxEstimate cx_continuous(const ResolutionProfile& profile);

// Exhaustive search over integer intersection vectors inside the box
//   0 <= v_j <= (r+2) h0 - r chi_j - r E_j^2
// for 1 <= r <= r_cap. Certified when the maximum dominates the continuous
// envelope e(r_cap + 1), since no larger rank can then exceed it. The box
// volume per point grows like ((r+2) h0)^m, so keep r_cap modest on profiles
// with large h0.
CxEstimate cx_integer(const ResolutionProfile& profile, long long r_cap);

}  // namespace normsurf
