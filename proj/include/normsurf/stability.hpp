#pragma once

#include "normsurf/lattice.hpp"
#include "normsurf/rational.hpp"

#include <optional>

namespace normsurf {

// (ch0, ch1, ch2) in the convention ch2(O_X) = 0, ch2(O_point) = 1. ch1 is a
// proper-transform class on the base surface. Arbitrary K-theory classes are
// allowed; nothing here validates semistability.
struct ChernCharacter {
    long long ch0 = 0;
    DivisorClass ch1;
    Rational ch2;
};

// One point (s, t) of the half-plane of stability conditions with polarization
// H = lattice ample and Bogomolov constant c_x. t is stored squared: every
// formula depends only on t^2 except an overall positive factor of t in the
// Bridgeland rank, which cancels in all comparisons, so arithmetic stays in Q.
struct StabilityPoint {
    Rational s;
    Rational t_sq;  // > 0
    const SurfaceLattice& lattice;
    Rational c_x;
};

// Chern character of L tensor I_Z for the polarizing line bundle L:
// (1, H, H^2/2 - l_z). Requires a valid lattice.
ChernCharacter ch_of_twist(const SurfaceLattice& lattice, long long l_z);

// Chern character of a type-O object: (-1, 0, l_t), i.e. Ch(O_T) - Ch(O_X).
ChernCharacter ch_of_type_O(long long l_t, std::size_t rank);

// r_{s,t} / t = H . (ch1 - s ch0 H). Same sign as the Bridgeland rank.
Rational scaled_rank(const ChernCharacter& ch, const StabilityPoint& pt);

// d_{s,t} = ch2 - s (ch1 . H) + ch0 ((s^2 - t^2) H^2 - c_x) / 2.
Rational bridgeland_degree(const ChernCharacter& ch, const StabilityPoint& pt);

enum class SlopeOrder { less, equal, greater };

// Compares Bridgeland slopes d/r of two heart classes by exact
// cross-multiplication; scaled rank 0 means slope +infinity. Throws when an
// argument is not a heart class (negative rank, or rank 0 with degree <= 0).
SlopeOrder slope_compare(const ChernCharacter& a, const ChernCharacter& b,
                         const StabilityPoint& pt);

// ch1^2 - 2 ch0 ch2 + c_x ch0^2. Nonnegative for semistable classes when c_x
// is a valid Bogomolov constant, but not enforced here.
Rational discriminant(const ChernCharacter& ch, const Rational& c_x,
                      const SurfaceLattice& lattice);

// s = 1/2, t^2 = 1/4 - (2l + c_x)/H^2 — the wall where the twist and type-O
// degrees both vanish. Throws "degenerate stability point" when t^2 <= 0.
StabilityPoint standard_point(const SurfaceLattice& lattice, long long l,
                              const Rational& c_x);

enum class HeartKind { rank1_twist, type_O };

// Heart membership for the two class shapes the estimates use:
// rank-1 torsion-free twists need s < 1, type-O objects need s >= 0.
bool heart_membership(HeartKind kind, const Rational& s);

// Slope ch1.H / ch0, or nullopt (= +infinity) when ch0 = 0.
std::optional<Rational> mu_slope(const ChernCharacter& ch, const SurfaceLattice& lattice);

}  // namespace normsurf
