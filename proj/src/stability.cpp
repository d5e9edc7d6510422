#include "normsurf/stability.hpp"

#include <stdexcept>

namespace normsurf {

namespace {

// ch1 . H. H is orthogonal to the exceptional locus, so the plain pairing
// already equals the Mumford product.
Rational pair_ample(const ChernCharacter& ch, const SurfaceLattice& lattice) {
    return lattice.pair_with_ample(ch.ch1.coords);
}

}  // namespace

ChernCharacter ch_of_twist(const SurfaceLattice& lattice, long long l_z) {
    if (l_z < 0)
        throw std::invalid_argument("ch_of_twist: l_z must be nonnegative");
    require_valid(lattice);
    ChernCharacter ch;
    ch.ch0 = 1;
    ch.ch1 = lattice.ample_transform();
    ch.ch2 = lattice.ample_square() / 2 - l_z;
    return ch;
}

ChernCharacter ch_of_type_O(long long l_t, std::size_t rank) {
    if (l_t < 0)
        throw std::invalid_argument("ch_of_type_O: l_t must be nonnegative");
    ChernCharacter ch;
    ch.ch0 = -1;
    ch.ch1 = DivisorClass{std::vector<Rational>(rank, Rational(0)), std::nullopt};
    ch.ch2 = l_t;
    return ch;
}

Rational scaled_rank(const ChernCharacter& ch, const StabilityPoint& pt) {
    return pair_ample(ch, pt.lattice) - pt.s * ch.ch0 * pt.lattice.ample_square();
}

Rational bridgeland_degree(const ChernCharacter& ch, const StabilityPoint& pt) {
    const Rational h_sq = pt.lattice.ample_square();
    return ch.ch2 - pt.s * pair_ample(ch, pt.lattice) +
           Rational(ch.ch0) * ((pt.s * pt.s - pt.t_sq) * h_sq - pt.c_x) / 2;
}

namespace {

struct HeartClass {
    Rational rho;  // scaled rank, >= 0
    Rational deg;
};

HeartClass heart_class(const ChernCharacter& ch, const StabilityPoint& pt) {
    HeartClass hc{scaled_rank(ch, pt), bridgeland_degree(ch, pt)};
    if (hc.rho < 0 || (hc.rho == 0 && hc.deg <= 0))
        throw std::invalid_argument("slope_compare: not in heart");
    return hc;
}

}  // namespace

SlopeOrder slope_compare(const ChernCharacter& a, const ChernCharacter& b,
                         const StabilityPoint& pt) {
    const HeartClass ca = heart_class(a, pt);
    const HeartClass cb = heart_class(b, pt);
    if (ca.rho == 0 && cb.rho == 0)
        return SlopeOrder::equal;  // both +infinity
    if (ca.rho == 0)
        return SlopeOrder::greater;
    if (cb.rho == 0)
        return SlopeOrder::less;
    // d_a/rho_a vs d_b/rho_b with positive denominators; the overall factor
    // of t in the true ranks cancels.
    const Rational lhs = ca.deg * cb.rho;
    const Rational rhs = cb.deg * ca.rho;
    if (lhs < rhs)
        return SlopeOrder::less;
    if (lhs > rhs)
        return SlopeOrder::greater;
    return SlopeOrder::equal;
}

Rational discriminant(const ChernCharacter& ch, const Rational& c_x,
                      const SurfaceLattice& lattice) {
    const Rational ch1_sq = mumford_product(ch.ch1, ch.ch1, lattice);
    return ch1_sq - 2 * Rational(ch.ch0) * ch.ch2 + c_x * Rational(ch.ch0) * Rational(ch.ch0);
}

StabilityPoint standard_point(const SurfaceLattice& lattice, long long l,
                              const Rational& c_x) {
    if (l < 0 || c_x < 0)
        throw std::invalid_argument("standard_point: l and c_x must be nonnegative");
    const Rational h_sq = lattice.ample_square();
    const Rational t_sq = Rational(1, 4) - (Rational(2 * l) + c_x) / h_sq;
    if (t_sq <= 0)
        throw std::invalid_argument("degenerate stability point: t^2 <= 0");
    return StabilityPoint{Rational(1, 2), t_sq, lattice, c_x};
}

bool heart_membership(HeartKind kind, const Rational& s) {
    switch (kind) {
        case HeartKind::rank1_twist: return s < 1;
        case HeartKind::type_O: return s >= 0;
    }
    throw std::logic_error("unreachable");
}

std::optional<Rational> mu_slope(const ChernCharacter& ch, const SurfaceLattice& lattice) {
    if (ch.ch0 == 0)
        return std::nullopt;
    return lattice.pair_with_ample(ch.ch1.coords) / Rational(ch.ch0);
}

}  // namespace normsurf
