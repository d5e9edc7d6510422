#pragma once

#include "normsurf/linalg.hpp"
#include "normsurf/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace normsurf {

// A Q-divisor class written in the fixed basis of the minimal resolution.
// Classes coming from the base surface are stored by their proper-transform
// coordinates only: zero on every exceptional index. The correction Delta is
// recomputed on demand (mumford_pullback) and never stored with user input,
// so the defining orthogonality holds by construction.
struct DivisorClass {
    std::vector<Rational> coords;
    std::optional<bool> is_cartier;  // user assertion; no geometric check is possible here
};

// Numerical lattice of a minimal resolution: Gram matrix of a chosen basis,
// the exceptional curves grouped into one block per singular point, and the
// pullback H of an ample class from the base (orthogonal to every
// exceptional curve, positive square).
struct SurfaceLattice {
    std::size_t rank = 0;
    linalg::Mat gram;
    std::vector<std::vector<std::size_t>> exceptional_blocks;
    std::optional<std::vector<Rational>> ample;
    // K_resolution paired with basis elements, where known. Entries for
    // exceptional indices are the ones the estimates care about.
    std::vector<std::optional<Rational>> canonical_pairing;

    bool is_exceptional(std::size_t i) const;
    std::vector<std::size_t> free_indices() const;  // non-exceptional basis indices

    // Plain bilinear form on resolution coordinates.
    Rational pair(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

    // H is orthogonal to the exceptional locus, so pairing any
    // proper-transform class with H needs no Delta correction.
    Rational pair_with_ample(const std::vector<Rational>& x) const;
    Rational ample_square() const;

    // The ample class with exceptional coordinates zeroed; pulling this back
    // reproduces the stored ample exactly (uniqueness of Delta).
    DivisorClass ample_transform() const;
};

struct MumfordClass {
    DivisorClass tilde_part;   // zero on exceptional indices
    DivisorClass delta_part;   // supported on exceptional indices
    std::vector<Rational> total() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string joined() const;
};

// Confirms every lattice invariant: symmetric Gram, negative definite
// exceptional blocks (Sylvester minors, exact), ample present with positive
// square and orthogonal to each exceptional basis class, and full Gram
// signature (1, rank-1) so the Hodge index statements are meaningful.
// Violations are reported, not thrown.
ValidationReport validate_lattice(const SurfaceLattice& lattice);

// Throws std::invalid_argument with the violation list when invalid.
void require_valid(const SurfaceLattice& lattice);

// c plus the unique exceptional correction Delta solving, blockwise,
// M_p delta_p = -(c . E_pj)_j. The result pairs to zero with every
// exceptional class.
MumfordClass mumford_pullback(const DivisorClass& c, const SurfaceLattice& lattice);

// Mumford intersection product of classes on the base surface:
// pullback(a) . b evaluated with the Gram matrix. Symmetric and bilinear.
Rational mumford_product(const DivisorClass& a, const DivisorClass& b,
                         const SurfaceLattice& lattice);

// N = lcm over blocks of |det(block Gram)|; every product of integer
// classes lands in (1/N) Z. Requires integer block entries.
Integer denominator_bound(const SurfaceLattice& lattice);

struct HodgeIndexCheck {
    bool holds = false;
    Rational lhs;  // (d.d)(h.h)
    Rational rhs;  // (d.h)^2
};

// (d.d)(h.h) <= (d.h)^2 with both sides exact. Requires h.h > 0.
HodgeIndexCheck hodge_index_check(const DivisorClass& h, const DivisorClass& d,
                                  const SurfaceLattice& lattice);

}  // namespace normsurf
