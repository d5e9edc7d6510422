#pragma once

#include "normsurf/lattice.hpp"
#include "normsurf/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace normsurf {

// Finite search box for candidate destabilizing invariants. Intervals are
// inclusive and given per basis coordinate; bounds on exceptional indices are
// ignored (candidate classes live on the base surface, so their exceptional
// coordinates are pinned to zero and the correction is recomputed).
struct SearchWindow {
    long long r_max = 1;
    std::vector<std::pair<long long, long long>> coord_bounds;

    static SearchWindow symmetric_box(long long r_max, std::size_t rank, long long half_width);
};

struct Candidate {
    long long r = 0;
    DivisorClass a;
    Rational a_dot_h;
    Rational a_sq;
};

// All (r, A) in the window satisfying the rank inequality
//   (r-1) s H^2 < A.H <= r s H^2
// and the ch2-eliminated degree inequality
//   A.H <= A^2/r + r(c_x + 2l).
// Output is deterministic: r ascending, then coordinates in lexicographic
// order. The sweep over the leading coordinate is chunked across threads
// (capped by REIDER_THREADS) and merged in chunk order.
std::vector<Candidate> enumerate_candidates(const SurfaceLattice& lattice, const Rational& c_x,
                                            long long l, const SearchWindow& window,
                                            const Rational& s = Rational(1, 2));

struct LemmaHodgeReport {
    bool hypothesis_met = false;
    std::string refusal;  // set when the report refuses to certify anything
    Rational h_sq;
    Rational threshold;  // (c_x + 2l + 1)^2
    std::vector<std::string> modeling_errors;  // non-integer pairings under the Cartier assertion
    std::vector<Candidate> candidates;
    std::vector<Candidate> violations;
    bool pass() const {
        return hypothesis_met && modeling_errors.empty() && violations.empty();
    }
};

// Executable form of the trichotomy: under H^2 > (c_x + 2l + 1)^2 and Cartier
// H, every candidate must land in
//   { r = 1 and 0 < A.H < c_x + 2l + 1 }  union  { r >= 3 and H^2 < 3(c_x + 2l + 1) }.
// Candidates outside that set are returned as violations (data, not an
// error); an unmet hypothesis refuses the run. Because the r = 2 exclusion
// relies on integrality of H^2 and A.H, the basis pairings with H are checked
// to be integers and any failure is flagged as a modeling error.
LemmaHodgeReport verify_lemma_hodge(const SurfaceLattice& lattice, const Rational& c_x,
                                    long long l, const SearchWindow& window);

// Thread cap for the enumeration sweeps: REIDER_THREADS when set and
// positive, otherwise the hardware concurrency.
unsigned enumeration_threads();

}  // namespace normsurf
