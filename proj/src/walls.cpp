#include "normsurf/walls.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace normsurf {

SearchWindow SearchWindow::symmetric_box(long long r_max, std::size_t rank,
                                         long long half_width) {
    SearchWindow w;
    w.r_max = r_max;
    w.coord_bounds.assign(rank, {-half_width, half_width});
    return w;
}

unsigned enumeration_threads() {
    if (const char* env = std::getenv("REIDER_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

void check_window(const SearchWindow& window, std::size_t rank) {
    if (window.r_max < 1)
        throw std::invalid_argument("search window: r_max must be >= 1");
    if (window.coord_bounds.size() != rank)
        throw std::invalid_argument("search window: one coordinate interval per basis class");
    for (const auto& [lo, hi] : window.coord_bounds)
        if (lo > hi)
            throw std::invalid_argument("search window: empty coordinate interval");
}

// Lexicographic sweep of the integer box over the free coordinates with the
// leading free coordinate restricted to [lead_lo, lead_hi].
void sweep_chunk(const SurfaceLattice& lattice, const SearchWindow& window,
                 const std::vector<std::size_t>& free, long long lead_lo, long long lead_hi,
                 const Rational& c_x, long long l, const Rational& s, long long r_max,
                 std::vector<Candidate>& out) {
    const Rational h_sq = lattice.ample_square();
    const Rational cl = c_x + Rational(2 * l);
    std::vector<long long> v(free.size());
    v[0] = lead_lo;
    for (std::size_t i = 1; i < free.size(); ++i)
        v[i] = window.coord_bounds[free[i]].first;
    if (lead_lo > lead_hi)
        return;
    for (;;) {
        DivisorClass a{std::vector<Rational>(lattice.rank, Rational(0)), std::nullopt};
        for (std::size_t i = 0; i < free.size(); ++i)
            a.coords[free[i]] = v[i];
        const Rational a_dot_h = lattice.pair_with_ample(a.coords);
        // Rank window first: it prunes most classes and fixes r uniquely per
        // A unless A.H sits on a boundary multiple of s H^2.
        for (long long r = 1; r <= r_max; ++r) {
            if (!(Rational(r - 1) * s * h_sq < a_dot_h && a_dot_h <= Rational(r) * s * h_sq))
                continue;
            const Rational a_sq = mumford_product(a, a, lattice);
            if (a_dot_h <= a_sq / r + Rational(r) * cl)
                out.push_back(Candidate{r, a, a_dot_h, a_sq});
        }
        // odometer
        std::size_t pos = free.size();
        bool done = false;
        while (pos > 0) {
            --pos;
            const long long hi = pos == 0 ? lead_hi : window.coord_bounds[free[pos]].second;
            if (v[pos] < hi) {
                ++v[pos];
                for (std::size_t j = pos + 1; j < free.size(); ++j)
                    v[j] = window.coord_bounds[free[j]].first;
                break;
            }
            if (pos == 0)
                done = true;
        }
        if (done)
            break;
    }
}

}  // namespace

std::vector<Candidate> enumerate_candidates(const SurfaceLattice& lattice, const Rational& c_x,
                                            long long l, const SearchWindow& window,
                                            const Rational& s) {
    require_valid(lattice);
    check_window(window, lattice.rank);
    if (l < 0)
        throw std::invalid_argument("enumerate_candidates: l must be nonnegative");

    const auto free = lattice.free_indices();
    std::vector<Candidate> flat;
    if (free.empty())
        return flat;

    const auto [lead_lo, lead_hi] = window.coord_bounds[free[0]];
    const long long span = lead_hi - lead_lo + 1;
    const unsigned want = enumeration_threads();
    const unsigned chunks = static_cast<unsigned>(
        std::min<long long>(span, static_cast<long long>(want)));

    if (chunks <= 1) {
        sweep_chunk(lattice, window, free, lead_lo, lead_hi, c_x, l, s, window.r_max, flat);
    } else {
        std::vector<std::vector<Candidate>> parts(chunks);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < chunks; ++t) {
            const long long lo = lead_lo + span * t / chunks;
            const long long hi = lead_lo + span * (t + 1) / chunks - 1;
            pool.emplace_back([&, lo, hi, t] {
                sweep_chunk(lattice, window, free, lo, hi, c_x, l, s, window.r_max,
                            parts[t]);
            });
        }
        for (auto& th : pool)
            th.join();
        for (auto& part : parts)
            flat.insert(flat.end(), std::make_move_iterator(part.begin()),
                        std::make_move_iterator(part.end()));
    }

    // Chunks emit coordinates in lexicographic order with r innermost;
    // reorder to the contract: r ascending, then coordinates.
    std::stable_sort(flat.begin(), flat.end(),
                     [](const Candidate& x, const Candidate& y) { return x.r < y.r; });
    return flat;
}

LemmaHodgeReport verify_lemma_hodge(const SurfaceLattice& lattice, const Rational& c_x,
                                    long long l, const SearchWindow& window) {
    require_valid(lattice);
    check_window(window, lattice.rank);

    LemmaHodgeReport report;
    report.h_sq = lattice.ample_square();
    const Rational bound = c_x + Rational(2 * l) + 1;
    report.threshold = bound * bound;
    if (!(report.h_sq > report.threshold)) {
        report.hypothesis_met = false;
        report.refusal = "hypothesis not met: H^2 <= (c_x + 2l + 1)^2";
        return report;
    }
    report.hypothesis_met = true;

    // Cartier H pairs integrally with every integer class; checking H^2 and
    // the basis pairings covers every A.H the sweep can produce.
    if (!is_integer(report.h_sq))
        report.modeling_errors.push_back("H^2 is not an integer");
    for (std::size_t i : lattice.free_indices()) {
        std::vector<Rational> e(lattice.rank, Rational(0));
        e[i] = 1;
        if (!is_integer(lattice.pair_with_ample(e)))
            report.modeling_errors.push_back("basis class " + std::to_string(i) +
                                             " pairs non-integrally with H");
    }

    report.candidates = enumerate_candidates(lattice, c_x, l, window);
    const Rational r3_bound = 3 * bound;
    for (const auto& cand : report.candidates) {
        const bool rank1_ok = cand.r == 1 && cand.a_dot_h > 0 && cand.a_dot_h < bound;
        const bool rank3_ok = cand.r >= 3 && report.h_sq < r3_bound;
        if (!rank1_ok && !rank3_ok)
            report.violations.push_back(cand);
    }
    return report;
}

}  // namespace normsurf
