#include "normsurf/bogomolov.hpp"

#include "normsurf/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace normsurf {

std::vector<Rational> SingularPointData::derived_canonical() const {
    std::vector<Rational> k(size());
    for (std::size_t j = 0; j < size(); ++j)
        k[j] = Rational(-gram[j][j] - 2 * chi[j]);
    return k;
}

namespace {

linalg::Mat to_rational(const std::vector<std::vector<long long>>& m) {
    linalg::Mat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i] = linalg::Vec(m[i].begin(), m[i].end());
    return out;
}

// k^T (-M)^{-1} k, the per-point quadratic term of the envelope.
Rational envelope_quadratic(const SingularPointData& point) {
    const auto k = point.derived_canonical();
    linalg::Mat neg = to_rational(point.gram);
    for (auto& row : neg)
        for (auto& entry : row)
            entry = -entry;
    const auto x = linalg::solve(std::move(neg), k);
    Rational acc = 0;
    for (std::size_t j = 0; j < k.size(); ++j)
        acc += k[j] * x[j];
    return acc;
}

}  // namespace

ValidationReport validate_profile(const ResolutionProfile& profile) {
    ValidationReport report;
    auto flag = [&](const std::string& msg) { report.violations.push_back(msg); };
    if (profile.h0_r1 < 0)
        flag("h0_r1 must be nonnegative");
    if (profile.base_constant < 0)
        flag("base_constant must be nonnegative");
    for (std::size_t p = 0; p < profile.points.size(); ++p) {
        const auto& pt = profile.points[p];
        const std::string tag = "point " + std::to_string(p) + ": ";
        const auto m = pt.size();
        if (m == 0) {
            flag(tag + "empty exceptional configuration");
            continue;
        }
        bool shape_ok = true;
        for (const auto& row : pt.gram)
            if (row.size() != m)
                shape_ok = false;
        if (!shape_ok) {
            flag(tag + "gram matrix is not square");
            continue;
        }
        const auto gram = to_rational(pt.gram);
        if (!linalg::is_symmetric(gram))
            flag(tag + "gram matrix is not symmetric");
        else if (!linalg::is_negative_definite(gram))
            flag(tag + "gram matrix is not negative definite");
        if (pt.chi.size() != m)
            flag(tag + "chi vector has wrong length");
        if (pt.canonical) {
            if (pt.canonical->size() != m)
                flag(tag + "canonical vector has wrong length");
            else if (pt.chi.size() == m && *pt.canonical != pt.derived_canonical())
                flag(tag + "supplied canonical pairing disagrees with adjunction");
        }
    }
    return report;
}

void require_valid(const ResolutionProfile& profile) {
    const auto report = validate_profile(profile);
    if (!report.ok())
        throw std::invalid_argument("invalid resolution profile: " + report.joined());
}

std::string method_name(CxMethod method) {
    switch (method) {
        case CxMethod::continuous: return "continuous";
        case CxMethod::integer_certified: return "integer_certified";
        case CxMethod::integer_heuristic: return "integer_heuristic";
    }
    throw std::logic_error("unreachable");
}

Rational koseki_base_constant(KosekiKind kind, long long k_squared, long long chi_O) {
    Rational value = 0;
    switch (kind) {
        case KosekiKind::minimal_general_type:
            value = Rational(2 + 5 * k_squared - chi_O);
            break;
        case KosekiKind::quasi_elliptic_kappa1:
            value = Rational(2 - chi_O);
            break;
        case KosekiKind::other:
            value = 0;
            break;
    }
    return value < 0 ? Rational(0) : value;
}

Rational continuous_envelope(const ResolutionProfile& profile, long long r) {
    if (r < 1)
        throw std::invalid_argument("continuous_envelope: r must be >= 1");
    Rational acc = profile.base_constant + Rational(4 * profile.h0_r1, r);
    for (const auto& point : profile.points)
        acc += envelope_quadratic(point) / 4;
    return acc;
}

CxEstimate cx_continuous(const ResolutionProfile& profile) {
    Rational value = continuous_envelope(profile, 1);
    if (value < 0)
        value = 0;
    return CxEstimate{std::move(value), CxMethod::continuous, std::nullopt, std::nullopt};
}

namespace {

struct PointSearch {
    linalg::Mat inverse;       // M^{-1}
    std::vector<Rational> k;   // canonical pairings
    std::vector<long long> ub; // box upper bounds for this r
};

// Maximizes v^T M^{-1} v - r k^T M^{-1} v over the integer box [0, ub].
// Ties keep the lexicographically smallest v (odometer order visits them
// in exactly that order).
std::pair<Rational, std::vector<long long>> maximize_point(const PointSearch& ps, long long r) {
    const std::size_t m = ps.k.size();
    std::vector<long long> v(m, 0);
    std::vector<long long> best_v;
    Rational best;
    bool first = true;
    for (;;) {
        linalg::Vec x(m, Rational(0));  // M^{-1} v
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (v[j] != 0)
                    x[i] += ps.inverse[i][j] * v[j];
        Rational val = 0;
        for (std::size_t i = 0; i < m; ++i) {
            val += Rational(v[i]) * x[i];
            val -= Rational(r) * ps.k[i] * x[i];
        }
        if (first || val > best) {
            best = std::move(val);
            best_v = v;
            first = false;
        }
        std::size_t pos = m;
        while (pos > 0) {
            --pos;
            if (v[pos] < ps.ub[pos]) {
                ++v[pos];
                for (std::size_t j = pos + 1; j < m; ++j)
                    v[j] = 0;
                break;
            }
            if (pos == 0)
                return {best, best_v};
        }
        if (m == 0)
            return {best, best_v};
    }
}

}  // namespace

CxEstimate cx_integer(const ResolutionProfile& profile, long long r_cap) {
    if (r_cap < 1)
        throw std::invalid_argument("cx_integer: r_cap must be >= 1");

    std::vector<PointSearch> searches;
    for (const auto& point : profile.points) {
        PointSearch ps;
        ps.k = point.derived_canonical();
        const std::size_t m = point.size();
        const auto gram = to_rational(point.gram);
        ps.inverse.assign(m, linalg::Vec(m));
        for (std::size_t col = 0; col < m; ++col) {
            linalg::Vec e(m, Rational(0));
            e[col] = 1;
            const auto x = linalg::solve(gram, std::move(e));
            for (std::size_t rrow = 0; rrow < m; ++rrow)
                ps.inverse[rrow][col] = x[rrow];
        }
        searches.push_back(std::move(ps));
    }

    std::optional<CxWitness> witness;
    Rational best;
    bool found = false;
    for (long long r = 1; r <= r_cap; ++r) {
        bool admissible = true;
        for (std::size_t p = 0; p < searches.size(); ++p) {
            auto& ps = searches[p];
            const auto& point = profile.points[p];
            ps.ub.resize(point.size());
            for (std::size_t j = 0; j < point.size(); ++j) {
                ps.ub[j] = (r + 2) * profile.h0_r1 - r * point.chi[j] - r * point.gram[j][j];
                if (ps.ub[j] < 0)
                    admissible = false;  // empty box: this r contributes nothing
            }
        }
        if (!admissible)
            continue;

        // The objective separates over singular points, so each point's box
        // is maximized independently; the concatenated per-point lex-minima
        // form the lex-smallest global witness.
        Rational total = Rational(4 * r * profile.h0_r1);
        CxWitness wit;
        wit.r = r;
        for (const auto& ps : searches) {
            auto [val, argmax] = maximize_point(ps, r);
            total += val;
            wit.v.push_back(std::move(argmax));
        }
        Rational value = total / Rational(r * r) + profile.base_constant;
        if (!found || value > best) {
            best = std::move(value);
            witness = std::move(wit);
            found = true;
        }
    }

    CxEstimate out;
    out.r_cap = r_cap;
    out.witness = std::move(witness);
    out.value = (found && best > 0) ? best : Rational(0);
    const Rational threshold = continuous_envelope(profile, r_cap + 1);
    out.method = out.value >= threshold ? CxMethod::integer_certified
                                        : CxMethod::integer_heuristic;
    return out;
}

}  // namespace normsurf
