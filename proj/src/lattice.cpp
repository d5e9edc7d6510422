#include "normsurf/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace normsurf {

bool SurfaceLattice::is_exceptional(std::size_t i) const {
    for (const auto& block : exceptional_blocks)
        if (std::find(block.begin(), block.end(), i) != block.end())
            return true;
    return false;
}

std::vector<std::size_t> SurfaceLattice::free_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rank; ++i)
        if (!is_exceptional(i))
            out.push_back(i);
    return out;
}

Rational SurfaceLattice::pair(const std::vector<Rational>& x,
                              const std::vector<Rational>& y) const {
    return linalg::bilinear(gram, x, y);
}

Rational SurfaceLattice::pair_with_ample(const std::vector<Rational>& x) const {
    if (!ample)
        throw std::invalid_argument("lattice has no ample class");
    return pair(x, *ample);
}

Rational SurfaceLattice::ample_square() const {
    if (!ample)
        throw std::invalid_argument("lattice has no ample class");
    return pair(*ample, *ample);
}

DivisorClass SurfaceLattice::ample_transform() const {
    if (!ample)
        throw std::invalid_argument("lattice has no ample class");
    DivisorClass c{*ample, std::nullopt};
    for (std::size_t i = 0; i < rank; ++i)
        if (is_exceptional(i))
            c.coords[i] = 0;
    return c;
}

std::vector<Rational> MumfordClass::total() const {
    std::vector<Rational> out(tilde_part.coords);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += delta_part.coords[i];
    return out;
}

std::string ValidationReport::joined() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i)
        os << (i ? "; " : "") << violations[i];
    return os.str();
}

ValidationReport validate_lattice(const SurfaceLattice& lattice) {
    ValidationReport report;
    auto flag = [&](const std::string& msg) { report.violations.push_back(msg); };

    if (lattice.rank == 0)
        flag("rank must be positive");
    if (lattice.gram.size() != lattice.rank || !linalg::is_square(lattice.gram)) {
        flag("gram matrix is not rank x rank");
        return report;  // nothing below is well posed
    }
    if (!linalg::is_symmetric(lattice.gram))
        flag("gram matrix is not symmetric");

    std::set<std::size_t> seen;
    bool blocks_ok = true;
    for (const auto& block : lattice.exceptional_blocks) {
        if (block.empty()) {
            flag("empty exceptional block");
            blocks_ok = false;
        }
        for (std::size_t i : block) {
            if (i >= lattice.rank) {
                flag("exceptional index out of range");
                blocks_ok = false;
            } else if (!seen.insert(i).second) {
                flag("exceptional blocks are not disjoint");
                blocks_ok = false;
            }
        }
    }

    if (blocks_ok) {
        for (std::size_t b = 0; b < lattice.exceptional_blocks.size(); ++b) {
            const auto& block = lattice.exceptional_blocks[b];
            linalg::Mat sub(block.size(), linalg::Vec(block.size()));
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t j = 0; j < block.size(); ++j)
                    sub[i][j] = lattice.gram[block[i]][block[j]];
            if (!linalg::is_negative_definite(sub))
                flag("exceptional block " + std::to_string(b) + " is not negative definite");
        }
    }

    if (!lattice.ample) {
        flag("ample class missing");
    } else if (lattice.ample->size() != lattice.rank) {
        flag("ample class has wrong length");
    } else {
        if (lattice.ample_square() <= 0)
            flag("ample square is not positive");
        for (std::size_t i = 0; i < lattice.rank; ++i) {
            if (!lattice.is_exceptional(i))
                continue;
            std::vector<Rational> e(lattice.rank, Rational(0));
            e[i] = 1;
            if (lattice.pair(*lattice.ample, e) != 0) {
                flag("ample class meets an exceptional curve");
                break;
            }
        }
    }

    if (!lattice.canonical_pairing.empty() &&
        lattice.canonical_pairing.size() != lattice.rank)
        flag("canonical pairing vector has wrong length");

    if (linalg::is_symmetric(lattice.gram)) {
        const auto sig = linalg::signature(lattice.gram);
        if (sig.positive != 1 || sig.zero != 0)
            flag("gram signature is not (1, rank-1)");
    }
    return report;
}

void require_valid(const SurfaceLattice& lattice) {
    const auto report = validate_lattice(lattice);
    if (!report.ok())
        throw std::invalid_argument("invalid lattice: " + report.joined());
}

namespace {

void require_proper_transform(const DivisorClass& c, const SurfaceLattice& lattice,
                              const char* who) {
    if (c.coords.size() != lattice.rank)
        throw std::invalid_argument(std::string(who) + ": class has wrong length");
    for (std::size_t i = 0; i < lattice.rank; ++i)
        if (c.coords[i] != 0 && lattice.is_exceptional(i))
            throw std::invalid_argument(std::string(who) +
                                        ": class has a nonzero exceptional coordinate");
}

}  // namespace

MumfordClass mumford_pullback(const DivisorClass& c, const SurfaceLattice& lattice) {
    require_proper_transform(c, lattice, "mumford_pullback");
    std::vector<Rational> delta(lattice.rank, Rational(0));
    for (const auto& block : lattice.exceptional_blocks) {
        const std::size_t m = block.size();
        linalg::Mat sub(m, linalg::Vec(m));
        linalg::Vec rhs(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                sub[i][j] = lattice.gram[block[i]][block[j]];
            std::vector<Rational> e(lattice.rank, Rational(0));
            e[block[i]] = 1;
            rhs[i] = -lattice.pair(c.coords, e);
        }
        linalg::Vec sol;
        try {
            sol = linalg::solve(std::move(sub), std::move(rhs));
        } catch (const std::runtime_error&) {
            throw std::runtime_error("mumford_pullback: singular exceptional block");
        }
        for (std::size_t i = 0; i < m; ++i)
            delta[block[i]] = sol[i];
    }
    MumfordClass out;
    out.tilde_part = c;
    out.delta_part = DivisorClass{std::move(delta), std::nullopt};
    return out;
}

Rational mumford_product(const DivisorClass& a, const DivisorClass& b,
                         const SurfaceLattice& lattice) {
    require_proper_transform(b, lattice, "mumford_product");
    const MumfordClass pa = mumford_pullback(a, lattice);
    return lattice.pair(pa.total(), b.coords);
}

Integer denominator_bound(const SurfaceLattice& lattice) {
    Integer n = 1;
    for (const auto& block : lattice.exceptional_blocks) {
        const std::size_t m = block.size();
        linalg::Mat sub(m, linalg::Vec(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const Rational& entry = lattice.gram[block[i]][block[j]];
                if (!is_integer(entry))
                    throw std::invalid_argument(
                        "denominator_bound: non-integer entry in exceptional block");
                sub[i][j] = entry;
            }
        const Rational d = linalg::det(std::move(sub));
        if (d == 0)
            throw std::invalid_argument("denominator_bound: singular exceptional block");
        Integer di = numerator(d);
        if (di < 0)
            di = -di;
        n = boost::multiprecision::lcm(n, di);
    }
    return n;
}

HodgeIndexCheck hodge_index_check(const DivisorClass& h, const DivisorClass& d,
                                  const SurfaceLattice& lattice) {
    const Rational h_sq = mumford_product(h, h, lattice);
    if (h_sq <= 0)
        throw std::invalid_argument("hodge_index_check: h.h must be positive");
    const Rational d_sq = mumford_product(d, d, lattice);
    const Rational dh = mumford_product(d, h, lattice);
    HodgeIndexCheck out;
    out.lhs = d_sq * h_sq;
    out.rhs = dh * dh;
    out.holds = out.lhs <= out.rhs;
    return out;
}

}  // namespace normsurf
