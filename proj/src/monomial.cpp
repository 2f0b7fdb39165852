#include "quotsing/monomial.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace quotsing {

bool support_less(Support a, Support b) {
    // First differing coordinate decides; a proper prefix sorts first.
    while (a != 0 || b != 0) {
        Support la = a & (~a + 1);
        Support lb = b & (~b + 1);
        if (la != lb) {
            if (la == 0) return true;
            if (lb == 0) return false;
            return la < lb;
        }
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

RadicalFamily RadicalFamily::from_supports(int dim, std::vector<Support> supports) {
    std::sort(supports.begin(), supports.end(),
              [](Support a, Support b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
    std::vector<Support> kept;
    for (Support s : supports) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](Support k) { return is_subset(k, s); });
        if (!redundant) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end(), support_less);
    return RadicalFamily{dim, std::move(kept)};
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> vs) {
    std::sort(vs.begin(), vs.end(), [](const ExponentVector& a, const ExponentVector& b) {
        auto da = a.degree(), db = b.degree();
        return da != db ? da < db : a < b;
    });
    std::vector<ExponentVector> kept;
    for (auto& v : vs) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) { return k.divides(v); });
        if (!redundant) kept.push_back(std::move(v));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

MonomialTable::MonomialTable(const AbelianGroup& group, std::uint64_t max_box_points) : group_(&group) {
    const int n = group.dim();
    radices_ = group.invariant_factors();
    for (int i = 0; i < n; ++i) coord_chars_.push_back(group.coords(group.coordinate_character(i)));

    std::vector<std::uint64_t> extent(static_cast<std::size_t>(n)), stride(static_cast<std::size_t>(n));
    std::uint64_t points = 1;
    for (int i = n - 1; i >= 0; --i) {
        auto e = static_cast<std::uint64_t>(group.coordinate_order(i)) + 1;
        extent[static_cast<std::size_t>(i)] = e;
        stride[static_cast<std::size_t>(i)] = points;
        if (points > max_box_points / e)
            throw Error(ErrorKind::BoxTooLarge, "exponent box exceeds " + std::to_string(max_box_points) + " points");
        points *= e;
    }

    standard_.assign(group.character_count(), {});
    // 1 = standard, 2 = visited and not standard, 0 = pruned (not standard).
    std::vector<std::uint8_t> state(points, 0);
    ExponentVector m(n);

    auto evaluate = [&](std::uint64_t at, std::uint32_t w) -> bool {
        if (state[at] != 0) return state[at] == 1;
        bool lower_standard = true;
        for (int j = 0; j < n && lower_standard; ++j)
            if (m[j] > 0 && state[at - stride[static_cast<std::size_t>(j)]] != 1) lower_standard = false;
        bool zero = m.is_zero();
        if (zero || (lower_standard && w != 0)) {
            state[at] = 1;
            standard_[w].push_back(m);
            ++standard_count_;
            return true;
        }
        if (lower_standard && w == 0) hilbert_basis_.push_back(m);
        state[at] = 2;
        return false;
    };

    // Lexicographic sweep; each coordinate loop stops at the first
    // non-standard prefix since the standard set is down-closed.
    std::function<void(int, std::uint64_t, std::uint32_t)> sweep = [&](int i, std::uint64_t at, std::uint32_t w) {
        const auto& step = group.coordinate_step(i);
        const auto ii = static_cast<std::size_t>(i);
        for (std::uint64_t t = 0; t < extent[ii]; ++t) {
            m[i] = static_cast<std::int32_t>(t);
            if (!evaluate(at, w)) break;
            if (i + 1 < n) sweep(i + 1, at, w);
            at += stride[ii];
            w = step[w];
        }
        m[i] = 0;
    };
    sweep(0, 0, 0);
    std::sort(hilbert_basis_.begin(), hilbert_basis_.end());
}

Character MonomialTable::weight(const ExponentVector& m) const {
    std::uint64_t id = 0;
    for (std::size_t j = 0; j < radices_.size(); ++j) {
        std::int64_t s = 0;
        for (int i = 0; i < m.size(); ++i) s += static_cast<std::int64_t>(m[i]) * coord_chars_[static_cast<std::size_t>(i)][j];
        id = id * static_cast<std::uint64_t>(radices_[j]) + static_cast<std::uint64_t>(s % radices_[j]);
    }
    return Character{static_cast<std::uint32_t>(id)};
}

std::vector<ExponentVector> MonomialTable::minimal_invariant_above(const ExponentVector& c) const {
    Character w = weight(c);
    if (w.is_trivial()) return {c};
    std::vector<ExponentVector> out;
    const auto& complement = standard(group_->inverse(w));
    out.reserve(complement.size());
    for (const auto& d : complement) out.push_back(c + d);
    return out;
}

std::vector<ExponentVector> hilbert_basis(const AbelianGroup& group, std::uint64_t max_box_points) {
    return MonomialTable(group, max_box_points).hilbert_basis();
}

WeightedGens module_min_gens(const MonomialTable& table, Character w) {
    return WeightedGens{w, table.standard(w)};
}

bool ideal_membership(const MonomialTable& table, const InvariantIdeal& ideal, const ExponentVector& m) {
    if (!table.is_invariant(m)) throw Error(ErrorKind::NotInvariant, "monomial is not invariant");
    return std::any_of(ideal.gens.begin(), ideal.gens.end(), [&](const ExponentVector& g) { return g.divides(m); });
}

InvariantIdeal colon_module(const MonomialTable& table, const WeightedGens& k, const ExponentVector& h) {
    if (table.weight(h) != k.weight) throw Error(ErrorKind::WeightMismatch, "h does not have the module's weight");
    std::vector<ExponentVector> cands;
    for (const auto& u : k.gens) {
        auto above = table.minimal_invariant_above(positive_difference(u, h));
        cands.insert(cands.end(), above.begin(), above.end());
    }
    return InvariantIdeal{minimalize(std::move(cands))};
}

InvariantIdeal ideal_intersection(const MonomialTable& table, const InvariantIdeal& a, const InvariantIdeal& b) {
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    std::vector<ExponentVector> cands;
    for (const auto& x : a.gens)
        for (const auto& y : b.gens) {
            auto above = table.minimal_invariant_above(join(x, y));
            cands.insert(cands.end(), above.begin(), above.end());
        }
    return InvariantIdeal{minimalize(std::move(cands))};
}

RadicalFamily radical(int dim, const InvariantIdeal& ideal) {
    std::vector<Support> s;
    s.reserve(ideal.gens.size());
    for (const auto& g : ideal.gens) s.push_back(g.support());
    return RadicalFamily::from_supports(dim, std::move(s));
}

bool radical_member(const RadicalFamily& f, const ExponentVector& m) {
    Support sm = m.support();
    return std::any_of(f.supports.begin(), f.supports.end(), [&](Support s) { return is_subset(s, sm); });
}

namespace {
void require_same_dim(const RadicalFamily& a, const RadicalFamily& b) {
    if (a.dim != b.dim) throw Error(ErrorKind::DimensionMismatch, "radical families over different dimensions");
}
}  // namespace

RadicalFamily radical_intersect(const RadicalFamily& a, const RadicalFamily& b) {
    require_same_dim(a, b);
    std::vector<Support> s;
    for (Support x : a.supports)
        for (Support y : b.supports) s.push_back(x | y);
    return RadicalFamily::from_supports(a.dim, std::move(s));
}

RadicalFamily radical_sum(const RadicalFamily& a, const RadicalFamily& b) {
    require_same_dim(a, b);
    std::vector<Support> s = a.supports;
    s.insert(s.end(), b.supports.begin(), b.supports.end());
    return RadicalFamily::from_supports(a.dim, std::move(s));
}

bool radical_contains(const RadicalFamily& outer, const RadicalFamily& inner) {
    require_same_dim(outer, inner);
    return std::all_of(inner.supports.begin(), inner.supports.end(), [&](Support s) {
        return std::any_of(outer.supports.begin(), outer.supports.end(), [&](Support o) { return is_subset(o, s); });
    });
}

bool radical_equal(const RadicalFamily& a, const RadicalFamily& b) {
    require_same_dim(a, b);
    return a.supports == b.supports;
}

}  // namespace quotsing
