#include "quotsing/singular_locus.hpp"

#include <algorithm>
#include <set>

namespace quotsing {

namespace {

void require_sl(const AbelianGroup& group) {
    if (!group.special_linear())
        throw Error(ErrorKind::NotSpecialLinear, "singular-locus computations need a group inside SL(n)");
}

Support element_fixed(const WeightVector& w) {
    Support s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == 0) s |= Support{1} << i;
    return s;
}

bool is_closed(const AbelianGroup& group, Support t) {
    return fixed_support(group, pointwise_stabilizer(group, t)) == t;
}

}  // namespace

std::vector<StabilizerPair> stabilizer_pairs(const AbelianGroup& group) {
    std::set<Support> found;
    for (std::size_t e = 1; e < group.order(); ++e) found.insert(element_fixed(group.element(static_cast<std::uint32_t>(e))));
    // Close under intersection.
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Support> cur(found.begin(), found.end());
        for (std::size_t a = 0; a < cur.size(); ++a)
            for (std::size_t b = a + 1; b < cur.size(); ++b)
                if (found.insert(cur[a] & cur[b]).second) grew = true;
    }
    std::vector<Support> sorted(found.begin(), found.end());
    std::sort(sorted.begin(), sorted.end(), support_less);
    std::vector<StabilizerPair> pairs;
    for (Support t : sorted) pairs.push_back(StabilizerPair{t, pointwise_stabilizer(group, t)});
    return pairs;
}

RadicalFamily component_ideal(int dim, Support coords) {
    std::vector<Support> s;
    for (int i = 0; i < dim; ++i)
        if (!(coords >> i & 1)) s.push_back(Support{1} << i);
    return RadicalFamily::from_supports(dim, std::move(s));
}

RadicalFamily singular_locus_cst(const AbelianGroup& group) {
    require_sl(group);
    RadicalFamily acc = RadicalFamily::unit(group.dim());
    for (const auto& p : stabilizer_pairs(group)) acc = radical_intersect(acc, component_ideal(group.dim(), p.coords));
    return acc;
}

RadicalFamily singular_locus_elementwise(const AbelianGroup& group) {
    require_sl(group);
    RadicalFamily acc = RadicalFamily::unit(group.dim());
    for (std::size_t e = 1; e < group.order(); ++e)
        acc = radical_intersect(acc, component_ideal(group.dim(), element_fixed(group.element(static_cast<std::uint32_t>(e)))));
    return acc;
}

Meet meet(const AbelianGroup& group, Support t, Support t_prime) {
    if (!is_closed(group, t) || !is_closed(group, t_prime))
        throw Error(ErrorKind::NotClosed, "meet of non-closed coordinate sets");
    Support both = t & t_prime;
    Subgroup h = pointwise_stabilizer(group, both);
    Support fixed = fixed_support(group, h);
    return Meet{StabilizerPair{fixed, std::move(h)}, fixed == both};
}

std::vector<TildeClass> tilde_g0(const AbelianGroup& group, const std::vector<StabilizerPair>& pairs) {
    std::vector<TildeClass> out;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        // chi|_H ranges over all of H^ as chi ranges over G^.
        std::set<std::vector<std::int64_t>> seen;
        AbelianStructure h = subgroup_structure(group, pairs[p].stabilizer);
        for (std::uint32_t c = 0; c < group.character_count(); ++c) {
            auto r = restrict_character(group, Character{c}, pairs[p].stabilizer, h);
            if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; })) continue;
            if (seen.insert(r).second) out.push_back(TildeClass{p, std::move(r)});
        }
    }
    std::sort(out.begin(), out.end(), [](const TildeClass& a, const TildeClass& b) {
        return a.pair_index != b.pair_index ? a.pair_index < b.pair_index : a.restricted < b.restricted;
    });
    return out;
}

SingularLocusReport singular_locus_report(const AbelianGroup& group) {
    require_sl(group);
    SingularLocusReport r;
    r.pairs = stabilizer_pairs(group);
    for (const auto& p : r.pairs) {
        bool maximal = std::none_of(r.pairs.begin(), r.pairs.end(),
                                    [&](const StabilizerPair& q) { return q.coords != p.coords && is_subset(p.coords, q.coords); });
        if (maximal) r.components.push_back(p.coords);
    }
    r.reduced_ideal = RadicalFamily::unit(group.dim());
    for (const auto& p : r.pairs) r.reduced_ideal = radical_intersect(r.reduced_ideal, component_ideal(group.dim(), p.coords));
    r.tilde_g0 = tilde_g0(group, r.pairs);
    return r;
}

}  // namespace quotsing
