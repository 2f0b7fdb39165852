#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "quotsing/center.hpp"
#include "quotsing/quiver.hpp"
#include "quotsing/singular_locus.hpp"

using namespace testing;

namespace {

// Nontrivial character whose \bar I contains x_i^2; names the vertices of the Klein example.
Character vertex_with_square(const MonomialTable& table, const CharIdealTable& ideals, int i) {
    ExponentVector sq(table.dim());
    sq[i] = 2;
    for (std::uint32_t c = 1; c < ideals.bar_ideals.size(); ++c) {
        const auto& g = ideals.bar_ideals[c].gens;
        if (std::find(g.begin(), g.end(), sq) != g.end()) return Character{c};
    }
    FAIL("no vertex with that square");
    return Character{0};
}

// Reference partition from generator-level conductors.
std::vector<int> reference_blocks(const MonomialTable& table, const CharIdealTable& ideals, const ConductorTable& cond,
                                  const std::vector<Character>& vertices, const ExponentVector& m, std::vector<bool>& live) {
    const std::size_t k = vertices.size();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (!ideal_membership(table, cond.symmetric(vertices[a], vertices[b]), m)) parent[find(a)] = find(b);
    std::map<std::size_t, int> label;
    std::vector<int> block(k, -1);
    live.clear();
    for (std::size_t v = 0; v < k; ++v) {
        if (ideal_membership(table, ideals.bar_ideals[vertices[v].id], m)) continue;
        auto [it, fresh] = label.emplace(find(v), static_cast<int>(label.size()));
        if (fresh) live.push_back(false);
        block[v] = it->second;
        if (!radical_member(ideals.radicals[vertices[v].id], m)) live[static_cast<std::size_t>(it->second)] = true;
    }
    return block;
}

std::vector<std::uint64_t> prefix(const std::vector<std::uint64_t>& v, std::size_t n) {
    return std::vector<std::uint64_t>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace

TEST_SUITE("center") {
    TEST_CASE("bar ideals of the worked example") {
        auto g = build_group(klein_spec());
        MonomialTable table(g);
        auto ideals = char_ideal_table(table);
        CHECK(ideals.bar_ideals[0].is_unit());
        std::set<std::vector<ExponentVector>> got;
        for (std::uint32_t c = 1; c < 4; ++c) got.insert(ideals.bar_ideals[c].gens);
        std::set<std::vector<ExponentVector>> expect{
            {ev({0, 2, 2}), ev({1, 1, 1}), ev({2, 0, 0})},
            {ev({0, 2, 0}), ev({1, 1, 1}), ev({2, 0, 2})},
            {ev({0, 0, 2}), ev({1, 1, 1}), ev({2, 2, 0})},
        };
        CHECK(got == expect);
        auto v1 = vertex_with_square(table, ideals, 0);
        CHECK(ideals.radicals[v1.id].supports == std::vector<Support>{bits({1}), bits({2, 3})});
    }

    TEST_CASE("bar ideal of A_1") {
        auto g = build_group(surface_spec(2));
        MonomialTable table(g);
        CHECK(bar_ideal(table, Character{1}).gens == std::vector<ExponentVector>{ev({0, 2}), ev({1, 1}), ev({2, 0})});
        CHECK(bar_ideal(table, Character{0}).is_unit());
    }

    TEST_CASE("bar ideals are symmetric under inversion") {
        for (const auto& spec : random_groups(41, 30, 4, 40)) {
            auto g = build_group(spec);
            MonomialTable table(g);
            for (std::uint32_t c = 0; c < g.character_count(); ++c)
                CHECK(bar_ideal(table, Character{c}) == bar_ideal(table, g.inverse(Character{c})));
        }
    }

    TEST_CASE("reduced center family of the examples") {
        auto k = build_group(klein_spec());
        CHECK(reduced_center_family(MonomialTable(k)).supports == std::vector<Support>{bits({1, 2}), bits({1, 3}), bits({2, 3})});
        auto c = build_group(cyclic4_spec());
        CHECK(reduced_center_family(MonomialTable(c)).supports == std::vector<Support>{bits({1}), bits({2})});
        auto t = build_group(trivial_spec());
        CHECK(reduced_center_family(MonomialTable(t)).is_unit());
    }

    TEST_CASE("reconstruction and containment on examples and random groups") {
        auto specs = random_groups(42, 60, 4, 60);
        specs.push_back(klein_spec());
        specs.push_back(cyclic4_spec());
        specs.push_back(trivial_spec());
        for (const auto& spec : specs) {
            auto g = build_group(spec);
            MonomialTable table(g);
            auto r = verify_reconstruction(table);
            CHECK(r.equal);
            CHECK(r.only_center.empty());
            CHECK(r.only_locus.empty());
            CHECK(idem_spli_check(table));
        }
    }

    TEST_CASE("reconstruction reports a diff when an ideal is damaged") {
        auto g = build_group(klein_spec());
        MonomialTable table(g);
        auto ideals = char_ideal_table(table);
        auto v1 = vertex_with_square(table, ideals, 0);
        auto& gens = ideals.bar_ideals[v1.id].gens;
        gens.erase(std::find(gens.begin(), gens.end(), ev({0, 2, 2})));
        ideals.radicals[v1.id] = radical(3, ideals.bar_ideals[v1.id]);
        auto r = verify_reconstruction(g, ideals);
        CHECK(!r.equal);
        CHECK(r.only_locus == std::vector<Support>{bits({2, 3})});
    }

    TEST_CASE("conductors of the worked example") {
        auto g = build_group(klein_spec());
        MonomialTable table(g);
        auto ideals = char_ideal_table(table);
        Character v[3];
        for (int i = 0; i < 3; ++i) v[i] = vertex_with_square(table, ideals, i);
        auto squares = [](int i, int j) {
            ExponentVector a(3), b(3);
            a[i] = 2;
            b[j] = 2;
            return minimalize({a, b, ev({1, 1, 1})});
        };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) {
                    CHECK(conductor(table, v[i], v[j]).is_unit());
                    continue;
                }
                CHECK(conductor(table, v[i], v[j]).gens == squares(i, j));
            }
        auto k12 = factoring_module(table, v[0], v[1]);
        CHECK(k12.gens == std::vector<ExponentVector>{ev({0, 2, 1}), ev({1, 1, 0}), ev({2, 0, 1})});
        CHECK(k12.weight == g.coordinate_character(2));
    }

    TEST_CASE("conductor equals the intersection of colon modules") {
        for (const auto& spec : random_groups(43, 12, 3, 12)) {
            auto g = build_group(spec);
            MonomialTable table(g);
            for (std::uint32_t a = 1; a < g.character_count(); ++a)
                for (std::uint32_t b = 1; b < g.character_count(); ++b) {
                    if (a == b) continue;
                    auto k = factoring_module(table, Character{a}, Character{b});
                    InvariantIdeal acc{{ExponentVector(g.dim())}};
                    for (const auto& h : table.standard(k.weight)) acc = ideal_intersection(table, acc, colon_module(table, k, h));
                    CHECK(conductor(table, Character{a}, Character{b}) == acc);
                }
        }
    }

    TEST_CASE("conductor table: symmetric, unit on the diagonal, contains \\bar I") {
        for (const auto& spec : random_groups(44, 15, 4, 16)) {
            auto g = build_group(spec);
            MonomialTable table(g);
            auto ideals = char_ideal_table(table);
            ConductorTable cond(table);
            for (std::uint32_t a = 1; a < g.character_count(); ++a) {
                CHECK(cond.symmetric(Character{a}, Character{a}).is_unit());
                for (std::uint32_t b = 1; b < g.character_count(); ++b) {
                    CHECK(cond.id(Character{a}, Character{b}) == cond.id(Character{b}, Character{a}));
                    const auto& sym = cond.symmetric(Character{a}, Character{b});
                    for (const auto& gen : ideals.bar_ideals[a].gens) CHECK(ideal_membership(table, sym, gen));
                }
            }
        }
    }

    TEST_CASE("block partitions match generator-level conductors") {
        auto specs = random_groups(45, 25, 4, 16);
        specs.push_back(klein_spec());
        specs.push_back(cyclic4_spec());
        for (const auto& spec : specs) {
            auto g = build_group(spec);
            MonomialTable table(g);
            ContractionAlgebra algebra(table);
            const int d = static_cast<int>(2 * g.order());
            CenterOptions opts;
            opts.record_blocks = true;
            auto h = algebra.center_hilbert(d, opts);
            auto vertices = algebra.nontrivial_characters();
            for (const auto& mb : h.blocks) {
                std::vector<bool> live;
                auto block = reference_blocks(table, algebra.ideals(), algebra.conductors(), vertices, mb.monomial, live);
                CHECK(block == mb.block);
                CHECK(live == mb.live);
            }
        }
    }

    TEST_CASE("center Hilbert functions of the examples") {
        auto k = build_group(klein_spec());
        MonomialTable kt(k);
        ContractionAlgebra ka(kt);
        auto kh = ka.center_hilbert(6);
        CHECK(kh.dim_r == std::vector<std::uint64_t>{1, 0, 3, 0, 3, 0, 3});
        CHECK(kh.dim_z == std::vector<std::uint64_t>{1, 0, 3, 0, 3, 0, 3});
        CHECK(kh.theo22_violations == 0);
        auto c = build_group(cyclic4_spec());
        MonomialTable ct(c);
        ContractionAlgebra ca(ct);
        CHECK(ca.center_hilbert(6).dim_r == std::vector<std::uint64_t>{1, 0, 1, 0, 1, 0, 1});
        auto t = build_group(trivial_spec());
        MonomialTable tt(t);
        ContractionAlgebra ta(tt);
        auto th = ta.center_hilbert(5);
        CHECK(th.dim_z == std::vector<std::uint64_t>(6, 0));
        CHECK(th.dim_r == std::vector<std::uint64_t>(6, 0));
    }

    TEST_CASE("exactly one vertex of the cyclic-4 example has a one-dimensional stable endomorphism ring") {
        auto g = build_group(cyclic4_spec());
        MonomialTable table(g);
        ContractionAlgebra algebra(table);
        int found_z = 0, found_r = 0;
        std::vector<std::uint64_t> one(7, 0);
        one[0] = 1;
        for (auto v : algebra.nontrivial_characters()) {
            auto h = algebra.subsystem_center({v}, 6);
            if (h.dim_z == one) ++found_z;
            if (h.dim_r == one) ++found_r;
        }
        CHECK(found_z == 1);
        CHECK(found_r == 1);
    }

    TEST_CASE("center invariants across random groups") {
        for (const auto& spec : random_groups(46, 40, 4, 40)) {
            auto g = build_group(spec);
            MonomialTable table(g);
            ContractionAlgebra algebra(table);
            const int d = static_cast<int>(2 * g.order());
            auto h = algebra.center_hilbert(d);
            CHECK(h.theo22_violations == 0);
            for (int i = 0; i <= d; ++i) {
                auto ii = static_cast<std::size_t>(i);
                CHECK(h.dim_r[ii] <= h.dim_z[ii]);
                CHECK(h.dim_r[ii] <= h.invariant_count[ii]);
                CHECK(h.dim_r[ii] == h.outside_count[ii]);
            }
            CHECK(h.dim_r[0] == 1);
        }
    }

    TEST_CASE("dense oracle agrees with the block computation") {
        std::vector<GroupSpec> specs{klein_spec(), cyclic4_spec(), surface_spec(2), surface_spec(3), surface_spec(6),
                                     GroupSpec{3, {{3, {1, 1, 1}}}}, GroupSpec{3, {{6, {1, 2, 3}}}},
                                     GroupSpec{3, {{5, {1, 2, 2}}}}, GroupSpec{4, {{2, {1, 1, 1, 1}}}}, trivial_spec()};
        for (const auto& spec : specs) {
            auto g = build_group(spec);
            MonomialTable table(g);
            ContractionAlgebra algebra(table);
            auto dense = dense_center_oracle(g, 6);
            CHECK(dense == algebra.center_hilbert(6).dim_z);
        }
    }

    TEST_CASE("dense oracle limits") {
        auto g = build_group(surface_spec(7));
        try {
            dense_center_oracle(g, 4);
            FAIL("expected ScaleExceeded");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ScaleExceeded);
        }
        auto small = build_group(surface_spec(2));
        CHECK_THROWS_AS(dense_center_oracle(small, 7), Error);
        CHECK(dense_center_oracle(g, 4, DenseOracleLimits{7, 6}).size() == 5);
    }

    TEST_CASE("subsystems") {
        auto g = build_group(klein_spec());
        MonomialTable table(g);
        ContractionAlgebra algebra(table);
        auto all = algebra.nontrivial_characters();
        auto full = algebra.center_hilbert(8);
        auto sub = algebra.subsystem_center(all, 8);
        CHECK(sub.dim_z == full.dim_z);
        CHECK(sub.dim_r == full.dim_r);
        auto v1 = vertex_with_square(table, algebra.ideals(), 0);
        auto one = algebra.subsystem_center({v1}, 6);
        CHECK(one.dim_r == std::vector<std::uint64_t>{1, 0, 2, 0, 2, 0, 2});
        try {
            algebra.subsystem_center({}, 4);
            FAIL("expected EmptySubset");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::EmptySubset);
        }
    }

    TEST_CASE("restriction maps refine and compose") {
        for (const auto& spec : {klein_spec(), cyclic4_spec(), GroupSpec{3, {{6, {1, 2, 3}}}}, GroupSpec{4, {{6, {1, 2, 4, 5}}}}}) {
            auto g = build_group(spec);
            MonomialTable table(g);
            ContractionAlgebra algebra(table);
            auto all = algebra.nontrivial_characters();
            std::vector<Character> t{all.front()};
            std::vector<Character> t2(all.begin(), all.begin() + static_cast<std::ptrdiff_t>((all.size() + 1) / 2));
            CHECK(algebra.restriction_check(t, t2, 2 * static_cast<int>(g.order())));
            CHECK(algebra.restriction_check(t2, all, 2 * static_cast<int>(g.order())));
            CHECK(algebra.cocycle_check(t, t2, all, 2 * static_cast<int>(g.order())));
            if (all.size() > 1) CHECK(!algebra.restriction_check({all.back()}, t, 4));
        }
        auto g = build_group(klein_spec());
        MonomialTable table(g);
        ContractionAlgebra algebra(table);
        CHECK_THROWS_AS(algebra.restriction_check({}, algebra.nontrivial_characters(), 4), Error);
    }

    TEST_CASE("invariant monomial enumeration") {
        for (const auto& spec : random_groups(47, 15, 4, 12)) {
            auto g = build_group(spec);
            MonomialTable table(g);
            const int d = 9;
            auto inv = invariant_monomials(table, d);
            std::vector<int> bound(static_cast<std::size_t>(g.dim()), d);
            std::vector<ExponentVector> direct;
            for_each_in_box(bound, [&](const ExponentVector& m) {
                if (m.degree() <= d && table.is_invariant(m)) direct.push_back(m);
            });
            std::sort(direct.begin(), direct.end(), [](const ExponentVector& a, const ExponentVector& b) {
                return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
            });
            CHECK(inv == direct);
        }
    }

    TEST_CASE("blocks_at on a single monomial") {
        auto g = build_group(klein_spec());
        MonomialTable table(g);
        ContractionAlgebra algebra(table);
        auto all = algebra.nontrivial_characters();
        auto b0 = algebra.blocks_at(ExponentVector(3), all);
        CHECK(b0.block_count() == 1);
        CHECK(b0.live_count() == 1);
        auto b = algebra.blocks_at(ev({1, 1, 1}), all);
        CHECK(b.block_count() == 0);
        CHECK_THROWS_AS(algebra.blocks_at(ev({1, 0, 0}), all), Error);
    }
}
