#include <numeric>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

ErrorKind parse_error(const std::string& text) {
    try {
        parse_group_spec(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a parse error for " << text);
    return ErrorKind::MalformedInput;
}

std::set<WeightVector> as_set(const AbelianGroup& g) { return {g.elements().begin(), g.elements().end()}; }

}  // namespace

TEST_SUITE("group") {
    TEST_CASE("parse accepts the documented wire format") {
        auto spec = parse_group_spec(R"({"dim": 3, "generators": [{"order": 2, "weights": [0,1,1]}, {"order": 2, "weights": [1,0,1]}]})");
        CHECK(spec == klein_spec());
        auto trivial = parse_group_spec(R"({"dim": 2, "generators": []})");
        CHECK(trivial.dim == 2);
        CHECK(trivial.generators.empty());
    }

    TEST_CASE("parse reduces weights into [0, order)") {
        auto spec = parse_group_spec(R"({"dim": 2, "generators": [{"order": 5, "weights": [-1, 6]}]})");
        CHECK(spec.generators[0].weights == std::vector<std::int64_t>{4, 1});
    }

    TEST_CASE("parse rejects bad input with the right kind") {
        CHECK(parse_error(R"({"dim": 3, "generators": [{"order": 4, "weights": [1,1,1]}]})") == ErrorKind::NotSpecialLinear);
        CHECK(parse_error(R"({"dim": 3, "generators": [{"order": 2, "weights": [0,1]}]})") == ErrorKind::DimensionMismatch);
        CHECK(parse_error(R"({"dim": 2, "generators": [{"order": 0, "weights": [0,0]}]})") == ErrorKind::NonPositiveOrder);
        CHECK(parse_error(R"({"dim": 2, "generators": [)") == ErrorKind::MalformedInput);
        CHECK(parse_error(R"({"generators": []})") == ErrorKind::MalformedInput);
        CHECK(parse_error(R"([1,2,3])") == ErrorKind::MalformedInput);
    }

    TEST_CASE("spec JSON round trip") {
        for (const auto& spec : small_groups()) CHECK(parse_group_spec(group_spec_to_json(spec)) == spec);
    }

    TEST_CASE("build_group on the worked examples") {
        auto k = build_group(klein_spec());
        CHECK(as_set(k) == std::set<WeightVector>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        CHECK(k.exponent() == 2);
        auto c = build_group(cyclic4_spec());
        CHECK(as_set(c) == std::set<WeightVector>{{0, 0, 0}, {1, 1, 2}, {2, 2, 0}, {3, 3, 2}});
        auto t = build_group(trivial_spec());
        CHECK(t.order() == 1);
        CHECK(t.element(0) == WeightVector{0, 0});
        CHECK(t.is_trivial());
    }

    TEST_CASE("elements are sorted with the identity first") {
        for (const auto& spec : small_groups()) {
            auto g = build_group(spec);
            CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
            CHECK(std::all_of(g.element(0).begin(), g.element(0).end(), [](auto x) { return x == 0; }));
        }
    }

    TEST_CASE("group order bound") {
        CHECK_THROWS_AS(build_group(GroupSpec{2, {{100, {1, 99}}}}, 50), Error);
        try {
            build_group(GroupSpec{2, {{100, {1, 99}}}}, 50);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::GroupTooLarge);
        }
        CHECK(build_group(GroupSpec{2, {{100, {1, 99}}}}, 100).order() == 100);
    }

    TEST_CASE("closure: contains zero, closed under addition, every element is SL") {
        for (const auto& spec : random_groups(11, 40, 4, 60)) {
            auto g = build_group(spec);
            const auto L = g.exponent();
            for (const auto& a : g.elements()) {
                std::int64_t s = std::accumulate(a.begin(), a.end(), std::int64_t{0});
                CHECK(s % L == 0);
                for (const auto& b : g.elements()) {
                    WeightVector c(a.size());
                    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % L;
                    CHECK(g.index_of(c) >= 0);
                }
            }
        }
    }

    TEST_CASE("invariant factors: divisibility chain, product is the order") {
        for (const auto& spec : random_groups(12, 60, 4, 60)) {
            auto g = build_group(spec);
            const auto& s = g.invariant_factors();
            std::int64_t prod = 1;
            for (std::size_t j = 0; j < s.size(); ++j) {
                CHECK(s[j] > 1);
                if (j + 1 < s.size()) CHECK(s[j + 1] % s[j] == 0);
                prod *= s[j];
            }
            CHECK(static_cast<std::size_t>(prod) == g.order());
        }
        CHECK(build_group(klein_spec()).invariant_factors() == std::vector<std::int64_t>{2, 2});
        CHECK(build_group(cyclic4_spec()).invariant_factors() == std::vector<std::int64_t>{4});
    }

    TEST_CASE("characters: group laws, evaluation is a pairing, characters separate elements") {
        for (const auto& spec : random_groups(13, 30, 4, 40)) {
            auto g = build_group(spec);
            const auto L = g.exponent();
            CHECK(g.character_count() == g.order());
            for (std::uint32_t a = 0; a < g.character_count(); ++a) {
                Character ca{a};
                CHECK(g.multiply(ca, g.inverse(ca)).is_trivial());
                CHECK(g.character_from_coords(g.coords(ca)) == ca);
                for (std::uint32_t b = 0; b < g.character_count(); b += 3) {
                    Character cb{b};
                    for (std::uint32_t e = 0; e < g.order(); ++e)
                        CHECK(g.evaluate(g.multiply(ca, cb), e) == (g.evaluate(ca, e) + g.evaluate(cb, e)) % L);
                }
            }
            for (std::uint32_t e = 1; e < g.order(); ++e) {
                bool separated = false;
                for (std::uint32_t a = 0; a < g.character_count() && !separated; ++a)
                    separated = g.evaluate(Character{a}, e) != 0;
                CHECK(separated);
            }
        }
    }

    TEST_CASE("coordinate characters evaluate as the weights") {
        for (const auto& spec : random_groups(14, 30, 4, 40)) {
            auto g = build_group(spec);
            for (int i = 0; i < g.dim(); ++i)
                for (std::uint32_t e = 0; e < g.order(); ++e)
                    CHECK(g.evaluate(g.coordinate_character(i), e) == g.element(e)[static_cast<std::size_t>(i)]);
        }
    }

    TEST_CASE("weight_of_monomial examples") {
        auto k = build_group(klein_spec());
        CHECK(weight_of_monomial(k, ev({2, 0, 0})).is_trivial());
        CHECK(weight_of_monomial(k, ev({0, 0, 0})).is_trivial());
        CHECK(!weight_of_monomial(k, ev({1, 0, 0})).is_trivial());
        auto c = build_group(cyclic4_spec());
        CHECK(weight_of_monomial(c, ev({0, 0, 2})).is_trivial());
        CHECK(!weight_of_monomial(c, ev({0, 0, 1})).is_trivial());
    }

    TEST_CASE("wt is a homomorphism") {
        std::mt19937_64 rng(5);
        for (const auto& spec : random_groups(15, 30, 4, 60)) {
            auto g = build_group(spec);
            MonomialTable table(g);
            for (int trial = 0; trial < 20; ++trial) {
                ExponentVector a(g.dim()), b(g.dim());
                for (int i = 0; i < g.dim(); ++i) {
                    a[i] = static_cast<std::int32_t>(rng() % 50);
                    b[i] = static_cast<std::int32_t>(rng() % 50);
                }
                CHECK(weight_of_monomial(g, a + b) == g.multiply(weight_of_monomial(g, a), weight_of_monomial(g, b)));
                CHECK(table.weight(a) == weight_of_monomial(g, a));
                // Direct check against the definition: <w(g), m> mod L.
                Character w = weight_of_monomial(g, a);
                for (std::uint32_t e = 0; e < g.order(); ++e) {
                    std::int64_t s = 0;
                    for (int i = 0; i < g.dim(); ++i) s += g.element(e)[static_cast<std::size_t>(i)] * a[i];
                    CHECK(g.evaluate(w, e) == s % g.exponent());
                }
            }
        }
    }

    TEST_CASE("stabilizers and fixed supports on the examples") {
        auto k = build_group(klein_spec());
        auto h1 = pointwise_stabilizer(k, bits({1}));
        REQUIRE(h1.order() == 2);
        CHECK(k.element(h1.members[1]) == WeightVector{0, 1, 1});
        CHECK(pointwise_stabilizer(k, 0) == k.whole());
        CHECK(fixed_support(k, h1) == bits({1}));
        CHECK(fixed_support(k, k.trivial_subgroup()) == bits({1, 2, 3}));
        auto c = build_group(cyclic4_spec());
        CHECK(pointwise_stabilizer(c, bits({1})).is_trivial());
        CHECK(fixed_support(c, c.whole()) == 0);
    }

    TEST_CASE("Galois connection between coordinate sets and subgroups") {
        for (const auto& spec : random_groups(16, 25, 4, 60)) {
            auto g = build_group(spec);
            const Support all = (Support{1} << g.dim()) - 1;
            for (Support t = 0; t <= all; ++t) {
                auto h = pointwise_stabilizer(g, t);
                CHECK(is_subset(t, fixed_support(g, h)));
                CHECK(pointwise_stabilizer(g, fixed_support(g, h)) == h);
                for (Support u = 0; u <= all; ++u)
                    if (is_subset(t, u)) {
                        auto hu = pointwise_stabilizer(g, u);
                        CHECK(std::includes(h.members.begin(), h.members.end(), hu.members.begin(), hu.members.end()));
                    }
            }
        }
    }

    TEST_CASE("restriction of characters") {
        auto k = build_group(klein_spec());
        auto h1 = pointwise_stabilizer(k, bits({1}));
        Character x1 = k.coordinate_character(0);
        // wt(x1) vanishes on (0,1,1).
        CHECK(is_trivial_on(k, x1, h1));
        CHECK(!is_trivial_on(k, k.coordinate_character(1), h1));
        for (std::uint32_t c = 0; c < k.character_count(); ++c) CHECK(is_trivial_on(k, Character{c}, k.trivial_subgroup()));
        CHECK(is_trivial_on(k, Character{0}, k.whole()));
        for (const auto& spec : random_groups(17, 20, 4, 40)) {
            auto g = build_group(spec);
            for (Support t = 0; t < (Support{1} << g.dim()); ++t) {
                auto h = pointwise_stabilizer(g, t);
                for (std::uint32_t c = 0; c < g.character_count(); ++c) {
                    bool direct = std::all_of(h.members.begin(), h.members.end(),
                                              [&](std::uint32_t e) { return g.evaluate(Character{c}, e) == 0; });
                    CHECK(is_trivial_on(g, Character{c}, h) == direct);
                    auto r = restrict_character(g, Character{c}, h);
                    CHECK(std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; }) == direct);
                }
            }
        }
    }

    TEST_CASE("quotient_group_on") {
        auto c = build_group(cyclic4_spec());
        auto q = quotient_group_on(c, bits({3}));
        CHECK(q.dim == 1);
        auto qg = build_group(q);
        CHECK(qg.order() == 2);
        CHECK(!qg.special_linear());
        auto k = build_group(klein_spec());
        auto qk = build_group(quotient_group_on(k, bits({1})));
        CHECK(qk.dim() == 1);
        CHECK(qk.order() == 2);
        auto t = build_group(trivial_spec(3));
        CHECK(build_group(quotient_group_on(t, bits({1, 2, 3}))).is_trivial());
        try {
            quotient_group_on(c, bits({1}));
            FAIL("expected NotClosed");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotClosed);
        }
    }

    TEST_CASE("non-SL specs are flagged and kept out of SL-only code") {
        GroupSpec spec{1, {{2, {1}}}, false};
        auto g = build_group(spec);
        CHECK(!g.special_linear());
        CHECK(g.order() == 2);
    }

    TEST_CASE("build_group is idempotent on its own element list") {
        for (const auto& spec : random_groups(18, 40, 4, 60)) {
            auto g = build_group(spec);
            auto again = build_group(g.to_spec());
            CHECK(again.elements() == g.elements());
            CHECK(again.invariant_factors() == g.invariant_factors());
            CHECK(again.exponent() == g.exponent());
        }
    }
}
