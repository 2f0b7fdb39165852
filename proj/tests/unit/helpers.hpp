#pragma once

#include <functional>
#include <random>
#include <vector>

#include "quotsing/group.hpp"
#include "quotsing/monomial.hpp"

namespace testing {

using namespace quotsing;

inline GroupSpec klein_spec() { return GroupSpec{3, {{2, {0, 1, 1}}, {2, {1, 0, 1}}}}; }
inline GroupSpec cyclic4_spec() { return GroupSpec{3, {{4, {1, 1, 2}}}}; }
inline GroupSpec trivial_spec(int n = 2) { return GroupSpec{n, {}}; }
inline GroupSpec surface_spec(int r) { return GroupSpec{2, {{r, {1, r - 1}}}}; }

inline Support bits(std::initializer_list<int> one_based) {
    Support s = 0;
    for (int i : one_based) s |= Support{1} << (i - 1);
    return s;
}

inline ExponentVector ev(std::initializer_list<std::int32_t> e) { return ExponentVector(e); }

/// A fixed, varied list of small SL groups for property tests.
inline std::vector<GroupSpec> small_groups() {
    return {
        klein_spec(),
        cyclic4_spec(),
        surface_spec(2),
        surface_spec(5),
        GroupSpec{3, {{3, {1, 1, 1}}}},
        GroupSpec{3, {{5, {1, 2, 2}}}},
        GroupSpec{3, {{6, {1, 2, 3}}}},
        GroupSpec{3, {{7, {1, 2, 4}}}},
        GroupSpec{3, {{2, {1, 1, 0}}, {4, {1, 3, 0}}}},
        GroupSpec{3, {{3, {1, 2, 0}}, {3, {0, 1, 2}}}},
        GroupSpec{4, {{2, {1, 1, 1, 1}}, {2, {1, 1, 0, 0}}}},
        GroupSpec{4, {{6, {1, 2, 4, 5}}}},
        GroupSpec{4, {{4, {1, 1, 1, 1}}}},
        GroupSpec{2, {{8, {3, 5}}}},
    };
}

/// Deterministic random SL specs with bounded order.
inline std::vector<GroupSpec> random_groups(std::uint64_t seed, std::size_t count, int dim_max, std::int64_t order_max) {
    std::mt19937_64 rng(seed);
    std::vector<GroupSpec> out;
    while (out.size() < count) {
        GroupSpec spec;
        spec.dim = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(dim_max - 1));
        int gens = 1 + static_cast<int>(rng() % 2);
        for (int g = 0; g < gens; ++g) {
            GeneratorSpec gen;
            gen.order = 2 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(order_max - 1));
            std::int64_t sum = 0;
            for (int i = 0; i + 1 < spec.dim; ++i) {
                auto w = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(gen.order));
                gen.weights.push_back(w);
                sum += w;
            }
            gen.weights.push_back(((-sum) % gen.order + gen.order) % gen.order);
            spec.generators.push_back(gen);
        }
        try {
            auto g = build_group(spec, static_cast<std::size_t>(order_max));
            if (g.is_trivial()) continue;
        } catch (const Error&) {
            continue;
        }
        out.push_back(spec);
    }
    return out;
}

/// Calls fn on every exponent vector in prod [0, bound_i].
inline void for_each_in_box(const std::vector<int>& bound, const std::function<void(const ExponentVector&)>& fn) {
    const int n = static_cast<int>(bound.size());
    ExponentVector m(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            fn(m);
            return;
        }
        for (int t = 0; t <= bound[static_cast<std::size_t>(i)]; ++t) {
            m[i] = t;
            rec(i + 1);
        }
        m[i] = 0;
    };
    rec(0);
}

inline std::vector<int> order_box(const AbelianGroup& g, int scale = 1) {
    std::vector<int> b;
    for (int i = 0; i < g.dim(); ++i) b.push_back(scale * static_cast<int>(g.coordinate_order(i)));
    return b;
}

/// Direct divisibility search, independent of generator bookkeeping.
inline bool divisible_by_any(const std::vector<ExponentVector>& gens, const ExponentVector& m) {
    for (const auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

}  // namespace testing
