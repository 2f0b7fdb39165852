#pragma once

#include <cstdint>
#include <vector>

namespace quotsing {

namespace detail {

template <class Fn>
void invariant_sweep(const AbelianGroup& group, const std::vector<std::int64_t>& last_offset, int i, int remaining,
                     std::uint32_t w, ExponentVector& m, Fn& fn) {
    const int n = group.dim();
    if (i == n - 1) {
        std::int64_t t = last_offset[w];
        if (t < 0) return;
        const std::int64_t o = group.coordinate_order(i);
        for (; t <= remaining; t += o) {
            m[i] = static_cast<std::int32_t>(t);
            fn(static_cast<const ExponentVector&>(m));
        }
        m[i] = 0;
        return;
    }
    const auto& step = group.coordinate_step(i);
    for (int t = 0; t <= remaining; ++t) {
        m[i] = t;
        invariant_sweep(group, last_offset, i + 1, remaining - t, w, m, fn);
        w = step[w];
    }
    m[i] = 0;
}

}  // namespace detail

template <class Fn>
void for_each_invariant(const MonomialTable& table, int max_degree, Fn&& fn) {
    const AbelianGroup& group = table.group();
    const int n = group.dim();
    if (max_degree < 0) return;
    // last_offset[chi]: least t with chi * wt(x_n)^t trivial, or -1.
    std::vector<std::int64_t> last_offset(group.character_count(), -1);
    const auto& step = group.coordinate_step(n - 1);
    for (std::uint32_t c = 0; c < group.character_count(); ++c) {
        std::uint32_t w = c;
        for (std::int64_t t = 0; t < group.coordinate_order(n - 1); ++t) {
            if (w == 0) {
                last_offset[c] = t;
                break;
            }
            w = step[w];
        }
    }
    ExponentVector m(n);
    detail::invariant_sweep(group, last_offset, 0, max_degree, 0, m, fn);
}

}  // namespace quotsing
