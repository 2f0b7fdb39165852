// Brute-force center of the contraction algebra. Deliberately naive: no
// standard sets, no conductors, factoring decided by enumerating divisors.

#include <map>
#include <numeric>
#include <tuple>

#include "quotsing/center.hpp"

namespace quotsing {

namespace {

// A basis path a -> b carried by the monomial p, wt(p) = a * b^{-1}.
struct Path {
    std::uint32_t source;
    std::uint32_t target;
    ExponentVector p;

    friend auto operator<=>(const Path&, const Path&) = default;
};

class Truncation {
public:
    explicit Truncation(const AbelianGroup& g) : group_(g) {}

    // The path factors through the trivial vertex iff some divisor u of p
    // has wt(u) = source.
    bool factors(std::uint32_t source, const ExponentVector& p) {
        auto key = std::make_pair(source, p);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool hit = false;
        ExponentVector u(p.size());
        auto rec = [&](auto& self, int i) -> void {
            if (hit) return;
            if (i == p.size()) {
                if (weight_of_monomial(group_, u).id == source) hit = true;
                return;
            }
            for (std::int32_t t = 0; t <= p[i] && !hit; ++t) {
                u[i] = t;
                self(self, i + 1);
            }
            u[i] = 0;
        };
        rec(rec, 0);
        memo_.emplace(key, hit);
        return hit;
    }

    // Zero when the path hits the trivial vertex.
    bool nonzero(const Path& x) {
        return x.source != 0 && x.target != 0 && !factors(x.source, x.p);
    }

private:
    const AbelianGroup& group_;
    std::map<std::pair<std::uint32_t, ExponentVector>, bool> memo_;
};

void monomials_of_degree(int n, int d, std::vector<ExponentVector>& out) {
    ExponentVector m(n);
    auto rec = [&](auto& self, int i, int left) -> void {
        if (i == n - 1) {
            m[i] = left;
            out.push_back(m);
            m[i] = 0;
            return;
        }
        for (int t = 0; t <= left; ++t) {
            m[i] = t;
            self(self, i + 1, left - t);
        }
        m[i] = 0;
    };
    if (n > 0) rec(rec, 0, d);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::ScaleExceeded, "oracle elimination overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::ScaleExceeded, "oracle elimination overflow");
    return r;
}

// Incremental row echelon basis over Q, rows kept integral and primitive.
class RowSpace {
public:
    using Row = std::map<std::size_t, std::int64_t>;

    void add(Row r) {
        while (!r.empty()) {
            auto [col, coef] = *r.begin();
            auto it = pivots_.find(col);
            if (it == pivots_.end()) {
                normalize(r);
                pivots_.emplace(col, std::move(r));
                return;
            }
            const Row& p = it->second;
            const std::int64_t pc = p.begin()->second;
            Row next;
            for (auto [c, v] : r) next[c] = checked_mul(v, pc);
            for (auto [c, v] : p) {
                std::int64_t nv = checked_sub(next[c], checked_mul(v, coef));
                if (nv == 0)
                    next.erase(c);
                else
                    next[c] = nv;
            }
            normalize(next);
            r = std::move(next);
        }
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    static void normalize(Row& r) {
        std::int64_t g = 0;
        for (auto [c, v] : r) g = std::gcd(g, v);
        if (g > 1)
            for (auto& [c, v] : r) v /= g;
    }

    std::map<std::size_t, Row> pivots_;
};

}  // namespace

std::vector<std::uint64_t> dense_center_oracle(const AbelianGroup& group, int max_degree, const DenseOracleLimits& limits) {
    if (group.order() > limits.max_group_order)
        throw Error(ErrorKind::ScaleExceeded, "dense oracle limited to |G| <= " + std::to_string(limits.max_group_order));
    if (max_degree > limits.max_degree)
        throw Error(ErrorKind::ScaleExceeded, "dense oracle limited to degree <= " + std::to_string(limits.max_degree));
    if (max_degree < 0) throw Error(ErrorKind::MalformedInput, "negative degree bound");

    const int n = group.dim();
    const auto chars = static_cast<std::uint32_t>(group.character_count());
    Truncation trunc(group);

    // Generators of the algebra: vertex idempotents and one arrow per
    // (vertex, variable).
    std::vector<Path> gens;
    for (std::uint32_t a = 1; a < chars; ++a) gens.push_back(Path{a, a, ExponentVector(n)});
    for (std::uint32_t a = 1; a < chars; ++a)
        for (int i = 0; i < n; ++i) {
            Character w = group.coordinate_character(i);
            Path arrow{a, group.multiply(Character{a}, group.inverse(w)).id, ExponentVector::unit(n, i)};
            if (trunc.nonzero(arrow)) gens.push_back(arrow);
        }

    std::vector<std::uint64_t> dims(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<ExponentVector> monos;
        monomials_of_degree(n, d, monos);
        // Unknowns: every nonzero basis path of degree d.
        std::vector<Path> vars;
        for (std::uint32_t a = 1; a < chars; ++a)
            for (const auto& p : monos) {
                Character w = weight_of_monomial(group, p);
                Path x{a, group.multiply(Character{a}, group.inverse(w)).id, p};
                if (trunc.nonzero(x)) vars.push_back(std::move(x));
            }
        RowSpace rows;
        for (const auto& y : gens) {
            // [z, y] = z y - y z, composing left to right along paths.
            std::map<Path, RowSpace::Row> eqs;
            for (std::size_t v = 0; v < vars.size(); ++v) {
                const Path& z = vars[v];
                if (z.target == y.source) {
                    Path out{z.source, y.target, z.p + y.p};
                    if (trunc.nonzero(out)) eqs[out][v] += 1;
                }
                if (y.target == z.source) {
                    Path out{y.source, z.target, y.p + z.p};
                    if (trunc.nonzero(out)) eqs[out][v] -= 1;
                }
            }
            for (auto& [key, row] : eqs) {
                std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
                if (!row.empty()) rows.add(std::move(row));
            }
        }
        dims[static_cast<std::size_t>(d)] = vars.size() - rows.rank();
    }
    return dims;
}

}  // namespace quotsing
