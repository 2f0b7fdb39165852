#include "quotsing/center.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "quotsing/singular_locus.hpp"

namespace quotsing {

namespace {

// Exponent vectors packed into 16-bit lanes, four per word. A lane test
// ((m | H) - g) & H == H checks m_i >= g_i for four coordinates at once; it is
// exact as long as every entry stays below 2^15.
constexpr std::uint64_t kHigh = 0x8000800080008000ULL;
constexpr std::int32_t kLaneMax = 0x7fff;

struct PackedIdeal {
    int words = 0;
    std::vector<std::uint64_t> data;

    std::size_t size() const { return words == 0 ? 0 : data.size() / static_cast<std::size_t>(words); }

    bool contains(const std::uint64_t* m) const {
        const std::size_t count = size();
        const std::uint64_t* g = data.data();
        for (std::size_t k = 0; k < count; ++k, g += words) {
            bool ok = true;
            for (int w = 0; w < words; ++w)
                if ((((m[w] | kHigh) - g[w]) & kHigh) != kHigh) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
        return false;
    }
};

int packed_words(int n) { return (n + 3) / 4; }

void pack_into(const ExponentVector& v, std::uint64_t* out) {
    const int n = v.size();
    for (int w = 0; w < packed_words(n); ++w) out[w] = 0;
    for (int i = 0; i < n; ++i) {
        if (v[i] > kLaneMax) throw Error(ErrorKind::ScaleExceeded, "exponent entry exceeds 32767");
        out[i / 4] |= static_cast<std::uint64_t>(v[i]) << (16 * (i % 4));
    }
}

PackedIdeal pack_ideal(int n, const InvariantIdeal& ideal) {
    PackedIdeal p;
    p.words = packed_words(n);
    p.data.assign(ideal.gens.size() * static_cast<std::size_t>(p.words), 0);
    for (std::size_t k = 0; k < ideal.gens.size(); ++k) pack_into(ideal.gens[k], p.data.data() + k * static_cast<std::size_t>(p.words));
    return p;
}

// minimalize() with packed divisibility tests; same output.
std::vector<ExponentVector> fast_minimalize(std::vector<ExponentVector> vs, int n) {
    std::sort(vs.begin(), vs.end(), [](const ExponentVector& a, const ExponentVector& b) {
        auto da = a.degree(), db = b.degree();
        return da != db ? da < db : a < b;
    });
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    const int words = packed_words(n);
    std::vector<std::uint64_t> buf(static_cast<std::size_t>(words));
    PackedIdeal kept;
    kept.words = words;
    std::vector<ExponentVector> out;
    for (auto& v : vs) {
        pack_into(v, buf.data());
        if (kept.contains(buf.data())) continue;
        kept.data.insert(kept.data.end(), buf.begin(), buf.end());
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Sum-products of two antichains, minimalized.
std::vector<ExponentVector> product_gens(const std::vector<ExponentVector>& a, const std::vector<ExponentVector>& b) {
    std::vector<ExponentVector> out;
    out.reserve(a.size() * b.size());
    for (const auto& u : a)
        for (const auto& v : b) out.push_back(u + v);
    return fast_minimalize(std::move(out), a.empty() ? 0 : a.front().size());
}

std::vector<ExponentVector> join_all(const std::vector<ExponentVector>& a, const std::vector<ExponentVector>& b, int n) {
    std::vector<ExponentVector> joined;
    joined.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) joined.push_back(join(x, y));
    return fast_minimalize(std::move(joined), n);
}

// Invariant part of a monomial ideal of k[x].
InvariantIdeal invariant_part(const MonomialTable& table, const std::vector<ExponentVector>& gens) {
    std::vector<ExponentVector> inv;
    for (const auto& g : gens) {
        auto above = table.minimal_invariant_above(g);
        inv.insert(inv.end(), above.begin(), above.end());
    }
    return InvariantIdeal{fast_minimalize(std::move(inv), table.dim())};
}

bool in_radical(const std::vector<Support>& family, Support s) {
    return std::any_of(family.begin(), family.end(), [&](Support f) { return is_subset(f, s); });
}

std::vector<Support> missing_from(const std::vector<Support>& a, const std::vector<Support>& b) {
    std::vector<Support> out;
    for (Support s : a)
        if (std::find(b.begin(), b.end(), s) == b.end()) out.push_back(s);
    return out;
}

// Sets of characters as bitmasks over character ids.
class CharMasks {
public:
    explicit CharMasks(const AbelianGroup& group) : group_(group), count_(group.character_count()), words_((count_ + 63) / 64) {
        if (count_ <= kTableLimit) {
            mult_.resize(count_ * count_);
            for (std::uint32_t a = 0; a < count_; ++a) {
                mult_[a * count_] = a;
                for (std::uint32_t b = 1; b < count_; ++b)
                    mult_[a * count_ + b] = group.multiply(Character{a}, Character{b}).id;
            }
        }
    }

    std::size_t words() const { return words_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return mult_.empty() ? group_.multiply(Character{a}, Character{b}).id : mult_[a * count_ + b];
    }
    std::uint32_t inv(std::uint32_t a) const { return group_.inverse(Character{a}).id; }

    // Translation by c as a reusable permutation.
    struct Shift {
        std::vector<std::uint32_t> image;
        // Single-word fast path: image of each byte of a mask.
        std::vector<std::uint64_t> bytes;
    };

    Shift shift(std::uint32_t c) const {
        Shift s;
        s.image.resize(count_);
        for (std::uint32_t x = 0; x < count_; ++x) s.image[x] = mul(x, c);
        if (words_ == 1) {
            s.bytes.assign(8 * 256, 0);
            for (std::uint32_t byte = 0; byte < 8; ++byte)
                for (std::uint32_t v = 0; v < 256; ++v)
                    for (std::uint32_t b = 0; b < 8; ++b)
                        if (v >> b & 1 && byte * 8 + b < count_)
                            s.bytes[byte * 256 + v] |= std::uint64_t{1} << s.image[byte * 8 + b];
        }
        return s;
    }

    // out |= in * c
    void apply_or(const Shift& s, const std::uint64_t* in, std::uint64_t* out) const {
        if (words_ == 1) {
            std::uint64_t m = in[0], r = 0;
            for (int byte = 0; m != 0; ++byte, m >>= 8) r |= s.bytes[static_cast<std::size_t>(byte) * 256 + (m & 0xff)];
            out[0] |= r;
            return;
        }
        for (std::size_t w = 0; w < words_; ++w)
            for (std::uint64_t m = in[w]; m != 0; m &= m - 1) {
                auto x = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
                auto y = s.image[x];
                out[y / 64] |= std::uint64_t{1} << (y % 64);
            }
    }

private:
    static constexpr std::size_t kTableLimit = 1024;
    const AbelianGroup& group_;
    std::size_t count_;
    std::size_t words_;
    std::vector<std::uint32_t> mult_;
};

// Block partition over a fixed vertex set, reused across monomials.
//
// Write W(v) for the set of weights of divisors of v; divisors of a sum split,
// so W(s + h) = W(s) W(h). A monomial v of weight a^{-1} b factors through S
// iff a^{-1} is in W(v), hence an invariant s lies outside C(a, b) iff some
// h in std(a^{-1} b) has W(s) disjoint from a^{-1} W(h)^{-1}. Edges therefore
// depend on m only through W(m), and the partition is cached per W(m).
class BlockSolver {
public:
    BlockSolver(const ContractionAlgebra& algebra, const std::vector<Character>& vertices)
        : table_(algebra.table()), masks_(algebra.group()), n_(algebra.group().dim()),
          words_(packed_words(algebra.group().dim())), k_(vertices.size()), vertices_(vertices) {
        for (Character c : vertices)
            if (c.is_trivial()) throw Error(ErrorKind::MalformedInput, "the trivial character is not a vertex");
        const auto& group = algebra.group();
        const auto& ideals = algebra.ideals();
        for (Character c : vertices) {
            bar_.push_back(pack_ideal(n_, ideals.bar_ideals[c.id]));
            rad_.push_back(ideals.radicals[c.id].supports);
        }
        for (int i = 0; i < n_; ++i) {
            std::vector<CharMasks::Shift> powers;
            std::uint32_t c = 0;
            for (std::int64_t t = 1; t < group.coordinate_order(i); ++t) {
                c = masks_.mul(c, group.coordinate_character(i).id);
                powers.push_back(masks_.shift(c));
            }
            powers_.push_back(std::move(powers));
        }
        pair_lists_.resize(k_ * k_);
        pair_ready_.assign(k_ * k_, false);
        packed_.assign(static_cast<std::size_t>(words_), 0);
        parent_.resize(k_);
        block_.resize(k_);
        w_.resize(masks_.words());
        scratch_.resize(masks_.words());
    }

    // Fills block_ (-1 inactive) and live flags; returns the block count.
    int solve(const ExponentVector& m) {
        pack_into(m, packed_.data());
        const Support s = m.support();
        divisor_weights(m, w_);
        const std::vector<std::uint32_t>& root = partition(w_);
        live_.clear();
        int blocks = 0;
        std::fill(label_scratch(), label_scratch() + k_, -1);
        for (std::size_t v = 0; v < k_; ++v) {
            block_[v] = -1;
            // \bar I_a lies in every symmetric conductor at a, so inactive
            // vertices are isolated in the partition.
            if (bar_[v].contains(packed_.data())) continue;
            int& label = label_scratch()[root[v]];
            if (label < 0) {
                label = blocks++;
                live_.push_back(false);
            }
            block_[v] = label;
            if (!live_[static_cast<std::size_t>(label)] && !in_radical(rad_[v], s)) live_[static_cast<std::size_t>(label)] = true;
        }
        return blocks;
    }

    const std::vector<int>& block() const { return block_; }
    const std::vector<bool>& live() const { return live_; }
    int live_count() const { return static_cast<int>(std::count(live_.begin(), live_.end(), true)); }

private:
    int* label_scratch() {
        labels_.resize(k_);
        return labels_.data();
    }

    void divisor_weights(const ExponentVector& v, std::vector<std::uint64_t>& out) {
        std::fill(out.begin(), out.end(), 0);
        out[0] = 1;  // the trivial character
        for (int i = 0; i < v.size(); ++i) {
            const auto& powers = powers_[static_cast<std::size_t>(i)];
            std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(v[i]), powers.size());
            if (top == 0) continue;
            scratch_ = out;
            for (std::size_t t = 0; t < top; ++t) masks_.apply_or(powers[t], scratch_.data(), out.data());
        }
    }

    // Minimal masks B: the pair is joined at m iff W(m) misses some B.
    const std::vector<std::vector<std::uint64_t>>& pair_list(std::size_t a, std::size_t b) {
        std::size_t key = std::min(a, b) * k_ + std::max(a, b);
        if (pair_ready_[key]) return pair_lists_[key];
        std::vector<std::vector<std::uint64_t>> all;
        std::vector<std::uint64_t> wh(masks_.words());
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            std::uint32_t xinv = masks_.inv(vertices_[x].id);
            std::uint32_t hom = masks_.mul(xinv, vertices_[y].id);
            for (const auto& h : table_.standard(Character{hom})) {
                divisor_weights(h, wh);
                std::vector<std::uint64_t> bad(masks_.words(), 0);
                for (std::size_t w = 0; w < wh.size(); ++w)
                    for (std::uint64_t mm = wh[w]; mm != 0; mm &= mm - 1) {
                        auto c = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(mm)));
                        auto z = masks_.mul(xinv, masks_.inv(c));
                        bad[z / 64] |= std::uint64_t{1} << (z % 64);
                    }
                all.push_back(std::move(bad));
            }
        }
        auto count = [](const std::vector<std::uint64_t>& v) {
            int c = 0;
            for (auto x : v) c += std::popcount(x);
            return c;
        };
        std::sort(all.begin(), all.end(), [&](const auto& p, const auto& q) { return count(p) < count(q); });
        std::vector<std::vector<std::uint64_t>> kept;
        for (auto& cand : all) {
            bool redundant = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
                for (std::size_t w = 0; w < k.size(); ++w)
                    if ((k[w] & ~cand[w]) != 0) return false;
                return true;
            });
            if (!redundant) kept.push_back(std::move(cand));
        }
        pair_ready_[key] = true;
        pair_lists_[key] = std::move(kept);
        return pair_lists_[key];
    }

    bool joined(std::size_t a, std::size_t b, const std::vector<std::uint64_t>& w) {
        for (const auto& bad : pair_list(a, b)) {
            bool disjoint = true;
            for (std::size_t i = 0; i < w.size() && disjoint; ++i)
                if ((w[i] & bad[i]) != 0) disjoint = false;
            if (disjoint) return true;
        }
        return false;
    }

    std::size_t find(std::size_t v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }

    // Component root of every vertex for the graph at divisor-weight set w.
    const std::vector<std::uint32_t>& partition(const std::vector<std::uint64_t>& w) {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        for (std::size_t v = 0; v < k_; ++v) parent_[v] = v;
        for (std::size_t a = 0; a < k_; ++a)
            for (std::size_t b = a + 1; b < k_; ++b) {
                std::size_t ra = find(a), rb = find(b);
                if (ra == rb) continue;
                if (joined(a, b, w)) parent_[std::max(ra, rb)] = std::min(ra, rb);
            }
        std::vector<std::uint32_t> root(k_);
        for (std::size_t v = 0; v < k_; ++v) root[v] = static_cast<std::uint32_t>(find(v));
        return cache_.emplace(w, std::move(root)).first->second;
    }

    const MonomialTable& table_;
    CharMasks masks_;
    int n_;
    int words_;
    std::size_t k_;
    std::vector<Character> vertices_;
    std::vector<PackedIdeal> bar_;
    std::vector<std::vector<Support>> rad_;
    std::vector<std::vector<CharMasks::Shift>> powers_;
    std::vector<std::vector<std::vector<std::uint64_t>>> pair_lists_;
    std::vector<bool> pair_ready_;
    std::map<std::vector<std::uint64_t>, std::vector<std::uint32_t>> cache_;
    std::vector<std::uint64_t> packed_;
    std::vector<std::uint64_t> w_;
    std::vector<std::uint64_t> scratch_;
    std::vector<std::size_t> parent_;
    std::vector<int> block_;
    std::vector<int> labels_;
    std::vector<bool> live_;
};

bool is_subset_of(const std::vector<Character>& t, const std::vector<Character>& u) {
    return std::all_of(t.begin(), t.end(), [&](Character c) { return std::find(u.begin(), u.end(), c) != u.end(); });
}

std::vector<std::size_t> positions_in(const std::vector<Character>& t, const std::vector<Character>& u) {
    std::vector<std::size_t> pos;
    for (Character c : t) pos.push_back(static_cast<std::size_t>(std::find(u.begin(), u.end(), c) - u.begin()));
    return pos;
}

// Map T-blocks to T'-blocks at one monomial; false when some T-block straddles.
bool block_map(const std::vector<int>& small, const std::vector<bool>& small_live, const std::vector<int>& big,
               const std::vector<bool>& big_live, const std::vector<std::size_t>& pos, std::vector<int>& out) {
    out.assign(small_live.size(), -1);
    for (std::size_t v = 0; v < small.size(); ++v) {
        int b = small[v];
        int target = big[pos[v]];
        if ((b < 0) != (target < 0)) return false;
        if (b < 0) continue;
        auto bi = static_cast<std::size_t>(b);
        if (out[bi] >= 0 && out[bi] != target) return false;
        out[bi] = target;
        if (small_live[bi] && !big_live[static_cast<std::size_t>(target)]) return false;
    }
    return true;
}

}  // namespace

InvariantIdeal bar_ideal(const MonomialTable& table, Character chi) {
    const auto& g = table.group();
    return InvariantIdeal{product_gens(table.standard(g.inverse(chi)), table.standard(chi))};
}

CharIdealTable char_ideal_table(const MonomialTable& table) {
    CharIdealTable t;
    const auto count = table.group().character_count();
    t.bar_ideals.reserve(count);
    t.radicals.reserve(count);
    for (std::uint32_t c = 0; c < count; ++c) {
        Character chi{c};
        Character inv = table.group().inverse(chi);
        // \bar I_chi = \bar I_{chi^{-1}}.
        if (inv.id < c) {
            t.bar_ideals.push_back(t.bar_ideals[inv.id]);
            t.radicals.push_back(t.radicals[inv.id]);
            continue;
        }
        t.bar_ideals.push_back(bar_ideal(table, chi));
        t.radicals.push_back(radical(table.dim(), t.bar_ideals.back()));
    }
    return t;
}

RadicalFamily reduced_center_family(const AbelianGroup& group, const CharIdealTable& ideals) {
    RadicalFamily acc = RadicalFamily::unit(group.dim());
    for (std::size_t c = 1; c < ideals.radicals.size(); ++c) acc = radical_intersect(acc, ideals.radicals[c]);
    return acc;
}

RadicalFamily reduced_center_family(const MonomialTable& table) {
    return reduced_center_family(table.group(), char_ideal_table(table));
}

ReconstructionReport verify_reconstruction(const AbelianGroup& group, const CharIdealTable& ideals) {
    ReconstructionReport r;
    r.center_side = reduced_center_family(group, ideals);
    r.locus_side = singular_locus_cst(group);
    r.equal = radical_equal(r.center_side, r.locus_side);
    r.only_center = missing_from(r.center_side.supports, r.locus_side.supports);
    r.only_locus = missing_from(r.locus_side.supports, r.center_side.supports);
    return r;
}

ReconstructionReport verify_reconstruction(const MonomialTable& table) {
    return verify_reconstruction(table.group(), char_ideal_table(table));
}

bool idem_spli_check(const AbelianGroup& group, const CharIdealTable& ideals) {
    RadicalFamily locus = singular_locus_cst(group);
    return std::all_of(ideals.radicals.begin(), ideals.radicals.end(),
                       [&](const RadicalFamily& f) { return radical_contains(f, locus); });
}

bool idem_spli_check(const MonomialTable& table) { return idem_spli_check(table.group(), char_ideal_table(table)); }

WeightedGens factoring_module(const MonomialTable& table, Character chi, Character chi_prime) {
    const auto& g = table.group();
    Character inv = g.inverse(chi);
    return WeightedGens{g.multiply(inv, chi_prime), product_gens(table.standard(inv), table.standard(chi_prime))};
}

namespace {

// The conductor as an ideal of k[x], before passing to invariants:
// s*h lies in K iff s >= (u - h)^+ for some generator u. Intersecting in k[x]
// and taking invariants once at the end is much cheaper than intersecting
// in S at every step.
std::vector<ExponentVector> conductor_cover(const MonomialTable& table, Character chi, Character chi_prime) {
    const int n = table.dim();
    std::vector<ExponentVector> acc{ExponentVector(n)};
    if (chi == chi_prime) return acc;
    WeightedGens k = factoring_module(table, chi, chi_prime);
    for (const auto& h : table.standard(k.weight)) {
        std::vector<ExponentVector> colon;
        colon.reserve(k.gens.size());
        for (const auto& u : k.gens) colon.push_back(positive_difference(u, h));
        acc = join_all(acc, fast_minimalize(std::move(colon), n), n);
        if (acc.empty()) break;
    }
    return acc;
}

}  // namespace

InvariantIdeal conductor(const MonomialTable& table, Character chi, Character chi_prime) {
    return invariant_part(table, conductor_cover(table, chi, chi_prime));
}

ConductorTable::ConductorTable(const MonomialTable& table) : count_(table.group().character_count()) {
    const int n = table.dim();
    ids_.assign(count_ * count_, 0);
    std::map<std::vector<ExponentVector>, std::uint32_t> seen;
    auto intern = [&](InvariantIdeal ideal) {
        auto [it, fresh] = seen.emplace(ideal.gens, static_cast<std::uint32_t>(unique_.size()));
        if (fresh) unique_.push_back(std::move(ideal));
        return it->second;
    };
    std::uint32_t unit = intern(InvariantIdeal{{ExponentVector(n)}});
    for (std::size_t a = 0; a < count_; ++a) {
        ids_[a * count_ + a] = unit;
        for (std::size_t b = a + 1; b < count_; ++b) {
            std::uint32_t id = unit;
            if (a != 0) {
                Character ca{static_cast<std::uint32_t>(a)}, cb{static_cast<std::uint32_t>(b)};
                id = intern(invariant_part(table, join_all(conductor_cover(table, ca, cb), conductor_cover(table, cb, ca), n)));
            }
            ids_[a * count_ + b] = ids_[b * count_ + a] = id;
        }
    }
}

int MonomialBlocks::live_count() const { return static_cast<int>(std::count(live.begin(), live.end(), true)); }

ContractionAlgebra::ContractionAlgebra(const MonomialTable& table) : table_(&table), ideals_(char_ideal_table(table)) {}

const ConductorTable& ContractionAlgebra::conductors() const {
    std::call_once(conductors_once_, [this] { conductors_ = std::make_unique<ConductorTable>(*table_); });
    return *conductors_;
}

std::vector<Character> ContractionAlgebra::nontrivial_characters() const {
    std::vector<Character> out;
    for (std::uint32_t c = 1; c < group().character_count(); ++c) out.push_back(Character{c});
    return out;
}

MonomialBlocks ContractionAlgebra::blocks_at(const ExponentVector& m, const std::vector<Character>& vertices) const {
    if (!table_->is_invariant(m)) throw Error(ErrorKind::NotInvariant, "monomial is not invariant");
    BlockSolver solver(*this, vertices);
    solver.solve(m);
    return MonomialBlocks{m, solver.block(), solver.live()};
}

CenterHilbert ContractionAlgebra::center_hilbert(int max_degree, const CenterOptions& options) const {
    return subsystem_center(nontrivial_characters(), max_degree, options);
}

CenterHilbert ContractionAlgebra::subsystem_center(const std::vector<Character>& vertices, int max_degree,
                                                   const CenterOptions& options) const {
    if (max_degree < 0) throw Error(ErrorKind::MalformedInput, "negative degree bound");
    if (max_degree > kLaneMax) throw Error(ErrorKind::ScaleExceeded, "degree bound exceeds 32767");
    const bool full = vertices.size() + 1 == group().character_count() && is_subset_of(nontrivial_characters(), vertices);
    if (vertices.empty() && !group().is_trivial()) throw Error(ErrorKind::EmptySubset, "empty vertex set");

    CenterHilbert out;
    out.max_degree = max_degree;
    const auto slots = static_cast<std::size_t>(max_degree) + 1;
    out.dim_z.assign(slots, 0);
    out.dim_r.assign(slots, 0);
    out.invariant_count.assign(slots, 0);
    out.outside_count.assign(slots, 0);

    std::vector<std::vector<Support>> rads;
    for (Character c : vertices) rads.push_back(ideals_.radicals[c.id].supports);

    BlockSolver solver(*this, vertices);
    for_each_invariant(*table_, max_degree, [&](const ExponentVector& m) {
        const auto d = static_cast<std::size_t>(m.degree());
        int blocks = solver.solve(m);
        int live = solver.live_count();
        Support s = m.support();
        bool outside = std::any_of(rads.begin(), rads.end(), [&](const auto& f) { return !in_radical(f, s); });
        ++out.invariant_count[d];
        if (outside) ++out.outside_count[d];
        out.dim_z[d] += static_cast<std::uint64_t>(blocks);
        out.dim_r[d] += static_cast<std::uint64_t>(live);
        if (full && (live > 1 || (live == 1) != outside)) {
            ++out.theo22_violations;
            if (options.throw_on_violation)
                throw Error(ErrorKind::Theo22Violation, "live blocks disagree with the reduced center at a monomial");
        }
        if (options.record_blocks) out.blocks.push_back(MonomialBlocks{m, solver.block(), solver.live()});
    });
    if (options.record_blocks)
        std::stable_sort(out.blocks.begin(), out.blocks.end(), [](const MonomialBlocks& a, const MonomialBlocks& b) {
            auto da = a.monomial.degree(), db = b.monomial.degree();
            return da != db ? da < db : a.monomial < b.monomial;
        });
    return out;
}

bool ContractionAlgebra::restriction_check(const std::vector<Character>& t, const std::vector<Character>& t_prime,
                                           int max_degree) const {
    if (t.empty() || t_prime.empty()) throw Error(ErrorKind::EmptySubset, "empty vertex set");
    if (!is_subset_of(t, t_prime)) return false;
    BlockSolver small(*this, t), big(*this, t_prime);
    auto pos = positions_in(t, t_prime);
    bool ok = true;
    std::vector<int> map;
    for_each_invariant(*table_, max_degree, [&](const ExponentVector& m) {
        if (!ok) return;
        small.solve(m);
        big.solve(m);
        if (!block_map(small.block(), small.live(), big.block(), big.live(), pos, map)) ok = false;
    });
    return ok;
}

bool ContractionAlgebra::cocycle_check(const std::vector<Character>& t, const std::vector<Character>& t_prime,
                                       const std::vector<Character>& t_second, int max_degree) const {
    if (t.empty() || t_prime.empty() || t_second.empty()) throw Error(ErrorKind::EmptySubset, "empty vertex set");
    if (!is_subset_of(t, t_prime) || !is_subset_of(t_prime, t_second)) return false;
    BlockSolver s0(*this, t), s1(*this, t_prime), s2(*this, t_second);
    auto p01 = positions_in(t, t_prime), p12 = positions_in(t_prime, t_second), p02 = positions_in(t, t_second);
    bool ok = true;
    std::vector<int> m01, m12, m02;
    for_each_invariant(*table_, max_degree, [&](const ExponentVector& m) {
        if (!ok) return;
        s0.solve(m);
        s1.solve(m);
        s2.solve(m);
        if (!block_map(s0.block(), s0.live(), s1.block(), s1.live(), p01, m01) ||
            !block_map(s1.block(), s1.live(), s2.block(), s2.live(), p12, m12) ||
            !block_map(s0.block(), s0.live(), s2.block(), s2.live(), p02, m02)) {
            ok = false;
            return;
        }
        for (std::size_t b = 0; b < m02.size(); ++b)
            if (m02[b] >= 0 && m12[static_cast<std::size_t>(m01[b])] != m02[b]) ok = false;
    });
    return ok;
}

std::vector<ExponentVector> invariant_monomials(const MonomialTable& table, int max_degree) {
    std::vector<ExponentVector> out;
    for_each_invariant(table, max_degree, [&](const ExponentVector& m) { out.push_back(m); });
    std::sort(out.begin(), out.end(), [](const ExponentVector& a, const ExponentVector& b) {
        auto da = a.degree(), db = b.degree();
        return da != db ? da < db : a < b;
    });
    return out;
}

}  // namespace quotsing
