#include "quotsing/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "json.hpp"

namespace quotsing {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

WeightVector add_mod(const WeightVector& a, const WeightVector& b, std::int64_t m) {
    WeightVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % m;
    return r;
}

// Integer matrix in row-major order; small (at most log2 |G| square).
using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix identity(std::size_t k) {
    Matrix m(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

// Smith normal form U*A*V = D. Only the column transform V and its inverse
// are tracked; the diagonal of A is left holding d_1 | d_2 | ...
struct ColumnTransform {
    Matrix v;
    Matrix v_inv;
};

ColumnTransform smith_normal_form(Matrix& a) {
    const std::size_t k = a.size();
    ColumnTransform t{identity(k), identity(k)};

    auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        // col_dst -= q * col_src
        for (std::size_t i = 0; i < k; ++i) a[i][dst] -= q * a[i][src];
        for (std::size_t i = 0; i < k; ++i) t.v[i][dst] -= q * t.v[i][src];
        for (std::size_t j = 0; j < k; ++j) t.v_inv[src][j] += q * t.v_inv[dst][j];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < k; ++i) std::swap(a[i][x], a[i][y]);
        for (std::size_t i = 0; i < k; ++i) std::swap(t.v[i][x], t.v[i][y]);
        std::swap(t.v_inv[x], t.v_inv[y]);
    };
    auto col_negate = [&](std::size_t x) {
        for (std::size_t i = 0; i < k; ++i) a[i][x] = -a[i][x];
        for (std::size_t i = 0; i < k; ++i) t.v[i][x] = -t.v[i][x];
        for (auto& e : t.v_inv[x]) e = -e;
    };

    for (std::size_t p = 0; p < k; ++p) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t bi = k, bj = k;
            for (std::size_t i = p; i < k; ++i)
                for (std::size_t j = p; j < k; ++j)
                    if (a[i][j] != 0 && (bi == k || std::abs(a[i][j]) < std::abs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == k) return t;
            std::swap(a[p], a[bi]);
            col_swap(p, bj);

            bool clean = true;
            for (std::size_t i = p + 1; i < k; ++i) {
                std::int64_t q = a[i][p] / a[p][p];
                for (std::size_t j = p; j < k; ++j) a[i][j] -= q * a[p][j];
                if (a[i][p] != 0) clean = false;
            }
            for (std::size_t j = p + 1; j < k; ++j) {
                col_axpy(j, p, a[p][j] / a[p][p]);
                if (a[p][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce divisibility of the trailing block by the pivot.
            bool divides = true;
            for (std::size_t i = p + 1; i < k && divides; ++i)
                for (std::size_t j = p + 1; j < k; ++j)
                    if (a[i][j] % a[p][p] != 0) {
                        for (std::size_t c = p; c < k; ++c) a[p][c] += a[i][c];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a[p][p] < 0) col_negate(p);
    }
    return t;
}

}  // namespace

AbelianStructure abelian_structure(std::span<const WeightVector> elements, std::int64_t modulus) {
    AbelianStructure out;
    out.coords.assign(elements.size(), {});
    if (elements.empty()) return out;
    const std::size_t n = elements.front().size();

    // Polycyclic series: generators g_1..g_k with relative orders c_j such that
    // every element is uniquely sum a_j g_j with 0 <= a_j < c_j.
    std::vector<WeightVector> gens;
    std::vector<std::int64_t> rel_order;
    std::vector<std::vector<std::int64_t>> rel_exps;
    std::map<WeightVector, std::vector<std::int64_t>> span;
    span.emplace(WeightVector(n, 0), std::vector<std::int64_t>{});

    for (const auto& x : elements) {
        if (span.count(x)) continue;
        std::int64_t c = 1;
        WeightVector y = x;
        while (!span.count(y)) {
            y = add_mod(y, x, modulus);
            ++c;
        }
        rel_exps.push_back(span.at(y));
        rel_order.push_back(c);

        std::map<WeightVector, std::vector<std::int64_t>> next;
        for (const auto& [s, e] : span) {
            WeightVector cur = s;
            for (std::int64_t t = 0; t < c; ++t) {
                auto exps = e;
                exps.push_back(t);
                next.emplace(cur, std::move(exps));
                cur = add_mod(cur, x, modulus);
            }
        }
        span = std::move(next);
        gens.push_back(x);
    }

    const std::size_t k = gens.size();
    Matrix rel(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        rel[j][j] = rel_order[j];
        for (std::size_t i = 0; i < rel_exps[j].size(); ++i) rel[j][i] -= rel_exps[j][i];
    }
    ColumnTransform t = smith_normal_form(rel);

    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < k; ++j)
        if (rel[j][j] > 1) kept.push_back(j);

    std::map<WeightVector, std::size_t> index;
    for (std::size_t e = 0; e < elements.size(); ++e) index.emplace(elements[e], e);

    for (std::size_t j : kept) {
        out.invariants.push_back(rel[j][j]);
        WeightVector h(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
            std::int64_t c = mod(t.v_inv[j][i], modulus);
            for (std::size_t d = 0; d < n; ++d) h[d] = mod(h[d] + c * gens[i][d], modulus);
        }
        out.basis.push_back(index.at(h));
    }

    for (const auto& [w, exps] : span) {
        std::vector<std::int64_t> y;
        y.reserve(kept.size());
        for (std::size_t j : kept) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < k; ++i) s = mod(s + exps[i] * t.v[i][j], rel[j][j]);
            y.push_back(s);
        }
        out.coords[index.at(w)] = std::move(y);
    }
    return out;
}

GroupSpec parse_group_spec(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedInput, e.what());
    }
    GroupSpec spec;
    try {
        if (!doc.is_object() || !doc.contains("dim") || !doc.contains("generators"))
            throw Error(ErrorKind::MalformedInput, "expected an object with \"dim\" and \"generators\"");
        if (!doc["dim"].is_number_integer()) throw Error(ErrorKind::MalformedInput, "\"dim\" must be an integer");
        spec.dim = doc["dim"].get<int>();
        if (spec.dim < 1 || spec.dim > kMaxDim)
            throw Error(ErrorKind::MalformedInput, "\"dim\" must lie in [1, 64]");
        if (!doc["generators"].is_array()) throw Error(ErrorKind::MalformedInput, "\"generators\" must be an array");
        for (const auto& g : doc["generators"]) {
            if (!g.is_object() || !g.contains("order") || !g.contains("weights") ||
                !g["order"].is_number_integer() || !g["weights"].is_array())
                throw Error(ErrorKind::MalformedInput, "generator needs integer \"order\" and array \"weights\"");
            GeneratorSpec gen;
            gen.order = g["order"].get<std::int64_t>();
            if (gen.order <= 0) throw Error(ErrorKind::NonPositiveOrder, "generator order " + std::to_string(gen.order));
            if (g["weights"].size() != static_cast<std::size_t>(spec.dim))
                throw Error(ErrorKind::DimensionMismatch, "generator has " + std::to_string(g["weights"].size()) +
                                                              " weights, expected " + std::to_string(spec.dim));
            std::int64_t sum = 0;
            for (const auto& w : g["weights"]) {
                if (!w.is_number_integer()) throw Error(ErrorKind::MalformedInput, "weights must be integers");
                gen.weights.push_back(mod(w.get<std::int64_t>(), gen.order));
                sum = mod(sum + gen.weights.back(), gen.order);
            }
            if (sum != 0)
                throw Error(ErrorKind::NotSpecialLinear,
                            "weight sum " + std::to_string(sum) + " is nonzero mod " + std::to_string(gen.order));
            spec.generators.push_back(std::move(gen));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedInput, e.what());
    }
    return spec;
}

std::string group_spec_to_json(const GroupSpec& spec) {
    nlohmann::json doc;
    doc["dim"] = spec.dim;
    doc["generators"] = nlohmann::json::array();
    for (const auto& g : spec.generators) doc["generators"].push_back({{"order", g.order}, {"weights", g.weights}});
    if (!spec.special_linear) doc["sl"] = false;
    return doc.dump();
}

AbelianGroup build_group(const GroupSpec& spec, std::size_t max_order) {
    if (spec.dim < 1 || spec.dim > kMaxDim) throw Error(ErrorKind::MalformedInput, "dimension out of range");
    const auto n = static_cast<std::size_t>(spec.dim);

    // Reduce each generator to its true order before taking the lcm.
    std::vector<GeneratorSpec> gens;
    std::int64_t exponent = 1;
    for (const auto& g : spec.generators) {
        if (g.order <= 0) throw Error(ErrorKind::NonPositiveOrder, "generator order " + std::to_string(g.order));
        if (g.weights.size() != n) throw Error(ErrorKind::DimensionMismatch, "generator weight count differs from dim");
        std::int64_t gcd = g.order;
        std::int64_t sum = 0;
        for (auto w : g.weights) {
            gcd = std::gcd(gcd, mod(w, g.order));
            sum += mod(w, g.order);
        }
        if (spec.special_linear && sum % g.order != 0)
            throw Error(ErrorKind::NotSpecialLinear, "generator weights do not sum to 0 mod order");
        GeneratorSpec r;
        r.order = g.order / gcd;
        for (auto w : g.weights) r.weights.push_back(mod(w, g.order) / gcd);
        if (r.order == 1) continue;
        if (static_cast<std::size_t>(r.order) > max_order)
            throw Error(ErrorKind::GroupTooLarge, "generator of order " + std::to_string(r.order));
        exponent = std::lcm(exponent, r.order);
        if (static_cast<std::size_t>(exponent) > max_order)
            throw Error(ErrorKind::GroupTooLarge, "group exponent exceeds " + std::to_string(max_order));
        gens.push_back(std::move(r));
    }

    std::vector<WeightVector> gen_vectors;
    for (const auto& g : gens) {
        WeightVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = g.weights[i] * (exponent / g.order);
        gen_vectors.push_back(std::move(v));
    }

    std::set<WeightVector> seen{WeightVector(n, 0)};
    std::vector<WeightVector> frontier{WeightVector(n, 0)};
    while (!frontier.empty()) {
        std::vector<WeightVector> next;
        for (const auto& x : frontier)
            for (const auto& g : gen_vectors) {
                auto y = add_mod(x, g, exponent);
                if (seen.insert(y).second) {
                    if (seen.size() > max_order)
                        throw Error(ErrorKind::GroupTooLarge, "group order exceeds " + std::to_string(max_order));
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }

    AbelianGroup G;
    G.dim_ = spec.dim;
    G.exponent_ = exponent;
    G.special_linear_ = true;
    G.elements_.assign(seen.begin(), seen.end());
    for (const auto& w : G.elements_) {
        std::int64_t s = 0;
        for (auto x : w) s += x;
        if (s % exponent != 0) G.special_linear_ = false;
    }
    for (std::uint32_t i = 0; i < G.elements_.size(); ++i) G.index_.emplace(G.elements_[i], i);
    G.structure_ = abelian_structure(G.elements_, exponent);

    const std::size_t order = G.elements_.size();
    G.inverse_.resize(order);
    for (std::uint32_t c = 0; c < order; ++c) {
        auto co = G.coords(Character{c});
        for (std::size_t j = 0; j < co.size(); ++j) co[j] = mod(-co[j], G.structure_.invariants[j]);
        G.inverse_[c] = G.character_from_coords(co);
    }

    const auto& inv = G.structure_.invariants;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> c(inv.size());
        for (std::size_t j = 0; j < inv.size(); ++j) {
            std::int64_t value = G.elements_[G.structure_.basis[j]][i];
            c[j] = value / (exponent / inv[j]);
        }
        Character chi = G.character_from_coords(c);
        G.coordinate_chars_.push_back(chi);

        std::int64_t o = 1;
        for (Character acc = chi; !acc.is_trivial(); acc = G.multiply(acc, chi)) ++o;
        G.coordinate_orders_.push_back(o);

        std::vector<std::uint32_t> step(order);
        for (std::uint32_t a = 0; a < order; ++a) step[a] = G.multiply(Character{a}, chi).id;
        G.steps_.push_back(std::move(step));
    }
    return G;
}

std::int64_t AbelianGroup::index_of(const WeightVector& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

Character AbelianGroup::character_from_coords(std::span<const std::int64_t> c) const {
    std::uint64_t id = 0;
    const auto& inv = structure_.invariants;
    for (std::size_t j = 0; j < inv.size(); ++j) id = id * static_cast<std::uint64_t>(inv[j]) + static_cast<std::uint64_t>(mod(c[j], inv[j]));
    return Character{static_cast<std::uint32_t>(id)};
}

std::vector<std::int64_t> AbelianGroup::coords(Character chi) const {
    const auto& inv = structure_.invariants;
    std::vector<std::int64_t> c(inv.size());
    std::uint64_t id = chi.id;
    for (std::size_t j = inv.size(); j-- > 0;) {
        c[j] = static_cast<std::int64_t>(id % static_cast<std::uint64_t>(inv[j]));
        id /= static_cast<std::uint64_t>(inv[j]);
    }
    return c;
}

Character AbelianGroup::multiply(Character a, Character b) const {
    auto ca = coords(a);
    auto cb = coords(b);
    for (std::size_t j = 0; j < ca.size(); ++j) ca[j] += cb[j];
    return character_from_coords(ca);
}

std::int64_t AbelianGroup::evaluate(Character chi, std::uint32_t element) const {
    auto c = coords(chi);
    const auto& y = structure_.coords[element];
    std::int64_t v = 0;
    for (std::size_t j = 0; j < c.size(); ++j) v = mod(v + c[j] * y[j] * (exponent_ / structure_.invariants[j]), exponent_);
    return v;
}

Subgroup AbelianGroup::whole() const {
    Subgroup s;
    s.members.resize(elements_.size());
    std::iota(s.members.begin(), s.members.end(), 0u);
    return s;
}

GroupSpec AbelianGroup::to_spec() const {
    GroupSpec spec;
    spec.dim = dim_;
    spec.special_linear = special_linear_;
    for (std::size_t e = 1; e < elements_.size(); ++e)
        spec.generators.push_back(GeneratorSpec{exponent_, elements_[e]});
    return spec;
}

Character weight_of_monomial(const AbelianGroup& group, const ExponentVector& m) {
    std::vector<std::int64_t> c(group.invariant_factors().size(), 0);
    for (int i = 0; i < group.dim(); ++i) {
        if (m[i] == 0) continue;
        auto ci = group.coords(group.coordinate_character(i));
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += ci[j] * m[i];
    }
    return group.character_from_coords(c);
}

Subgroup pointwise_stabilizer(const AbelianGroup& group, Support coords) {
    Subgroup s;
    for (std::uint32_t e = 0; e < group.order(); ++e) {
        const auto& w = group.element(e);
        bool fixes = true;
        for (int i = 0; i < group.dim() && fixes; ++i)
            if ((coords >> i & 1) && w[static_cast<std::size_t>(i)] != 0) fixes = false;
        if (fixes) s.members.push_back(e);
    }
    return s;
}

Support fixed_support(const AbelianGroup& group, const Subgroup& sub) {
    Support fixed = group.dim() == 64 ? ~Support{0} : (Support{1} << group.dim()) - 1;
    for (auto e : sub.members) {
        const auto& w = group.element(e);
        for (int i = 0; i < group.dim(); ++i)
            if (w[static_cast<std::size_t>(i)] != 0) fixed &= ~(Support{1} << i);
    }
    return fixed;
}

AbelianStructure subgroup_structure(const AbelianGroup& group, const Subgroup& sub) {
    std::vector<WeightVector> elems;
    elems.reserve(sub.members.size());
    for (auto e : sub.members) elems.push_back(group.element(e));
    return abelian_structure(elems, group.exponent());
}

std::vector<std::int64_t> restrict_character(const AbelianGroup& group, Character chi, const Subgroup& sub) {
    return restrict_character(group, chi, sub, subgroup_structure(group, sub));
}

std::vector<std::int64_t> restrict_character(const AbelianGroup& group, Character chi, const Subgroup& sub,
                                             const AbelianStructure& h) {
    std::vector<std::int64_t> out;
    for (std::size_t j = 0; j < h.invariants.size(); ++j) {
        std::int64_t v = group.evaluate(chi, sub.members[h.basis[j]]);
        out.push_back(v / (group.exponent() / h.invariants[j]));
    }
    return out;
}

bool is_trivial_on(const AbelianGroup& group, Character chi, const Subgroup& sub) {
    return std::all_of(sub.members.begin(), sub.members.end(),
                       [&](std::uint32_t e) { return group.evaluate(chi, e) == 0; });
}

GroupSpec quotient_group_on(const AbelianGroup& group, Support coords) {
    Subgroup h = pointwise_stabilizer(group, coords);
    if (fixed_support(group, h) != coords)
        throw Error(ErrorKind::NotClosed, "coordinate set is not the fixed support of its stabilizer");
    std::vector<int> idx;
    for (int i = 0; i < group.dim(); ++i)
        if (coords >> i & 1) idx.push_back(i);

    std::set<WeightVector> restricted;
    for (const auto& w : group.elements()) {
        WeightVector r;
        for (int i : idx) r.push_back(w[static_cast<std::size_t>(i)]);
        restricted.insert(std::move(r));
    }
    GroupSpec spec;
    spec.dim = static_cast<int>(idx.size());
    spec.special_linear = true;
    for (const auto& r : restricted) {
        std::int64_t s = 0;
        for (auto x : r) s += x;
        if (s % group.exponent() != 0) spec.special_linear = false;
        spec.generators.push_back(GeneratorSpec{group.exponent(), r});
    }
    return spec;
}

std::vector<int> support_to_list(Support s) {
    std::vector<int> out;
    for (int i = 0; i < kMaxDim; ++i)
        if (s >> i & 1) out.push_back(i + 1);
    return out;
}

}  // namespace quotsing
