#pragma once

// Lattice-point combinatorics of the invariant semigroup ker(wt) in N^n.
//
// Everything is driven by one finite object: the down-closed set of
// "standard" exponent vectors, those m with no nonzero invariant m' <= m.
// Its members of weight w are exactly the minimal generators of the S-module
// spanned by monomials of weight w, and its invariant boundary is the Hilbert
// basis of S = k[x]^G. All of it lives in the box prod [0, o_i], where o_i is
// the order of wt(x_i).

#include <cstdint>
#include <vector>

#include "quotsing/exponent.hpp"
#include "quotsing/group.hpp"

namespace quotsing {

inline constexpr std::uint64_t kDefaultMaxBoxPoints = 100'000'000;

/// Minimal monomials of a fixed weight: an antichain under divisibility.
struct WeightedGens {
    Character weight;
    std::vector<ExponentVector> gens;
};

/// A monomial ideal of S, given by minimal invariant generators (lex sorted).
/// No generators is the zero ideal; the zero vector alone is the unit ideal.
struct InvariantIdeal {
    std::vector<ExponentVector> gens;

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const { return gens.size() == 1 && gens.front().is_zero(); }
    friend bool operator==(const InvariantIdeal&, const InvariantIdeal&) = default;
};

/// A radical monomial ideal of S as an antichain of supports: an invariant
/// monomial lies in it iff its support contains some member. {} is the zero
/// ideal and {emptyset} the unit ideal. The representation is canonical, since
/// every support is the support of some invariant monomial.
struct RadicalFamily {
    int dim = 0;
    std::vector<Support> supports;

    bool is_zero() const { return supports.empty(); }
    bool is_unit() const { return supports.size() == 1 && supports.front() == 0; }
    friend bool operator==(const RadicalFamily&, const RadicalFamily&) = default;

    static RadicalFamily zero(int dim) { return RadicalFamily{dim, {}}; }
    static RadicalFamily unit(int dim) { return RadicalFamily{dim, {Support{0}}}; }
    /// Builds a minimalized, canonically ordered family.
    static RadicalFamily from_supports(int dim, std::vector<Support> supports);
};

/// Lexicographic order on supports viewed as sorted coordinate lists.
bool support_less(Support a, Support b);

/// Antichain of the minimal elements under divisibility, sorted lexicographically.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> vs);

class MonomialTable {
public:
    explicit MonomialTable(const AbelianGroup& group, std::uint64_t max_box_points = kDefaultMaxBoxPoints);

    const AbelianGroup& group() const { return *group_; }
    int dim() const { return group_->dim(); }

    Character weight(const ExponentVector& m) const;
    bool is_invariant(const ExponentVector& m) const { return weight(m).is_trivial(); }

    /// Minimal algebra generators of S.
    const std::vector<ExponentVector>& hilbert_basis() const { return hilbert_basis_; }
    /// Minimal monomials of weight w (just the zero vector for trivial w).
    const std::vector<ExponentVector>& standard(Character w) const { return standard_[w.id]; }
    /// Minimal invariant monomials s with s >= c componentwise.
    std::vector<ExponentVector> minimal_invariant_above(const ExponentVector& c) const;

    std::size_t standard_count() const { return standard_count_; }

private:
    const AbelianGroup* group_;
    std::vector<std::vector<std::int64_t>> coord_chars_;
    std::vector<std::int64_t> radices_;
    std::vector<std::vector<ExponentVector>> standard_;
    std::vector<ExponentVector> hilbert_basis_;
    std::size_t standard_count_ = 0;
};

std::vector<ExponentVector> hilbert_basis(const AbelianGroup& group,
                                          std::uint64_t max_box_points = kDefaultMaxBoxPoints);

WeightedGens module_min_gens(const MonomialTable& table, Character w);

/// Throws NotInvariant for a non-invariant m.
bool ideal_membership(const MonomialTable& table, const InvariantIdeal& ideal, const ExponentVector& m);

/// (K : h) = {invariant s : s*h in K*S}. Throws WeightMismatch unless wt(h) = K.weight.
InvariantIdeal colon_module(const MonomialTable& table, const WeightedGens& k, const ExponentVector& h);

InvariantIdeal ideal_intersection(const MonomialTable& table, const InvariantIdeal& a, const InvariantIdeal& b);

RadicalFamily radical(int dim, const InvariantIdeal& ideal);
bool radical_member(const RadicalFamily& f, const ExponentVector& m);
RadicalFamily radical_intersect(const RadicalFamily& a, const RadicalFamily& b);
RadicalFamily radical_sum(const RadicalFamily& a, const RadicalFamily& b);
/// Ideal containment: every member of `inner` contains a member of `outer`.
bool radical_contains(const RadicalFamily& outer, const RadicalFamily& inner);
bool radical_equal(const RadicalFamily& a, const RadicalFamily& b);

}  // namespace quotsing
