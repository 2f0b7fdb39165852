#pragma once

// Finite abelian subgroups of SL(n) acting diagonally on k^n.
//
// A group element is stored as its weight vector w in (Z/L)^n, L the
// exponent of the group; it acts by x_i -> zeta_L^{w_i} x_i. Elements ARE
// their weight vectors, so every group built here acts faithfully and no
// faithfulness check exists.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quotsing/error.hpp"
#include "quotsing/exponent.hpp"

namespace quotsing {

inline constexpr std::size_t kDefaultMaxGroupOrder = 10'000;

struct GeneratorSpec {
    std::int64_t order = 1;
    std::vector<std::int64_t> weights;

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct GroupSpec {
    int dim = 0;
    std::vector<GeneratorSpec> generators;
    /// False only for specs produced by quotient_group_on that left SL(n).
    bool special_linear = true;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Parses the JSON group spec `{"dim": n, "generators": [{"order": d, "weights": [...]}]}`.
/// Weights are reduced into [0, order).
GroupSpec parse_group_spec(std::string_view text);

/// Canonical single-line JSON for a spec (sorted keys).
std::string group_spec_to_json(const GroupSpec& spec);

using WeightVector = std::vector<std::int64_t>;

/// An element of the dual group, indexed by its Smith-normal-form coordinates
/// in mixed radix (first coordinate most significant). Id 0 is the trivial
/// character and id order equals lexicographic order on coordinates.
struct Character {
    std::uint32_t id = 0;

    bool is_trivial() const { return id == 0; }
    friend auto operator<=>(const Character&, const Character&) = default;
};

/// Invariant-factor decomposition of a finite abelian group given by its
/// element list: G ~= Z/s_1 + ... + Z/s_r with s_1 | s_2 | ... and all s_j > 1.
struct AbelianStructure {
    std::vector<std::int64_t> invariants;
    /// basis[j] is the index (into the element list) of the generator of Z/s_j.
    std::vector<std::size_t> basis;
    /// coords[e] are the coordinates of element e.
    std::vector<std::vector<std::int64_t>> coords;
};

/// Computes the structure of the group formed by `elements` inside (Z/modulus)^n.
/// The list must be closed under addition and contain zero.
AbelianStructure abelian_structure(std::span<const WeightVector> elements, std::int64_t modulus);

/// A subgroup, as sorted indices into its parent's element list.
struct Subgroup {
    std::vector<std::uint32_t> members;

    std::size_t order() const { return members.size(); }
    bool is_trivial() const { return members.size() <= 1; }
    friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

class AbelianGroup {
public:
    int dim() const { return dim_; }
    std::int64_t exponent() const { return exponent_; }
    std::size_t order() const { return elements_.size(); }
    bool special_linear() const { return special_linear_; }
    bool is_trivial() const { return elements_.size() == 1; }

    /// Elements in lexicographic order; index 0 is the identity.
    const std::vector<WeightVector>& elements() const { return elements_; }
    const WeightVector& element(std::uint32_t index) const { return elements_[index]; }
    /// Index of a weight vector (entries already reduced mod exponent), or -1.
    std::int64_t index_of(const WeightVector& w) const;

    const std::vector<std::int64_t>& invariant_factors() const { return structure_.invariants; }
    const std::vector<std::int64_t>& element_coords(std::uint32_t index) const {
        return structure_.coords[index];
    }
    /// Elements generating the cyclic factors.
    const std::vector<std::size_t>& snf_basis() const { return structure_.basis; }

    std::size_t character_count() const { return elements_.size(); }
    Character character_from_coords(std::span<const std::int64_t> coords) const;
    std::vector<std::int64_t> coords(Character chi) const;
    Character multiply(Character a, Character b) const;
    Character inverse(Character a) const { return inverse_[a.id]; }
    /// chi(g) as an exponent of zeta_L, in [0, L).
    std::int64_t evaluate(Character chi, std::uint32_t element) const;

    /// wt(e_i): the character by which the group scales x_i.
    Character coordinate_character(int i) const { return coordinate_chars_[static_cast<std::size_t>(i)]; }
    /// step(i)[chi] = chi * wt(e_i).
    const std::vector<std::uint32_t>& coordinate_step(int i) const {
        return steps_[static_cast<std::size_t>(i)];
    }
    /// Order of wt(e_i) in the dual group: the least o with x_i^o invariant.
    std::int64_t coordinate_order(int i) const { return coordinate_orders_[static_cast<std::size_t>(i)]; }

    Subgroup whole() const;
    Subgroup trivial_subgroup() const { return Subgroup{{0}}; }

    /// Recovers a spec whose closure is this group (one generator per element).
    GroupSpec to_spec() const;

private:
    friend AbelianGroup build_group(const GroupSpec& spec, std::size_t max_order);

    int dim_ = 0;
    std::int64_t exponent_ = 1;
    bool special_linear_ = true;
    std::vector<WeightVector> elements_;
    std::map<WeightVector, std::uint32_t> index_;
    AbelianStructure structure_;
    std::vector<Character> inverse_;
    std::vector<Character> coordinate_chars_;
    std::vector<std::int64_t> coordinate_orders_;
    std::vector<std::vector<std::uint32_t>> steps_;
};

/// Closure of the generators. Throws GroupTooLarge past `max_order` elements.
AbelianGroup build_group(const GroupSpec& spec, std::size_t max_order = kDefaultMaxGroupOrder);

/// wt(m), additive in m: wt(m + m') = wt(m) * wt(m').
Character weight_of_monomial(const AbelianGroup& group, const ExponentVector& m);

/// H_T = {g : w_i(g) = 0 for all i in T}.
Subgroup pointwise_stabilizer(const AbelianGroup& group, Support coords);

/// Fix(H) = {i : w_i(h) = 0 for all h in H}.
Support fixed_support(const AbelianGroup& group, const Subgroup& sub);

/// Structure of a subgroup, with coordinates indexed parallel to sub.members.
AbelianStructure subgroup_structure(const AbelianGroup& group, const Subgroup& sub);

/// The restriction chi|_H in H's own invariant-factor coordinates.
std::vector<std::int64_t> restrict_character(const AbelianGroup& group, Character chi, const Subgroup& sub);
/// Same, reusing a structure computed by subgroup_structure(group, sub).
std::vector<std::int64_t> restrict_character(const AbelianGroup& group, Character chi, const Subgroup& sub,
                                             const AbelianStructure& sub_structure);

bool is_trivial_on(const AbelianGroup& group, Character chi, const Subgroup& sub);

/// The group spec of G/H_T acting on the coordinates in T (dimension |T|).
/// Throws NotClosed unless T = Fix(H_T). The result may leave SL(|T|), in
/// which case it is flagged special_linear = false.
GroupSpec quotient_group_on(const AbelianGroup& group, Support coords);

/// Support as sorted 1-based coordinate list, the external convention.
std::vector<int> support_to_list(Support s);

}  // namespace quotsing
