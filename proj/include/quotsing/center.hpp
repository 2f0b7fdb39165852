#pragma once

// The contraction algebra Lambda_con = Lambda / Lambda e Lambda of the skew
// group algebra, handled one invariant monomial at a time.
//
// Conventions: M_chi is spanned by the monomials of weight chi^{-1}, so
// Hom_S(M_b, M_a) is multiplication by monomials of weight b*a^{-1} and the
// part factoring through S is K(a, b) = R_{a^{-1}} * R_b. Every ideal and
// module involved is monomial, hence the center splits over invariant
// monomials m: a central element of degree m is a constant on each block of
// the graph joining a and b whenever m lies outside the symmetric conductor.

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "quotsing/group.hpp"
#include "quotsing/monomial.hpp"

namespace quotsing {

/// \bar I_chi = R_{chi^{-1}} * R_chi and its radical I_chi, indexed by character id.
struct CharIdealTable {
    std::vector<InvariantIdeal> bar_ideals;
    std::vector<RadicalFamily> radicals;
};

InvariantIdeal bar_ideal(const MonomialTable& table, Character chi);
CharIdealTable char_ideal_table(const MonomialTable& table);

/// Intersection of I_chi over all characters.
RadicalFamily reduced_center_family(const AbelianGroup& group, const CharIdealTable& ideals);
RadicalFamily reduced_center_family(const MonomialTable& table);

struct ReconstructionReport {
    bool equal = false;
    RadicalFamily center_side;
    RadicalFamily locus_side;
    /// Symmetric difference of the two antichains.
    std::vector<Support> only_center;
    std::vector<Support> only_locus;
};

ReconstructionReport verify_reconstruction(const AbelianGroup& group, const CharIdealTable& ideals);
ReconstructionReport verify_reconstruction(const MonomialTable& table);

/// Every I_chi contains the ideal of the reduced singular locus.
bool idem_spli_check(const AbelianGroup& group, const CharIdealTable& ideals);
bool idem_spli_check(const MonomialTable& table);

/// K(chi, chi'): the maps M_chi' -> M_chi factoring through S, weight chi^{-1} chi'.
WeightedGens factoring_module(const MonomialTable& table, Character chi, Character chi_prime);

/// {s in S : s * Hom(M_chi', M_chi) in K(chi, chi')}; the unit ideal when chi = chi'.
InvariantIdeal conductor(const MonomialTable& table, Character chi, Character chi_prime);

/// Symmetric conductors for all unordered pairs of nontrivial characters,
/// deduplicated: many pairs share one ideal.
class ConductorTable {
public:
    explicit ConductorTable(const MonomialTable& table);

    const InvariantIdeal& symmetric(Character a, Character b) const { return unique_[id(a, b)]; }
    std::uint32_t id(Character a, Character b) const {
        return ids_[static_cast<std::size_t>(a.id) * count_ + b.id];
    }
    const std::vector<InvariantIdeal>& unique_ideals() const { return unique_; }

private:
    std::size_t count_;
    std::vector<std::uint32_t> ids_;
    std::vector<InvariantIdeal> unique_;
};

/// Block partition of a vertex set at one invariant monomial.
struct MonomialBlocks {
    ExponentVector monomial;
    /// block[v] for vertex v (in the caller's order), -1 when inactive (m in \bar I).
    std::vector<int> block;
    /// live[k]: block k contains a vertex chi with m outside I_chi.
    std::vector<bool> live;

    int block_count() const { return static_cast<int>(live.size()); }
    int live_count() const;
};

struct CenterHilbert {
    int max_degree = 0;
    std::vector<std::uint64_t> dim_z;
    std::vector<std::uint64_t> dim_r;
    /// Invariant monomials per degree, and those outside the intersection of all I_chi.
    std::vector<std::uint64_t> invariant_count;
    std::vector<std::uint64_t> outside_count;
    std::uint64_t theo22_violations = 0;
    std::vector<MonomialBlocks> blocks;  // only with CenterOptions::record_blocks
};

struct CenterOptions {
    bool record_blocks = false;
    /// Throw Theo22Violation when a monomial has more than one live block or
    /// disagrees with the intersection of the I_chi.
    bool throw_on_violation = true;
};

/// Everything derived from one group: ideal tables and conductors are built
/// once and shared by the center computations.
class ContractionAlgebra {
public:
    explicit ContractionAlgebra(const MonomialTable& table);

    const MonomialTable& table() const { return *table_; }
    const AbelianGroup& group() const { return table_->group(); }
    const CharIdealTable& ideals() const { return ideals_; }
    /// Built on first use.
    const ConductorTable& conductors() const;

    std::vector<Character> nontrivial_characters() const;

    /// Blocks over `vertices` (nontrivial characters) at invariant m.
    MonomialBlocks blocks_at(const ExponentVector& m, const std::vector<Character>& vertices) const;

    CenterHilbert center_hilbert(int max_degree, const CenterOptions& options = {}) const;
    /// The same computation over M = sum of M_chi for chi in `vertices`.
    CenterHilbert subsystem_center(const std::vector<Character>& vertices, int max_degree,
                                   const CenterOptions& options = {}) const;

    /// For T subset of T': every T-block sits inside one T'-block, so dropping
    /// the coordinates outside T maps central classes to central classes.
    bool restriction_check(const std::vector<Character>& t, const std::vector<Character>& t_prime, int max_degree) const;
    /// For T subset T' subset T'': the restriction maps compose.
    bool cocycle_check(const std::vector<Character>& t, const std::vector<Character>& t_prime,
                       const std::vector<Character>& t_second, int max_degree) const;

private:
    const MonomialTable* table_;
    CharIdealTable ideals_;
    mutable std::once_flag conductors_once_;
    mutable std::unique_ptr<ConductorTable> conductors_;
};

/// Calls fn(m) for each invariant monomial of total degree <= max_degree.
template <class Fn>
void for_each_invariant(const MonomialTable& table, int max_degree, Fn&& fn);

/// All invariant monomials of total degree <= max_degree, by degree then lex.
std::vector<ExponentVector> invariant_monomials(const MonomialTable& table, int max_degree);

struct DenseOracleLimits {
    std::size_t max_group_order = 6;
    int max_degree = 6;
};

/// dim_k Z(Lambda_con) per degree 0..max_degree by explicit linear algebra
/// over Q on a materialised truncation of Lambda_con. Shares no code with the
/// block computation. Throws ScaleExceeded beyond `limits`.
std::vector<std::uint64_t> dense_center_oracle(const AbelianGroup& group, int max_degree,
                                               const DenseOracleLimits& limits = {});

}  // namespace quotsing

#include "quotsing/detail/invariant_enum.hpp"
