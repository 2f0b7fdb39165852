#pragma once

// Reduced singular locus of Spec(k[x]^G) from the stabilizer side. An SL
// group has no pseudo-reflections, so a point is singular exactly when its
// stabilizer is nontrivial; the locus is the union of the images of the
// coordinate subspaces W_T fixed pointwise by some nontrivial H_T.

#include <cstdint>
#include <vector>

#include "quotsing/group.hpp"
#include "quotsing/monomial.hpp"

namespace quotsing {

/// (H_T, W_T) with T = Fix(H_T) and H_T nontrivial.
struct StabilizerPair {
    Support coords = 0;
    Subgroup stabilizer;
};

/// A class of G~_0: a pair together with a character of H nontrivial on H.
struct TildeClass {
    std::size_t pair_index = 0;
    std::vector<std::int64_t> restricted;  // in H's invariant-factor coordinates
};

struct SingularLocusReport {
    std::vector<StabilizerPair> pairs;
    std::vector<Support> components;  // maximal T's
    RadicalFamily reduced_ideal;
    std::vector<TildeClass> tilde_g0;
};

/// All closed T with nontrivial stabilizer, sorted by support_less.
std::vector<StabilizerPair> stabilizer_pairs(const AbelianGroup& group);

/// Ideal of the image of W_T: {{i} : i not in T}.
RadicalFamily component_ideal(int dim, Support coords);

/// Intersection of component ideals over stabilizer_pairs; unit when smooth.
RadicalFamily singular_locus_cst(const AbelianGroup& group);

/// Intersection over nonzero g of component_ideal(Fix(g)); an independent route.
RadicalFamily singular_locus_elementwise(const AbelianGroup& group);

struct Meet {
    StabilizerPair pair;
    /// Whether Fix(H_{T cap T'}) equals T cap T'.
    bool closed = true;
};

/// The pair of G_{H,H'}. Throws NotClosed unless both inputs are closed.
Meet meet(const AbelianGroup& group, Support t, Support t_prime);

std::vector<TildeClass> tilde_g0(const AbelianGroup& group, const std::vector<StabilizerPair>& pairs);

SingularLocusReport singular_locus_report(const AbelianGroup& group);

}  // namespace quotsing
