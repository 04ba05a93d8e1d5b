#ifndef METPOLY_SYMMETRY_HPP
#define METPOLY_SYMMETRY_HPP

#include <cstdint>
#include <vector>

#include "metpoly/polytope.hpp"

namespace metpoly {

/// One element of the permutation-switching group of m_n: a node permutation
/// followed by a switching reflection. perm[i-1] is the image of node i.
struct SymmetryElement {
    std::vector<int> perm;
    CutSet switch_cut;
};

/// n! * 2^(n-1).
std::uint64_t symmetry_group_order(int n);

/// Image under the node relabeling: output at (i,j) is the input at
/// (perm^-1(i), perm^-1(j)).
MetricVector apply_permutation(const std::vector<int>& perm, const MetricVector& x);

/// Switching reflection by delta(S): coordinates on the cut become 1 - value.
MetricVector apply_switching(const CutSet& s, const MetricVector& x);

/// Permutation first, then switching.
MetricVector apply_symmetry(const SymmetryElement& g, const MetricVector& x);

/// Composition (a after b) of node permutations.
std::vector<int> compose_permutations(const std::vector<int>& a, const std::vector<int>& b);

/// Lexicographically smallest image of x under the full permutation-switching
/// group. Two points have equal canonical forms iff they share an orbit.
///
/// Backtracking over permutations with lexicographic pruning, one switching at
/// a time; a partial relabeling is abandoned as soon as its decided coordinate
/// prefix exceeds the best image found so far.
MetricVector canonical_form(const MetricVector& x);

/// All distinct images of x under the group, sorted. Exhaustive; supported for
/// n <= 6 only (CapabilityError otherwise).
std::vector<MetricVector> orbit(const MetricVector& x);

}  // namespace metpoly

#endif
