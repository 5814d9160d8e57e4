#pragma once

#include <cstddef>
#include <vector>

#include "hposet/code.hpp"
#include "hposet/gfq.hpp"
#include "hposet/isometry.hpp"
#include "hposet/poset.hpp"

namespace hposet {

/// Subcode living on one level, stored as a code of length n_i.
struct LevelComponent {
    std::size_t level;
    LinearCode code;
    /// embedding[j] is the poset element carrying coordinate j of `code`.
    std::vector<std::size_t> embedding;
};

/**
 * C~ = C~_1 (+) ... (+) C~_h with T(C) = C~.
 *
 * There is one component per level, in level order; zero-dimensional components are kept.
 */
struct CanonicalDecomposition {
    std::vector<LevelComponent> components;
    LinearIsometry certificate;
    /// N_i: number of elements strictly below level i.
    std::vector<std::size_t> level_offsets;

    /// The direct sum as a code of length n.
    LinearCode assemble() const;
};

/// Throws NotHierarchicalError (use the characterize module for other posets).
CanonicalDecomposition canonical_decompose(const Poset& p, const LinearCode& c);

/// Closed-form metric invariants; t1, h and r are 0-based level indices.
struct HierarchicalInvariants {
    std::size_t minimum_distance;
    std::size_t packing_radius;
    std::size_t covering_radius;
    std::size_t chebyshev_radius;
    std::size_t t1;
    std::size_t h;
    std::size_t r;
};

HierarchicalInvariants closed_invariants(const Poset& p, const LinearCode& c);
HierarchicalInvariants closed_invariants(const CanonicalDecomposition& dec);

/// packing == covering. The structural characterization is evaluated as well and an
/// InternalError is raised if the two disagree.
bool is_p_perfect(const Poset& p, const LinearCode& c);

/// sum_{i <= r} n_i - Cov^H(C_r); binary codes only (UnsupportedFieldError otherwise).
std::size_t chebyshev_binary(const Poset& p, const LinearCode& c);

/// 1 + sum_i X^{s_{i-1}} W_{C_i*}(X) prod_{j<i} |C_j|
WeightEnumerator hierarchical_weight_enumerator(const Poset& p, const LinearCode& c);

/// Hamming enumerator of the dual of an [n, k] code from the code's own enumerator:
/// q^-k sum_i A_i (1 - X)^i (1 + (q - 1) X)^(n - i).
WeightEnumerator classical_macwilliams_transform(const WeightEnumerator& w, unsigned q, std::size_t n,
                                                 std::size_t k);

/// Enumerator of C^perp under the dual poset, assembled level by level from the top.
WeightEnumerator macwilliams_dual_enumerator(const Poset& p, const LinearCode& c);

}  // namespace hposet
