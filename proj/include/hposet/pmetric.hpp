#pragma once

#include <cstddef>
#include <vector>

#include "hposet/code.hpp"
#include "hposet/gfq.hpp"
#include "hposet/poset.hpp"

namespace hposet {

/// |<supp(u)>|
std::size_t p_weight(const Poset& p, const FqVector& u);
std::size_t p_distance(const Poset& p, const FqVector& u, const FqVector& v);

/// Vectors within distance r of `center`, in lexicographic order (q^n <= 2^16).
std::vector<FqVector> ball(const Poset& p, const FqVector& center, std::size_t r);
/// Vectors at distance exactly r.
std::vector<FqVector> sphere(const Poset& p, const FqVector& center, std::size_t r);

/// Poset-metric invariants computed exhaustively from their definitions.
struct PInvariants {
    std::size_t minimum_distance;
    std::size_t packing_radius;
    std::size_t covering_radius;
    std::size_t chebyshev_radius;
    FqVector chebyshev_center;
};

/// Requires q^n <= 2^16 and a nonzero code.
PInvariants brute_invariants(const Poset& p, const LinearCode& c);

std::size_t brute_minimum_distance(const Poset& p, const LinearCode& c);
/// n for a code with a single codeword.
std::size_t brute_packing_radius(const Poset& p, const LinearCode& c);
/// For {0} this is the largest P-weight in the space.
std::size_t brute_covering_radius(const Poset& p, const LinearCode& c);
ChebyshevResult brute_chebyshev(const Poset& p, const LinearCode& c);

/// A_i = number of codewords of P-weight i (q^k <= 2^20).
WeightEnumerator p_weight_enumerator(const Poset& p, const LinearCode& c);

}  // namespace hposet
