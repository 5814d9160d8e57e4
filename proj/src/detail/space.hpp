#pragma once

// Exhaustive engine shared by the Hamming and poset metric oracles. Vectors of F_q^n are
// addressed by their lexicographic index (coordinate 0 most significant).

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hposet/code.hpp"
#include "hposet/gfq.hpp"
#include "hposet/poset.hpp"

namespace hposet::detail {

using Index = std::uint32_t;

class Space {
public:
    Space(PrimeField field, std::size_t n, std::uint64_t limit = kMaxSpaceSize);

    const PrimeField& field() const { return field_; }
    std::size_t length() const { return n_; }
    std::size_t size() const { return size_; }

    std::span<const Residue> digits(Index i) const { return {digits_.data() + std::size_t{i} * n_, n_}; }
    ElementSet support(Index i) const { return supports_[i]; }

    Index index_of(const FqVector& v) const;
    Index index_of(std::span<const Residue> digits) const;
    FqVector vector_at(Index i) const;

    Index sub(Index a, Index b) const;
    Index add(Index a, Index b) const;

private:
    PrimeField field_;
    std::size_t n_;
    std::size_t size_;
    std::vector<std::uint64_t> place_;  // q^(n-1-i)
    std::vector<Residue> digits_;
    std::vector<ElementSet> supports_;
};

using WeightTable = std::vector<std::uint8_t>;

WeightTable hamming_weights(const Space& space);
WeightTable poset_weights(const Space& space, const Poset& p);

std::vector<Index> codeword_indices(const Space& space, const LinearCode& c);

/// Minimum weight over nonzero codewords; throws ZeroCodeError when there are none.
std::size_t minimum_weight(const WeightTable& w, std::span<const Index> words);

/// Largest r such that the radius-r balls around distinct codewords are disjoint. n when the code
/// has a single word.
std::size_t packing_radius(const Space& space, const WeightTable& w, std::span<const Index> words);

/// max over x of the distance from x to the code, computed as the largest coset minimum weight.
std::size_t covering_radius(const Space& space, const WeightTable& w, const LinearCode& c);

/// (radius, lexicographically first center).
std::pair<std::size_t, Index> chebyshev(const Space& space, const WeightTable& w, std::span<const Index> words);

}  // namespace hposet::detail
