#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hposet/element_set.hpp"
#include "hposet/gfq.hpp"

namespace hposet {

/// Default guard on the number of vectors an exhaustive scan of F_q^n may visit.
inline constexpr std::uint64_t kMaxSpaceSize = std::uint64_t{1} << 16;
/// Default guard on the number of codewords that may be listed.
inline constexpr std::uint64_t kMaxCodewords = std::uint64_t{1} << 20;

/// q^e, or UINT64_MAX when it does not fit.
std::uint64_t saturating_power(std::uint64_t q, std::size_t e);

/// Linear code over a prime field, stored by its reduced row echelon generator.
class LinearCode {
public:
    /// Row space of `generator`; dependent and zero rows are dropped.
    LinearCode(PrimeField field, std::size_t n, const FqMatrix& generator);
    LinearCode(PrimeField field, std::size_t n, const std::vector<FqVector>& rows);

    static LinearCode zero(PrimeField field, std::size_t n);
    static LinearCode full(PrimeField field, std::size_t n);

    const PrimeField& field() const { return generator_.field(); }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return generator_.rows(); }
    /// Reduced row echelon generator (leftmost pivots).
    const FqMatrix& generator() const { return generator_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool is_zero() const { return dimension() == 0; }
    bool is_full() const { return dimension() == n_; }
    /// q^k, saturating.
    std::uint64_t size() const { return saturating_power(field().order(), dimension()); }
    bool contains(const FqVector& v) const;
    ElementSet support() const;

    bool operator==(const LinearCode& other) const { return n_ == other.n_ && generator_ == other.generator_; }

private:
    std::size_t n_;
    FqMatrix generator_;
    std::vector<std::size_t> pivots_;
};

/// Every codeword once, ordered by message vector (lexicographic). Requires q^k <= 2^20.
std::vector<FqVector> codewords(const LinearCode& c);

LinearCode dual_code(const LinearCode& c);

/// Keeps the coordinates in `keep` (ascending order) and drops the rest.
LinearCode puncture(const LinearCode& c, ElementSet keep);

/// Hamming-metric invariants of a nonzero code.
struct HammingInvariants {
    std::size_t minimum_distance;
    std::size_t packing_radius;
    std::size_t covering_radius;
    std::size_t chebyshev_radius;
    FqVector chebyshev_center;
};

/// Exhaustive over F_q^n (q^n <= 2^16). Throws ZeroCodeError for {0}.
HammingInvariants hamming_invariants(const LinearCode& c);

/// Minimum nonzero Hamming weight; throws ZeroCodeError for {0}.
std::size_t hamming_minimum_distance(const LinearCode& c);
/// Largest distance from a vector to the code; n for the zero code.
std::size_t hamming_covering_radius(const LinearCode& c);

struct ChebyshevResult {
    std::size_t radius;
    /// Lexicographically smallest center attaining the radius.
    FqVector center;
};
ChebyshevResult hamming_chebyshev(const LinearCode& c);

/// Coefficient table A_0..A_n of a weight enumerator.
class WeightEnumerator {
public:
    WeightEnumerator() = default;
    explicit WeightEnumerator(std::vector<std::uint64_t> coefficients) : coefficients_(std::move(coefficients)) {}
    static WeightEnumerator one(std::size_t n);

    std::size_t max_degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
    std::uint64_t operator[](std::size_t i) const { return i < coefficients_.size() ? coefficients_[i] : 0; }
    const std::vector<std::uint64_t>& coefficients() const { return coefficients_; }
    std::uint64_t total() const;

    /// Polynomial in X, e.g. "1 + 2X^2 + X^3".
    std::string to_string() const;

    bool operator==(const WeightEnumerator& other) const;

private:
    std::vector<std::uint64_t> coefficients_;
};

WeightEnumerator hamming_weight_enumerator(const LinearCode& c);

/// Every 1-dimensional code of F_q^n once, generated by the vectors whose first nonzero entry is 1,
/// in lexicographic order.
std::vector<LinearCode> one_dimensional_codes(const PrimeField& field, std::size_t n);

/// Uniformly random generator rows, redrawn until they have rank k.
LinearCode random_code(const PrimeField& field, std::size_t n, std::size_t k, std::mt19937_64& rng);

}  // namespace hposet
