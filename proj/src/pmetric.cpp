#include "hposet/pmetric.hpp"

#include "detail/space.hpp"
#include "hposet/error.hpp"

namespace hposet {

namespace {

void check_length(const Poset& p, std::size_t n) {
    if (p.size() != n) {
        throw InputError("dimension mismatch: poset on " + std::to_string(p.size()) + " elements, vector length " +
                         std::to_string(n));
    }
}

std::vector<FqVector> collect(const Poset& p, const FqVector& center, std::size_t r, bool exact) {
    check_length(p, center.size());
    const detail::Space space(center.field(), center.size());
    const auto weights = detail::poset_weights(space, p);
    const detail::Index c = space.index_of(center);
    std::vector<FqVector> out;
    for (std::size_t x = 0; x < space.size(); ++x) {
        const std::size_t d = weights[space.sub(static_cast<detail::Index>(x), c)];
        if (exact ? d == r : d <= r) out.push_back(space.vector_at(static_cast<detail::Index>(x)));
    }
    return out;
}

}  // namespace

std::size_t p_weight(const Poset& p, const FqVector& u) {
    check_length(p, u.size());
    return p.ideal_of(u.support()).size();
}

std::size_t p_distance(const Poset& p, const FqVector& u, const FqVector& v) { return p_weight(p, u - v); }

std::vector<FqVector> ball(const Poset& p, const FqVector& center, std::size_t r) {
    return collect(p, center, r, false);
}

std::vector<FqVector> sphere(const Poset& p, const FqVector& center, std::size_t r) {
    return collect(p, center, r, true);
}

PInvariants brute_invariants(const Poset& p, const LinearCode& c) {
    check_length(p, c.length());
    if (c.is_zero()) throw ZeroCodeError("minimum distance is undefined for the zero code");
    const detail::Space space(c.field(), c.length());
    const auto weights = detail::poset_weights(space, p);
    const auto words = detail::codeword_indices(space, c);
    const auto [radius, center] = detail::chebyshev(space, weights, words);
    return PInvariants{
        detail::minimum_weight(weights, words),
        detail::packing_radius(space, weights, words),
        detail::covering_radius(space, weights, c),
        radius,
        space.vector_at(center),
    };
}

std::size_t brute_minimum_distance(const Poset& p, const LinearCode& c) {
    check_length(p, c.length());
    if (c.is_zero()) throw ZeroCodeError("minimum distance is undefined for the zero code");
    std::size_t best = c.length();
    for (const auto& w : codewords(c)) {
        if (!w.is_zero()) best = std::min(best, p_weight(p, w));
    }
    return best;
}

std::size_t brute_packing_radius(const Poset& p, const LinearCode& c) {
    check_length(p, c.length());
    const detail::Space space(c.field(), c.length());
    const auto words = detail::codeword_indices(space, c);
    return detail::packing_radius(space, detail::poset_weights(space, p), words);
}

std::size_t brute_covering_radius(const Poset& p, const LinearCode& c) {
    check_length(p, c.length());
    const detail::Space space(c.field(), c.length());
    return detail::covering_radius(space, detail::poset_weights(space, p), c);
}

ChebyshevResult brute_chebyshev(const Poset& p, const LinearCode& c) {
    check_length(p, c.length());
    const detail::Space space(c.field(), c.length());
    const auto words = detail::codeword_indices(space, c);
    const auto [radius, center] = detail::chebyshev(space, detail::poset_weights(space, p), words);
    return {radius, space.vector_at(center)};
}

WeightEnumerator p_weight_enumerator(const Poset& p, const LinearCode& c) {
    check_length(p, c.length());
    std::vector<std::uint64_t> coeffs(c.length() + 1, 0);
    for (const auto& w : codewords(c)) ++coeffs[p.ideal_of(w.support()).size()];
    return WeightEnumerator(std::move(coeffs));
}

}  // namespace hposet
