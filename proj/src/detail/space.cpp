#include "detail/space.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hposet/error.hpp"

namespace hposet::detail {

namespace {
// Bound on (codewords x space) pair evaluations for the quadratic scans.
constexpr std::uint64_t kMaxPairWork = std::uint64_t{1} << 32;

void check_work(std::uint64_t words, std::uint64_t space) {
    if (words != 0 && space > kMaxPairWork / words) {
        throw CapacityError("exhaustive scan over " + std::to_string(words) + " codewords x " +
                            std::to_string(space) + " vectors exceeds the work guard");
    }
}
}  // namespace

Space::Space(PrimeField field, std::size_t n, std::uint64_t limit) : field_(field), n_(n) {
    const std::uint64_t total = saturating_power(field.order(), n);
    if (total > limit || n > kMaxElements) {
        throw CapacityError("exhaustive scan of F_" + std::to_string(field.order()) + "^" + std::to_string(n) +
                            " exceeds the space guard of " + std::to_string(limit) + " vectors");
    }
    size_ = static_cast<std::size_t>(total);
    const unsigned q = field.order();
    place_.assign(n, 1);
    for (std::size_t i = n; i-- > 1;) place_[i - 1] = place_[i] * q;

    digits_.assign(size_ * n, 0);
    supports_.assign(size_, ElementSet{});
    std::vector<Residue> cur(n, 0);
    for (std::size_t idx = 0; idx < size_; ++idx) {
        ElementSet s;
        for (std::size_t i = 0; i < n; ++i) {
            digits_[idx * n + i] = cur[i];
            if (cur[i] != 0) s.insert(i);
        }
        supports_[idx] = s;
        // odometer, last coordinate fastest
        for (std::size_t i = n; i-- > 0;) {
            if (++cur[i] < q) break;
            cur[i] = 0;
        }
    }
}

Index Space::index_of(std::span<const Residue> digits) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < n_; ++i) idx += digits[i] * place_[i];
    return static_cast<Index>(idx);
}

Index Space::index_of(const FqVector& v) const {
    if (v.size() != n_) throw InputError("dimension mismatch");
    return index_of(v.entries());
}

FqVector Space::vector_at(Index i) const {
    auto d = digits(i);
    return FqVector(field_, std::vector<Residue>(d.begin(), d.end()));
}

Index Space::sub(Index a, Index b) const {
    if (field_.order() == 2) return a ^ b;
    auto da = digits(a);
    auto db = digits(b);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < n_; ++i) idx += field_.sub(da[i], db[i]) * place_[i];
    return static_cast<Index>(idx);
}

Index Space::add(Index a, Index b) const {
    if (field_.order() == 2) return a ^ b;
    auto da = digits(a);
    auto db = digits(b);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < n_; ++i) idx += field_.add(da[i], db[i]) * place_[i];
    return static_cast<Index>(idx);
}

WeightTable hamming_weights(const Space& space) {
    WeightTable w(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) w[i] = static_cast<std::uint8_t>(space.support(static_cast<Index>(i)).size());
    return w;
}

WeightTable poset_weights(const Space& space, const Poset& p) {
    if (p.size() != space.length()) throw InputError("poset size does not match the vector length");
    WeightTable w(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        w[i] = static_cast<std::uint8_t>(p.ideal_of(space.support(static_cast<Index>(i))).size());
    }
    return w;
}

std::vector<Index> codeword_indices(const Space& space, const LinearCode& c) {
    if (c.length() != space.length()) throw InputError("code length does not match the space");
    std::vector<Index> words{0};
    const unsigned q = space.field().order();
    for (std::size_t r = 0; r < c.dimension(); ++r) {
        const Index g = space.index_of(c.generator().row_span(r));
        const std::size_t count = words.size();
        Index step = g;
        for (unsigned lambda = 1; lambda < q; ++lambda) {
            for (std::size_t j = 0; j < count; ++j) words.push_back(space.add(words[j], step));
            step = space.add(step, g);
        }
    }
    return words;
}

std::size_t minimum_weight(const WeightTable& w, std::span<const Index> words) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Index c : words) {
        if (c != 0) best = std::min<std::size_t>(best, w[c]);
    }
    if (best == std::numeric_limits<std::size_t>::max()) {
        throw ZeroCodeError("minimum distance is undefined for the zero code");
    }
    return best;
}

std::size_t packing_radius(const Space& space, const WeightTable& w, std::span<const Index> words) {
    // Balls of radius r around u != v meet iff some x has d(x,0) <= r and d(x, v-u) <= r, so only
    // pairs (0, c) matter, and c and a nonzero multiple of c behave identically.
    if (words.size() <= 1) return space.length();
    check_work(words.size(), space.size());
    std::size_t closest_meeting = std::numeric_limits<std::size_t>::max();
    for (Index c : words) {
        if (c == 0) continue;
        auto d = space.digits(c);
        const auto lead = std::find_if(d.begin(), d.end(), [](Residue r) { return r != 0; });
        if (*lead != 1) continue;
        std::size_t m = std::numeric_limits<std::size_t>::max();
        for (std::size_t x = 0; x < space.size() && m > 1; ++x) {
            const std::size_t here = std::max<std::size_t>(w[x], w[space.sub(c, static_cast<Index>(x))]);
            m = std::min(m, here);
        }
        closest_meeting = std::min(closest_meeting, m);
    }
    return closest_meeting - 1;
}

std::size_t covering_radius(const Space& space, const WeightTable& w, const LinearCode& c) {
    if (c.length() != space.length()) throw InputError("code length does not match the space");
    const PrimeField& f = space.field();
    const std::size_t n = space.length();
    const auto& g = c.generator();
    const auto& pivots = c.pivots();
    constexpr std::uint8_t kUnseen = 0xFF;
    std::vector<std::uint8_t> coset_min(space.size(), kUnseen);
    std::vector<Residue> x(n);
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        auto d = space.digits(static_cast<Index>(idx));
        std::copy(d.begin(), d.end(), x.begin());
        // Clearing the pivot coordinates picks a unique representative of x + C.
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const Residue coef = x[pivots[r]];
            if (coef == 0) continue;
            for (std::size_t j = 0; j < n; ++j) x[j] = f.sub(x[j], f.mul(coef, g.at(r, j)));
        }
        const Index rep = space.index_of(x);
        coset_min[rep] = std::min(coset_min[rep], w[idx]);
    }
    std::size_t radius = 0;
    for (std::uint8_t m : coset_min) {
        if (m != kUnseen) radius = std::max<std::size_t>(radius, m);
    }
    return radius;
}

std::pair<std::size_t, Index> chebyshev(const Space& space, const WeightTable& w, std::span<const Index> words) {
    check_work(words.size(), space.size());
    std::size_t best = std::numeric_limits<std::size_t>::max();
    Index center = 0;
    for (std::size_t u = 0; u < space.size(); ++u) {
        std::size_t worst = 0;
        for (Index c : words) {
            worst = std::max<std::size_t>(worst, w[space.sub(static_cast<Index>(u), c)]);
            if (worst >= best) break;
        }
        if (worst < best) {
            best = worst;
            center = static_cast<Index>(u);
        }
    }
    return {best, center};
}

}  // namespace hposet::detail
