#include "hposet/code.hpp"

#include <sstream>

#include "detail/space.hpp"
#include "hposet/error.hpp"

namespace hposet {

std::uint64_t saturating_power(std::uint64_t q, std::size_t e) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (out > UINT64_MAX / q) return UINT64_MAX;
        out *= q;
    }
    return out;
}

LinearCode::LinearCode(PrimeField field, std::size_t n, const FqMatrix& generator)
    : n_(n), generator_(field, 0, n) {
    if (generator.cols() != n) {
        throw InputError("generator has " + std::to_string(generator.cols()) + " columns, expected " +
                         std::to_string(n));
    }
    if (!(generator.field() == field)) throw InputError("generator over a different field");
    RowReduction red = rref(generator);
    generator_ = std::move(red.matrix);
    pivots_ = std::move(red.pivots);
}

LinearCode::LinearCode(PrimeField field, std::size_t n, const std::vector<FqVector>& rows)
    : LinearCode(field, n, FqMatrix(field, n, rows)) {}

LinearCode LinearCode::zero(PrimeField field, std::size_t n) { return LinearCode(field, n, FqMatrix(field, 0, n)); }

LinearCode LinearCode::full(PrimeField field, std::size_t n) {
    return LinearCode(field, n, FqMatrix::identity(field, n));
}

bool LinearCode::contains(const FqVector& v) const {
    if (v.size() != n_) return false;
    FqMatrix extended = generator_;
    extended.append_row(v);
    return extended.rank() == dimension();
}

ElementSet LinearCode::support() const {
    ElementSet s;
    for (std::size_t r = 0; r < dimension(); ++r) s |= generator_.row(r).support();
    return s;
}

std::vector<FqVector> codewords(const LinearCode& c) {
    if (c.size() > kMaxCodewords) {
        throw CapacityError("code has more than 2^20 codewords; refusing to list them");
    }
    const std::size_t k = c.dimension();
    const unsigned q = c.field().order();
    std::vector<FqVector> out;
    out.reserve(static_cast<std::size_t>(c.size()));
    std::vector<Residue> message(k, 0);
    for (;;) {
        out.push_back(c.generator().combine_rows(FqVector(c.field(), message)));
        std::size_t i = k;
        for (;;) {
            if (i == 0) return out;
            --i;
            if (++message[i] < q) break;
            message[i] = 0;
        }
    }
}

LinearCode dual_code(const LinearCode& c) {
    if (c.is_zero()) return LinearCode::full(c.field(), c.length());
    return LinearCode(c.field(), c.length(), kernel(c.generator()));
}

LinearCode puncture(const LinearCode& c, ElementSet keep) {
    if (!keep.subset_of(ElementSet::full(c.length()))) throw InputError("puncture set outside the code length");
    const auto columns = keep.elements();
    return LinearCode(c.field(), columns.size(), c.generator().select_columns(columns));
}

std::size_t hamming_minimum_distance(const LinearCode& c) {
    if (c.is_zero()) throw ZeroCodeError("minimum distance is undefined for the zero code");
    std::size_t best = c.length();
    for (const auto& w : codewords(c)) {
        if (!w.is_zero()) best = std::min(best, w.hamming_weight());
    }
    return best;
}

std::size_t hamming_covering_radius(const LinearCode& c) {
    const detail::Space space(c.field(), c.length());
    return detail::covering_radius(space, detail::hamming_weights(space), c);
}

ChebyshevResult hamming_chebyshev(const LinearCode& c) {
    const detail::Space space(c.field(), c.length());
    const auto words = detail::codeword_indices(space, c);
    const auto [radius, center] = detail::chebyshev(space, detail::hamming_weights(space), words);
    return {radius, space.vector_at(center)};
}

HammingInvariants hamming_invariants(const LinearCode& c) {
    if (c.is_zero()) throw ZeroCodeError("Hamming invariants require a nonzero code");
    const detail::Space space(c.field(), c.length());
    const auto weights = detail::hamming_weights(space);
    const auto words = detail::codeword_indices(space, c);
    const std::size_t d = detail::minimum_weight(weights, words);
    const auto [radius, center] = detail::chebyshev(space, weights, words);
    return HammingInvariants{
        d,
        (d - 1) / 2,
        detail::covering_radius(space, weights, c),
        radius,
        space.vector_at(center),
    };
}

WeightEnumerator WeightEnumerator::one(std::size_t n) {
    std::vector<std::uint64_t> coeffs(n + 1, 0);
    coeffs[0] = 1;
    return WeightEnumerator(std::move(coeffs));
}

std::uint64_t WeightEnumerator::total() const {
    std::uint64_t t = 0;
    for (auto a : coefficients_) t += a;
    return t;
}

std::string WeightEnumerator::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        const std::uint64_t a = coefficients_[i];
        if (a == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << a;
        } else {
            if (a != 1) out << a;
            out << 'X';
            if (i > 1) out << '^' << i;
        }
    }
    if (first) out << '0';
    return out.str();
}

bool WeightEnumerator::operator==(const WeightEnumerator& other) const {
    const std::size_t top = std::max(coefficients_.size(), other.coefficients_.size());
    for (std::size_t i = 0; i < top; ++i) {
        if ((*this)[i] != other[i]) return false;
    }
    return true;
}

WeightEnumerator hamming_weight_enumerator(const LinearCode& c) {
    std::vector<std::uint64_t> coeffs(c.length() + 1, 0);
    for (const auto& w : codewords(c)) ++coeffs[w.hamming_weight()];
    return WeightEnumerator(std::move(coeffs));
}

}  // namespace hposet

namespace hposet {

std::vector<LinearCode> one_dimensional_codes(const PrimeField& field, std::size_t n) {
    if (saturating_power(field.order(), n) > kMaxSpaceSize) {
        throw CapacityError("too many 1-dimensional codes to list");
    }
    std::vector<LinearCode> out;
    const unsigned q = field.order();
    for (std::size_t lead = 0; lead < n; ++lead) {
        // tail entries after the leading 1, as an odometer
        std::vector<Residue> digits(n, 0);
        digits[lead] = 1;
        for (;;) {
            out.emplace_back(field, n, std::vector<FqVector>{FqVector(field, digits)});
            std::size_t i = n;
            for (;;) {
                if (i == lead + 1) break;
                --i;
                if (++digits[i] < q) break;
                digits[i] = 0;
            }
            bool wrapped = true;
            for (std::size_t j = lead + 1; j < n; ++j) wrapped = wrapped && digits[j] == 0;
            if (wrapped) break;
        }
    }
    return out;
}

LinearCode random_code(const PrimeField& field, std::size_t n, std::size_t k, std::mt19937_64& rng) {
    if (k > n) throw InputError("dimension larger than the length");
    std::uniform_int_distribution<unsigned> digit(0, field.order() - 1);
    for (;;) {
        std::vector<FqVector> rows;
        for (std::size_t r = 0; r < k; ++r) {
            FqVector v(field, n);
            for (std::size_t j = 0; j < n; ++j) v.set(j, static_cast<Residue>(digit(rng)));
            rows.push_back(std::move(v));
        }
        LinearCode c(field, n, rows);
        if (c.dimension() == k) return c;
    }
}

}  // namespace hposet
