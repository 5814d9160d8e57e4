#include "hposet/hierarchy.hpp"

#include <limits>
#include <string>

#include "hposet/error.hpp"
#include "hposet/numbers.hpp"

namespace hposet {

namespace {

void require_hierarchical(const Poset& p) {
    if (const auto defect = find_hierarchy_defect(p)) {
        throw NotHierarchicalError("poset is not hierarchical (" + std::to_string(defect->a + 1) + " is not below " +
                                   std::to_string(defect->b + 1) +
                                   "); the characterize command reports what fails instead");
    }
}

std::size_t sum_below(const std::vector<std::size_t>& sizes, std::size_t level) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < level; ++i) s += sizes[i];
    return s;
}

std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
        throw CapacityError("weight enumerator coefficient does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(v);
}

}  // namespace

LinearCode CanonicalDecomposition::assemble() const {
    const std::size_t n = certificate.dimension();
    const PrimeField& f = certificate.field();
    std::vector<FqVector> rows;
    for (const auto& comp : components) {
        for (std::size_t r = 0; r < comp.code.dimension(); ++r) {
            FqVector v(f, n);
            for (std::size_t j = 0; j < comp.embedding.size(); ++j) v.set(comp.embedding[j], comp.code.generator().at(r, j));
            rows.push_back(std::move(v));
        }
    }
    return LinearCode(f, n, rows);
}

CanonicalDecomposition canonical_decompose(const Poset& p, const LinearCode& c) {
    require_hierarchical(p);
    const std::size_t n = p.size();
    if (c.length() != n) throw InputError("code length does not match the poset");
    const PrimeField& f = c.field();

    // Highest level first, larger index first within a level: each pivot is then a maximal
    // coordinate of its row.
    std::vector<std::size_t> priority;
    for (std::size_t L = p.height(); L-- > 0;) {
        const auto members = p.levels()[L].elements();
        for (auto it = members.rbegin(); it != members.rend(); ++it) priority.push_back(*it);
    }
    const RowReduction red = rref_under_order(c.generator(), priority);

    FqMatrix u = FqMatrix::identity(f, n);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        const std::size_t piv = red.pivots[i];
        for (std::size_t j = 0; j < n; ++j) {
            const Residue g = red.matrix.at(i, j);
            if (g != 0 && p.level_of(j) < p.level_of(piv)) u.set(j, piv, f.neg(f.div(g, red.matrix.at(i, piv))));
        }
    }
    Permutation id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    LinearIsometry cert(p, std::move(id), TriangularMap(p, std::move(u)));

    CanonicalDecomposition dec{{}, cert, {}};
    std::vector<std::vector<FqVector>> rows_by_level(p.height());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        const FqVector cleaned = cert.apply(red.matrix.row(i));
        const std::size_t L = p.level_of(red.pivots[i]);
        const auto members = p.levels()[L].elements();
        FqVector local(f, members.size());
        for (std::size_t j = 0; j < members.size(); ++j) local.set(j, cleaned[members[j]]);
        rows_by_level[L].push_back(std::move(local));
    }
    for (std::size_t L = 0; L < p.height(); ++L) {
        auto members = p.levels()[L].elements();
        dec.level_offsets.push_back(p.elements_below_level(L));
        dec.components.push_back({L, LinearCode(f, members.size(), rows_by_level[L]), std::move(members)});
    }
    return dec;
}

HierarchicalInvariants closed_invariants(const CanonicalDecomposition& dec) {
    const auto& comps = dec.components;
    std::vector<std::size_t> sizes;
    for (const auto& comp : comps) sizes.push_back(comp.code.length());

    std::size_t t1 = comps.size();
    std::size_t r = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].code.is_zero()) continue;
        if (t1 == comps.size()) t1 = i;
        r = i;
    }
    if (t1 == comps.size()) throw ZeroCodeError("closed-form invariants need a nonzero code");

    HierarchicalInvariants out{};
    out.t1 = t1;
    out.r = r;
    const std::size_t dh = hamming_minimum_distance(comps[t1].code);
    out.minimum_distance = sum_below(sizes, t1) + dh;
    out.packing_radius = sum_below(sizes, t1) + (dh - 1) / 2;

    // h: the top level unless its component is full, otherwise the lowest level with every
    // higher component full.
    const std::size_t l = comps.size() - 1;
    std::size_t h = l;
    if (comps[l].code.is_full()) {
        while (h > 0 && comps[h].code.is_full()) --h;
    }
    out.h = h;
    bool all_full = true;
    for (const auto& comp : comps) all_full = all_full && comp.code.is_full();
    out.covering_radius = all_full ? 0 : sum_below(sizes, h) + hamming_covering_radius(comps[h].code);

    out.chebyshev_radius = sum_below(sizes, r) + hamming_chebyshev(comps[r].code).radius;
    return out;
}

HierarchicalInvariants closed_invariants(const Poset& p, const LinearCode& c) {
    if (c.is_zero()) throw ZeroCodeError("closed-form invariants need a nonzero code");
    return closed_invariants(canonical_decompose(p, c));
}

bool is_p_perfect(const Poset& p, const LinearCode& c) {
    const auto dec = canonical_decompose(p, c);
    const auto inv = closed_invariants(dec);
    const bool by_radii = inv.packing_radius == inv.covering_radius;

    // C ~ C_t1 (+) full spaces above, with C_t1 Hamming-perfect.
    bool structural = true;
    for (std::size_t i = inv.t1 + 1; i < dec.components.size(); ++i)
        structural = structural && dec.components[i].code.is_full();
    const LinearCode& base = dec.components[inv.t1].code;
    structural = structural &&
                 (hamming_minimum_distance(base) - 1) / 2 == hamming_covering_radius(base);

    if (by_radii != structural) {
        throw InternalError("perfect-code test: radius comparison and structural test disagree");
    }
    return by_radii;
}

std::size_t chebyshev_binary(const Poset& p, const LinearCode& c) {
    if (c.field().order() != 2) {
        throw UnsupportedFieldError("the binary Chebyshev identity only holds for q = 2");
    }
    const auto dec = canonical_decompose(p, c);
    if (c.is_zero()) throw ZeroCodeError("Chebyshev radius of the zero code");
    std::size_t r = 0;
    std::size_t upto = 0;
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        if (!dec.components[i].code.is_zero()) r = i;
    }
    for (std::size_t i = 0; i <= r; ++i) upto += dec.components[i].code.length();
    return upto - hamming_covering_radius(dec.components[r].code);
}

WeightEnumerator hierarchical_weight_enumerator(const Poset& p, const LinearCode& c) {
    const auto dec = canonical_decompose(p, c);
    std::vector<std::uint64_t> coeff(p.size() + 1, 0);
    coeff[0] = 1;
    std::uint64_t below_size = 1;  // prod_{j<i} |C_j|
    std::size_t offset = 0;        // s_{i-1}
    for (const auto& comp : dec.components) {
        const WeightEnumerator w = hamming_weight_enumerator(comp.code);
        for (std::size_t d = 1; d <= w.max_degree(); ++d) coeff[offset + d] += w[d] * below_size;
        below_size *= comp.code.size();
        offset += comp.code.length();
    }
    return WeightEnumerator(std::move(coeff));
}

WeightEnumerator classical_macwilliams_transform(const WeightEnumerator& w, unsigned q, std::size_t n,
                                                 std::size_t k) {
    if (w.max_degree() > n) throw InputError("enumerator degree exceeds the code length");
    const BigInt bq = q;
    if (BigInt(w.total()) != boost::multiprecision::pow(bq, static_cast<unsigned>(k))) {
        throw InputError("enumerator total is not q^k");
    }

    // (1 - X)^i and (1 + (q-1) X)^(n-i) as coefficient lists.
    auto power = [&](const BigInt& a, std::size_t e) {
        std::vector<BigInt> out{1};
        for (std::size_t t = 0; t < e; ++t) {
            out.push_back(0);
            for (std::size_t d = out.size() - 1; d > 0; --d) out[d] += a * out[d - 1];
        }
        return out;
    };
    std::vector<BigInt> total(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (w[i] == 0) continue;
        const auto left = power(-1, i);
        const auto right = power(bq - 1, n - i);
        for (std::size_t a = 0; a < left.size(); ++a)
            for (std::size_t b = 0; b < right.size(); ++b) total[a + b] += BigInt(w[i]) * left[a] * right[b];
    }
    const BigInt scale = boost::multiprecision::pow(bq, static_cast<unsigned>(k));
    std::vector<std::uint64_t> out;
    for (const auto& t : total) {
        if (t % scale != 0 || t < 0) throw InternalError("MacWilliams transform produced a negative or non-integral coefficient");
        out.push_back(to_u64(t / scale));
    }
    return WeightEnumerator(std::move(out));
}

WeightEnumerator macwilliams_dual_enumerator(const Poset& p, const LinearCode& c) {
    const auto dec = canonical_decompose(p, c);
    const unsigned q = c.field().order();
    std::vector<BigInt> coeff(p.size() + 1, 0);
    coeff[0] = 1;
    BigInt multiplier = 1;    // prod over higher levels of q^(n_i - k_i)
    std::size_t offset = 0;   // sum of n_i over higher levels
    for (std::size_t L = dec.components.size(); L-- > 0;) {
        const LinearCode& comp = dec.components[L].code;
        const WeightEnumerator dual_w =
            classical_macwilliams_transform(hamming_weight_enumerator(comp), q, comp.length(), comp.dimension());
        for (std::size_t d = 1; d <= dual_w.max_degree(); ++d) coeff[offset + d] += multiplier * dual_w[d];
        multiplier *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(comp.length() - comp.dimension()));
        offset += comp.length();
    }
    std::vector<std::uint64_t> out;
    for (const auto& v : coeff) out.push_back(to_u64(v));
    return WeightEnumerator(std::move(out));
}

}  // namespace hposet
