#pragma once

// Brute-force reference implementations, written directly from the definitions and sharing no
// code with the library beyond reading the order relation and the generator matrix.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "hposet/code.hpp"
#include "hposet/poset.hpp"

namespace oracle {

using Vec = std::vector<int>;

struct Metric {
    unsigned q;
    std::size_t n;
    std::vector<std::vector<bool>> leq;  // leq[i][j]: i below j
};

inline Metric poset_metric(const hposet::Poset& p, unsigned q) {
    Metric m{q, p.size(), std::vector<std::vector<bool>>(p.size(), std::vector<bool>(p.size()))};
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) m.leq[i][j] = p.leq(i, j);
    return m;
}

inline Metric dual_metric(const hposet::Poset& p, unsigned q) {
    Metric m = poset_metric(p, q);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) m.leq[i][j] = p.leq(j, i);
    return m;
}

inline Metric hamming_metric(std::size_t n, unsigned q) {
    Metric m{q, n, std::vector<std::vector<bool>>(n, std::vector<bool>(n))};
    for (std::size_t i = 0; i < n; ++i) m.leq[i][i] = true;
    return m;
}

/// |{i : i below some j with v_j != 0}|
inline std::size_t weight(const Metric& m, const Vec& v) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) {
            if (v[j] != 0 && m.leq[i][j]) {
                ++w;
                break;
            }
        }
    }
    return w;
}

inline std::vector<Vec> space(unsigned q, std::size_t n) {
    std::vector<Vec> out;
    Vec v(n, 0);
    for (;;) {
        out.push_back(v);
        std::size_t i = n;
        for (;;) {
            if (i == 0) return out;
            --i;
            if (++v[i] < static_cast<int>(q)) break;
            v[i] = 0;
        }
    }
}

inline Vec sub(const Vec& a, const Vec& b, unsigned q) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ((a[i] - b[i]) % static_cast<int>(q) + static_cast<int>(q)) % static_cast<int>(q);
    return out;
}

inline std::size_t index_of(const Vec& v, unsigned q) {
    std::size_t idx = 0;
    for (int x : v) idx = idx * q + static_cast<std::size_t>(x);
    return idx;
}

/// index_of(sub(a, b, q), q) without building the difference.
inline std::size_t sub_index(const Vec& a, const Vec& b, unsigned q) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) idx = idx * q + static_cast<std::size_t>((a[i] - b[i] + static_cast<int>(q)) % static_cast<int>(q));
    return idx;
}

inline Vec to_vec(const hposet::FqVector& v) { return Vec(v.entries().begin(), v.entries().end()); }

/// All q^k combinations of the generator rows.
inline std::vector<Vec> codewords(const hposet::LinearCode& c) {
    const unsigned q = c.field().order();
    std::vector<Vec> out;
    for (const Vec& msg : space(q, c.dimension())) {
        Vec w(c.length(), 0);
        for (std::size_t r = 0; r < c.dimension(); ++r)
            for (std::size_t j = 0; j < c.length(); ++j) w[j] = (w[j] + msg[r] * c.generator().at(r, j)) % static_cast<int>(q);
        out.push_back(w);
    }
    return out;
}

/// {v : v . c = 0 for all codewords c}
inline std::vector<Vec> dual_codewords(const hposet::LinearCode& c) {
    const unsigned q = c.field().order();
    std::vector<Vec> out;
    for (const Vec& v : space(q, c.length())) {
        bool orthogonal = true;
        for (std::size_t r = 0; r < c.dimension() && orthogonal; ++r) {
            int dot = 0;
            for (std::size_t j = 0; j < c.length(); ++j) dot += v[j] * c.generator().at(r, j);
            orthogonal = dot % static_cast<int>(q) == 0;
        }
        if (orthogonal) out.push_back(v);
    }
    return out;
}

inline std::vector<std::uint64_t> enumerator(const Metric& m, const std::vector<Vec>& words) {
    std::vector<std::uint64_t> a(m.n + 1, 0);
    for (const Vec& w : words) ++a[weight(m, w)];
    return a;
}

struct Invariants {
    std::size_t d;
    std::size_t packing;
    std::size_t covering;
    std::size_t chebyshev;
    std::size_t center;  // lexicographic index
};

/// Invariants from cosets: d(x, C) is the least weight in x + C and max_c d(x, c) the largest.
inline Invariants invariants(const Metric& m, const std::vector<Vec>& words) {
    const auto all = space(m.q, m.n);
    std::vector<std::size_t> wt(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) wt[i] = weight(m, all[i]);

    std::vector<std::size_t> coset(all.size(), std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> lo, hi;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (coset[i] != std::numeric_limits<std::size_t>::max()) continue;
        const std::size_t label = lo.size();
        lo.push_back(m.n);
        hi.push_back(0);
        for (const Vec& c : words) {
            const std::size_t j = sub_index(all[i], c, m.q);
            coset[j] = label;
            lo[label] = std::min(lo[label], wt[j]);
            hi[label] = std::max(hi[label], wt[j]);
        }
    }

    Invariants out{m.n + 1, 0, 0, m.n + 1, 0};
    for (const Vec& c : words)
        if (wt[index_of(c, m.q)] != 0) out.d = std::min(out.d, wt[index_of(c, m.q)]);
    out.covering = *std::max_element(lo.begin(), lo.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (hi[coset[i]] < out.chebyshev) {
            out.chebyshev = hi[coset[i]];
            out.center = i;
        }
    }

    // radius-r balls around 0 and c meet iff some x has max(wt x, wt(c - x)) <= r
    out.packing = m.n;
    for (const Vec& c : words) {
        // scalar multiples give the same value; keep words whose first nonzero entry is 1
        const auto lead = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
        if (lead == c.end() || *lead != 1) continue;
        std::size_t meet = m.n;
        for (std::size_t i = 0; i < all.size() && meet > 1; ++i)
            meet = std::min(meet, std::max(wt[i], wt[sub_index(c, all[i], m.q)]));
        out.packing = std::min(out.packing, meet - 1);
    }
    return out;
}

}  // namespace oracle
