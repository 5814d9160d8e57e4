#include "hposet/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "hposet/error.hpp"

namespace hposet {

namespace {

void check_size(std::size_t n) {
    if (n > kMaxElements) {
        throw CapacityError("posets are limited to " + std::to_string(kMaxElements) + " elements");
    }
}

struct Signature {
    std::size_t level;
    std::size_t below;
    std::size_t above;
    auto operator<=>(const Signature&) const = default;
};

Signature signature(const Poset& p, std::size_t a) {
    return {p.level_of(a), p.down_set(a).size(), p.up_set(a).size()};
}

// Backtracking search for order isomorphisms p -> q. `visit` returns false to stop.
template <typename Visit>
void search_isomorphisms(const Poset& p, const Poset& q, Visit&& visit) {
    const std::size_t n = p.size();
    if (q.size() != n) return;
    std::vector<Signature> sp(n), sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        sp[i] = signature(p, i);
        sq[i] = signature(q, i);
    }
    {
        auto a = sp, b = sq;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return;
    }

    Permutation image(n, 0);
    std::vector<bool> used(n, false);
    bool stop = false;

    auto consistent = [&](std::size_t i, std::size_t x) {
        for (std::size_t j = 0; j < i; ++j) {
            const std::size_t y = image[j];
            if (p.leq(j, i) != q.leq(y, x) || p.leq(i, j) != q.leq(x, y)) return false;
        }
        return true;
    };

    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (stop) return;
        if (i == n) {
            if (!visit(static_cast<const Permutation&>(image))) stop = true;
            return;
        }
        for (std::size_t x = 0; x < n && !stop; ++x) {
            if (used[x] || sq[x] != sp[i] || !consistent(i, x)) continue;
            used[x] = true;
            image[i] = x;
            self(self, i + 1);
            used[x] = false;
        }
    };
    recurse(recurse, 0);
}

}  // namespace

Poset::Poset(std::size_t n) : n_(n) {
    check_size(n);
    down_.resize(n);
    for (std::size_t i = 0; i < n; ++i) down_[i] = ElementSet::singleton(i);
    finalize();
}

Poset Poset::from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    Poset p(n);
    for (const auto& [a, b] : pairs) {
        if (a >= n || b >= n) {
            throw InputError("relation (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                             ") uses a label outside [1, " + std::to_string(n) + "]");
        }
        p.down_[b].insert(a);
    }
    // Warshall on down-set masks.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t b = 0; b < n; ++b) {
            if (p.down_[b].contains(k)) p.down_[b] |= p.down_[k];
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (p.down_[b].contains(a) && p.down_[a].contains(b)) {
                throw NotPartialOrderError("relations contain a cycle through " + std::to_string(a + 1) +
                                           " and " + std::to_string(b + 1) + "; not a partial order");
            }
        }
    }
    p.finalize();
    return p;
}

Poset Poset::chain(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return from_relations(n, pairs);
}

Poset Poset::hierarchical(const std::vector<std::size_t>& level_sizes) {
    const std::size_t n = std::accumulate(level_sizes.begin(), level_sizes.end(), std::size_t{0});
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t start = 0;
    for (std::size_t lvl = 0; lvl + 1 < level_sizes.size(); ++lvl) {
        const std::size_t next = start + level_sizes[lvl];
        for (std::size_t a = start; a < next; ++a)
            for (std::size_t b = next; b < next + level_sizes[lvl + 1]; ++b) pairs.emplace_back(a, b);
        start = next;
    }
    return from_relations(n, pairs);
}

void Poset::finalize() {
    up_.assign(n_, ElementSet{});
    for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t a : down_[b]) up_[a].insert(b);

    // Strict predecessors have strictly smaller down-sets, so this order is a linear extension.
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return down_[x].size() < down_[y].size(); });
    level_.assign(n_, 0);
    std::size_t height = 0;
    for (std::size_t a : order) {
        std::size_t lvl = 0;
        for (std::size_t b : down_[a] - ElementSet::singleton(a)) lvl = std::max(lvl, level_[b] + 1);
        level_[a] = lvl;
        height = std::max(height, lvl + 1);
    }
    levels_.assign(n_ == 0 ? 0 : height, ElementSet{});
    for (std::size_t a = 0; a < n_; ++a) levels_[level_[a]].insert(a);
}

std::vector<std::size_t> Poset::level_sizes() const {
    std::vector<std::size_t> out;
    out.reserve(levels_.size());
    for (const auto& l : levels_) out.push_back(l.size());
    return out;
}

std::size_t Poset::elements_below_level(std::size_t i) const {
    std::size_t total = 0;
    for (std::size_t j = 0; j < i && j < levels_.size(); ++j) total += levels_[j].size();
    return total;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_relations() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t b = 0; b < n_; ++b) {
        const ElementSet below = down_[b] - ElementSet::singleton(b);
        for (std::size_t a : below) {
            // b covers a iff nothing strictly between them.
            bool covered = true;
            for (std::size_t c : below) {
                if (c != a && down_[c].contains(a)) {
                    covered = false;
                    break;
                }
            }
            if (covered) out.emplace_back(a, b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ElementSet Poset::ideal_of(ElementSet elements) const {
    ElementSet out;
    for (std::size_t a : elements) {
        if (a >= n_) throw InputError("element " + std::to_string(a + 1) + " outside the poset");
        out |= down_[a];
    }
    return out;
}

ElementSet Poset::maximal_elements(ElementSet s) const {
    ElementSet out;
    for (std::size_t a : s) {
        if (a >= n_) throw InputError("element " + std::to_string(a + 1) + " outside the poset");
        if ((up_[a] & s) == ElementSet::singleton(a)) out.insert(a);
    }
    return out;
}

Ideal ideal_of(const Poset& p, ElementSet elements) { return Ideal{p.ideal_of(elements)}; }

ElementSet maximal_elements(const Poset& p, ElementSet s) { return p.maximal_elements(s); }

std::optional<HierarchyDefect> find_hierarchy_defect(const Poset& p) {
    const auto& levels = p.levels();
    for (std::size_t alpha = 1; alpha < levels.size(); ++alpha) {
        const ElementSet lower = levels[alpha - 1];
        for (std::size_t b : levels[alpha]) {
            for (std::size_t a : lower) {
                if (p.leq(a, b)) continue;
                // b has height alpha+1, so something on the level below lies under it.
                for (std::size_t c : lower & p.down_set(b)) return HierarchyDefect{a, b, c, alpha};
            }
        }
    }
    return std::nullopt;
}

bool is_hierarchical(const Poset& p) { return !find_hierarchy_defect(p).has_value(); }

Poset dual(const Poset& p) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t b = 0; b < p.size(); ++b)
        for (std::size_t a : p.down_set(b))
            if (a != b) pairs.emplace_back(b, a);
    return Poset::from_relations(p.size(), pairs);
}

Subposet restrict_to(const Poset& p, ElementSet subset) {
    if (!subset.subset_of(p.ground_set())) throw InputError("subset is not contained in the poset");
    std::vector<std::size_t> labels = subset.elements();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (i != j && p.leq(labels[i], labels[j])) pairs.emplace_back(i, j);
    return {Poset::from_relations(labels.size(), pairs), std::move(labels)};
}

Subposet induced_subposet(const Poset& p, ElementSet ideal) {
    if (!ideal.subset_of(p.ground_set()) || !p.is_ideal(ideal)) {
        throw InputError("the given set is not an ideal (not downward closed)");
    }
    return restrict_to(p, ideal);
}

std::vector<Ideal> ideals_enumerate(const Poset& p) {
    constexpr std::size_t kMaxIdealElements = 24;
    if (p.size() > kMaxIdealElements) {
        throw CapacityError("ideal enumeration is limited to posets with at most 24 elements");
    }
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return p.level_of(x) < p.level_of(y); });

    std::vector<Ideal> out;
    auto recurse = [&](auto&& self, std::size_t i, ElementSet current) -> void {
        if (i == order.size()) {
            out.push_back(Ideal{current});
            return;
        }
        const std::size_t e = order[i];
        self(self, i + 1, current);
        if ((p.down_set(e) - ElementSet::singleton(e)).subset_of(current)) {
            self(self, i + 1, current | ElementSet::singleton(e));
        }
    };
    recurse(recurse, 0, ElementSet{});
    return out;
}

std::optional<Permutation> find_isomorphism(const Poset& p, const Poset& q) {
    std::optional<Permutation> found;
    search_isomorphisms(p, q, [&](const Permutation& phi) {
        found = phi;
        return false;
    });
    return found;
}

bool are_isomorphic(const Poset& p, const Poset& q) { return find_isomorphism(p, q).has_value(); }

std::vector<Permutation> automorphisms(const Poset& p) {
    constexpr std::size_t kMaxAutomorphismElements = 12;
    if (p.size() > kMaxAutomorphismElements) {
        throw CapacityError("automorphism enumeration is limited to posets with at most 12 elements");
    }
    std::vector<Permutation> out;
    search_isomorphisms(p, p, [&](const Permutation& phi) {
        out.push_back(phi);
        return true;
    });
    return out;
}

bool is_automorphism(const Poset& p, const Permutation& phi) {
    const std::size_t n = p.size();
    if (phi.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::size_t x : phi) {
        if (x >= n || seen[x]) return false;
        seen[x] = true;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (p.leq(a, b) != p.leq(phi[a], phi[b])) return false;
    return true;
}

}  // namespace hposet
