#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hposet/element_set.hpp"

namespace hposet {

/// Permutation of {0, ..., n-1}; entry i is the image of i.
using Permutation = std::vector<std::size_t>;

/// Failure of the hierarchical condition: a sits one level below b, a is not below b, c is.
struct HierarchyDefect {
    std::size_t a;
    std::size_t b;
    std::size_t c;
    /// Level index of b (0-based); a and c live on level `level_of_b - 1`.
    std::size_t level_of_b;
};

/**
 * Finite poset on {0, ..., n-1}.
 *
 * Elements are 0-based in this API; text formats use 1-based labels. The order relation is stored
 * as one down-set and one up-set mask per element, so n is limited to 64.
 */
class Poset {
public:
    /// Anti-chain on n elements.
    explicit Poset(std::size_t n = 0);

    /// Reflexive-transitive closure of `pairs` (meaning first <= second). Throws InputError for
    /// labels out of range and NotPartialOrderError when the closure has a cycle.
    static Poset from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
    static Poset antichain(std::size_t n) { return Poset(n); }
    /// 0 < 1 < ... < n-1
    static Poset chain(std::size_t n);
    /// Hierarchical poset with the given level sizes: every element of a level lies below every
    /// element of all higher levels. Elements are numbered level by level.
    static Poset hierarchical(const std::vector<std::size_t>& level_sizes);

    std::size_t size() const { return n_; }
    bool leq(std::size_t a, std::size_t b) const { return down_[b].contains(a); }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

    /// Principal ideal <a>.
    ElementSet down_set(std::size_t a) const { return down_[a]; }
    ElementSet up_set(std::size_t a) const { return up_[a]; }
    ElementSet ground_set() const { return ElementSet::full(n_); }

    /// 0-based level of an element: an element whose longest chain from below has i+1 elements
    /// sits on level i.
    std::size_t level_of(std::size_t a) const { return level_[a]; }
    std::size_t height() const { return levels_.size(); }
    const std::vector<ElementSet>& levels() const { return levels_; }
    /// Number of elements on each level.
    std::vector<std::size_t> level_sizes() const;
    /// Number of elements strictly below level i (N_i).
    std::size_t elements_below_level(std::size_t i) const;

    /// Relations a < b with b covering a (Hasse diagram edges).
    std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;

    /// Smallest ideal containing `elements`.
    ElementSet ideal_of(ElementSet elements) const;
    bool is_ideal(ElementSet s) const { return ideal_of(s) == s; }
    ElementSet maximal_elements(ElementSet s) const;

    bool operator==(const Poset& other) const { return n_ == other.n_ && down_ == other.down_; }

private:
    void finalize();

    std::size_t n_ = 0;
    std::vector<ElementSet> down_;
    std::vector<ElementSet> up_;
    std::vector<std::size_t> level_;
    std::vector<ElementSet> levels_;
};

/// Downward-closed subset of a poset's ground set.
struct Ideal {
    ElementSet members;
    bool operator==(const Ideal&) const = default;
};

Ideal ideal_of(const Poset& p, ElementSet elements);
ElementSet maximal_elements(const Poset& p, ElementSet s);

/// Empty optional when p is hierarchical; otherwise the defect with minimal level, ties broken by
/// the smallest (b, a, c).
std::optional<HierarchyDefect> find_hierarchy_defect(const Poset& p);
bool is_hierarchical(const Poset& p);

/// Opposite order.
Poset dual(const Poset& p);

/// Restriction of p to a subset; `labels[i]` is the original element carrying new label i.
struct Subposet {
    Poset poset;
    std::vector<std::size_t> labels;
};

/// Restriction of p to an ideal. Throws InputError when `ideal` is not downward closed.
Subposet induced_subposet(const Poset& p, ElementSet ideal);
/// Restriction of p to an arbitrary subset.
Subposet restrict_to(const Poset& p, ElementSet subset);

/// Every ideal exactly once (n <= 24), in order of first-decision on elements.
std::vector<Ideal> ideals_enumerate(const Poset& p);

/// Order isomorphism p -> q (witness[i] is the image of i) when one exists.
std::optional<Permutation> find_isomorphism(const Poset& p, const Poset& q);
bool are_isomorphic(const Poset& p, const Poset& q);

/// Aut(p), identity first (n <= 12).
std::vector<Permutation> automorphisms(const Poset& p);

bool is_automorphism(const Poset& p, const Permutation& phi);

}  // namespace hposet
