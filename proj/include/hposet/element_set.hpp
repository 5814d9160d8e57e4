#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hposet {

/// Maximum ground-set size supported by ElementSet.
inline constexpr std::size_t kMaxElements = 64;

/// Subset of {0, ..., 63} stored as a bit mask.
class ElementSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::size_t*;
        using reference = std::size_t;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr ElementSet() = default;
    constexpr ElementSet(std::initializer_list<std::size_t> elements) {
        for (std::size_t e : elements) bits_ |= bit(e);
    }

    static constexpr ElementSet from_bits(std::uint64_t bits) {
        ElementSet s;
        s.bits_ = bits;
        return s;
    }
    /// {0, ..., n-1}
    static constexpr ElementSet full(std::size_t n) {
        return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr ElementSet singleton(std::size_t e) { return from_bits(bit(e)); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(std::size_t e) const { return e < 64 && (bits_ & bit(e)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr void insert(std::size_t e) { bits_ |= bit(e); }
    constexpr void erase(std::size_t e) { bits_ &= ~bit(e); }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<std::size_t> elements() const { return {begin(), end()}; }

    constexpr ElementSet operator|(ElementSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr ElementSet operator&(ElementSet o) const { return from_bits(bits_ & o.bits_); }
    /// Set difference.
    constexpr ElementSet operator-(ElementSet o) const { return from_bits(bits_ & ~o.bits_); }
    constexpr ElementSet& operator|=(ElementSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr ElementSet& operator&=(ElementSet o) {
        bits_ &= o.bits_;
        return *this;
    }

    constexpr bool operator==(const ElementSet&) const = default;
    constexpr auto operator<=>(const ElementSet&) const = default;

private:
    static constexpr std::uint64_t bit(std::size_t e) { return std::uint64_t{1} << e; }

    std::uint64_t bits_ = 0;
};

}  // namespace hposet
