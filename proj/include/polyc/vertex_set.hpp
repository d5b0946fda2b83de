#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace polyc {

// A subset of vertices {0,...,n-1} over a universe of at most 64 vertices,
// packed into one machine word. The numeric value of the word ("subset
// encoding") doubles as the canonical total order on subsets of a fixed
// universe: witnesses and normalized edge lists are tie-broken by it.
class VertexSet {
public:
    static constexpr int max_universe = 64;

    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet empty_set() { return VertexSet{}; }

    static constexpr VertexSet full(int n) {
        return VertexSet{n >= max_universe ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s = s.with(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr VertexSet with(int v) const { return VertexSet{bits_ | (std::uint64_t{1} << v)}; }
    constexpr VertexSet without(int v) const { return VertexSet{bits_ & ~(std::uint64_t{1} << v)}; }

    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet{bits_ ^ o.bits_}; }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }

    constexpr VertexSet complement_in(int n) const { return full(n).minus(*this); }

    // Least member; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits_); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr auto operator<=>(VertexSet a, VertexSet b) = default;

private:
    std::uint64_t bits_ = 0;
};

// Re-indexes `e` onto the universe {0,...,|x|-1}: the i-th lowest vertex of
// `x` becomes vertex i. Members of `e` outside `x` are dropped.
inline VertexSet compress_into(VertexSet e, VertexSet x) {
    std::uint64_t out = 0;
    int idx = 0;
    for (std::uint64_t b = x.bits(); b != 0; b &= b - 1, ++idx) {
        if (e.bits() & (b & ~(b - 1))) out |= std::uint64_t{1} << idx;
    }
    return VertexSet{out};
}

} // namespace polyc
