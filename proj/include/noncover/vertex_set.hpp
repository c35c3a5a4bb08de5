#ifndef NONCOVER_VERTEX_SET_HPP
#define NONCOVER_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace noncover {

// Subset of a ground set [n] with 1-based vertex labels, stored as a 64-bit
// mask (vertex v <-> bit v-1).  Everything downstream operates on these
// masks, so ground sets are capped at 64 vertices at construction time.
class VertexSet {
public:
    static constexpr int max_ground = 64;

    constexpr VertexSet() : bits_(0) {}

    static constexpr VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        s.bits_ = mask;
        return s;
    }

    static VertexSet full(int n) {
        if (n < 0 || n > max_ground)
            throw std::out_of_range("ground set size out of range: " + std::to_string(n));
        if (n == 0) return {};
        return from_mask(~std::uint64_t{0} >> (max_ground - n));
    }

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.add(v);
        return s;
    }

    constexpr std::uint64_t mask() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    bool contains(int v) const { return v >= 1 && v <= max_ground && ((bits_ >> (v - 1)) & 1); }

    void add(int v) {
        check_label(v);
        bits_ |= bit(v);
    }

    void remove(int v) {
        check_label(v);
        bits_ &= ~bit(v);
    }

    VertexSet with(int v) const {
        VertexSet s = *this;
        s.add(v);
        return s;
    }

    VertexSet without(int v) const {
        VertexSet s = *this;
        s.remove(v);
        return s;
    }

    // Smallest vertex label in the set.
    int minimum() const {
        if (empty()) throw std::logic_error("minimum() of an empty vertex set");
        return std::countr_zero(bits_) + 1;
    }

    bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    bool proper_subset_of(VertexSet other) const { return subset_of(other) && bits_ != other.bits_; }
    bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    VertexSet complement_in(int n) const { return full(n) - *this; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_mask(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_mask(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_mask(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t rest = bits_; rest; rest &= rest - 1)
            out.push_back(std::countr_zero(rest) + 1);
        return out;
    }

    // Range-for over vertex labels in ascending order.
    class iterator {
    public:
        explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_) + 1; }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_;

    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

    static void check_label(int v) {
        if (v < 1 || v > max_ground)
            throw std::out_of_range("vertex label out of range: " + std::to_string(v));
    }
};

// Ascending numeric mask order; the deterministic tie-break order used for
// witness selection and free-face enumeration.
inline bool mask_less(VertexSet a, VertexSet b) { return a.mask() < b.mask(); }

// Lexicographic order on the ascending vertex lists, e.g. {1,3} < {2} and
// {1} < {1,2}; the canonical order for serialized facet lists.
inline bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t ax = a.mask(), bx = b.mask();
    if (ax == bx) return false;
    std::uint64_t diff = ax ^ bx;
    std::uint64_t low = diff & (~diff + 1);  // lowest differing vertex
    std::uint64_t from_low = ~(low - 1);
    if (ax & low) return (bx & from_low) != 0;  // b has later elements, so a's comes first
    return (ax & from_low) == 0;                // a is a proper prefix of b
}

}  // namespace noncover

#endif
