#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace p3 {

using Vertex = int;

// Subset of the vertex universe 0..universe-1, stored as a bitset. Two sets
// over the same universe are equal iff their ascending member lists are equal,
// which is also the canonical encoding used for memo keys and ordering.
class VertexSet {
public:
    class Iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        Iterator() = default;
        Iterator(const VertexSet* set, std::size_t word) : set_(set), word_(word) { settle(); }

        Vertex operator*() const {
            return static_cast<Vertex>(word_ * 64 + std::countr_zero(bits_));
        }
        Iterator& operator++() {
            bits_ &= bits_ - 1;
            if (bits_ == 0) {
                ++word_;
                settle();
            }
            return *this;
        }
        Iterator operator++(int) {
            Iterator tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const Iterator& other) const {
            return word_ == other.word_ && bits_ == other.bits_;
        }

    private:
        void settle() {
            const auto& w = set_->words_;
            while (word_ < w.size() && w[word_] == 0) ++word_;
            bits_ = word_ < w.size() ? w[word_] : 0;
            if (word_ >= w.size()) word_ = w.size();
        }

        const VertexSet* set_ = nullptr;
        std::size_t word_ = 0;
        std::uint64_t bits_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, const std::vector<Vertex>& members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    bool is_full() const noexcept { return size_ == universe_; }

    bool contains(Vertex v) const {
        return v >= 0 && static_cast<std::size_t>(v) < universe_ &&
               ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U) != 0;
    }
    // Returns true if the vertex was newly inserted.
    bool insert(Vertex v);
    bool erase(Vertex v);
    void clear();

    Iterator begin() const { return Iterator(this, 0); }
    Iterator end() const { return Iterator(this, words_.size()); }

    // Smallest member, or -1 when empty.
    Vertex first() const;
    std::vector<Vertex> members() const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    VertexSet complement() const;

    bool operator==(const VertexSet& other) const {
        return universe_ == other.universe_ && words_ == other.words_;
    }
    // Lexicographic order of the ascending member lists.
    std::strong_ordering operator<=>(const VertexSet& other) const;

    std::size_t hash() const noexcept;
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    // "{0,3,5}"
    std::string to_string() const;

private:
    void recount();

    std::size_t universe_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace p3
