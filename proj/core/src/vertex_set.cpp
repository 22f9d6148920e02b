#include "p3/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "p3/errors.hpp"

namespace p3 {

namespace {

void check_member(Vertex v, std::size_t universe) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe) {
        throw ContractError("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe));
    }
}

void check_same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe()) {
        throw ContractError("vertex sets over different universes");
    }
}

}  // namespace

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, const std::vector<Vertex>& members)
    : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty()) {
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
    s.size_ = universe;
    return s;
}

bool VertexSet::insert(Vertex v) {
    check_member(v, universe_);
    auto& w = words_[static_cast<std::size_t>(v) >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (w & bit) return false;
    w |= bit;
    ++size_;
    return true;
}

bool VertexSet::erase(Vertex v) {
    check_member(v, universe_);
    auto& w = words_[static_cast<std::size_t>(v) >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (!(w & bit)) return false;
    w &= ~bit;
    --size_;
    return true;
}

void VertexSet::clear() {
    std::fill(words_.begin(), words_.end(), 0);
    size_ = 0;
}

Vertex VertexSet::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    }
    return -1;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for (Vertex v : *this) out.push_back(v);
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & other.words_[i]) return true;
    }
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    recount();
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    recount();
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    recount();
    return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
    // Walk both member lists in parallel; the first differing member decides,
    // and a proper prefix sorts first.
    auto a = begin();
    auto b = other.begin();
    const auto ea = end();
    const auto eb = other.end();
    for (; a != ea && b != eb; ++a, ++b) {
        if (*a != *b) return *a <=> *b;
    }
    if (a == ea && b == eb) return universe_ <=> other.universe_;
    return a == ea ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t VertexSet::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (std::uint64_t w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (Vertex v : *this) {
        if (!first_member) out += ',';
        out += std::to_string(v);
        first_member = false;
    }
    out += '}';
    return out;
}

void VertexSet::recount() {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    size_ = c;
}

}  // namespace p3
