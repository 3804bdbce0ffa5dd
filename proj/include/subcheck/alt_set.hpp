#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace subcheck {

// A subset of a fixed universe of alternatives, packed into 64-bit words.
// Elements are universe indices in [0, universe_size). Bits at positions
// >= universe_size are always zero, so word-wise comparisons are exact.
// All set algebra touches each word exactly once.
class AltSet {
public:
    using word_type = std::uint64_t;
    static constexpr std::uint32_t word_bits = 64;

    AltSet() = default;

    explicit AltSet(std::uint32_t universe_size)
        : m_(universe_size), words_(words_for(universe_size), 0) {}

    static AltSet of(std::uint32_t universe_size, std::initializer_list<std::uint32_t> elems) {
        AltSet s(universe_size);
        for (auto e : elems) s.set(e);
        return s;
    }

    // Low 64 bits given as a mask; requires universe_size <= 64.
    static AltSet from_mask(std::uint32_t universe_size, std::uint64_t mask) {
        assert(universe_size <= 64);
        AltSet s(universe_size);
        if (!s.words_.empty()) {
            assert(universe_size == 64 || (mask >> universe_size) == 0);
            s.words_[0] = mask;
        } else {
            assert(mask == 0);
        }
        return s;
    }

    std::uint32_t universe_size() const { return m_; }
    std::size_t word_count() const { return words_.size(); }
    word_type word(std::size_t i) const { return words_[i]; }
    const word_type* data() const { return words_.data(); }

    bool test(std::uint32_t i) const {
        assert(i < m_);
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }

    void set(std::uint32_t i) {
        if (i >= m_) throw std::out_of_range("AltSet::set: index outside universe");
        words_[i / word_bits] |= word_type(1) << (i % word_bits);
    }

    void reset(std::uint32_t i) {
        if (i >= m_) throw std::out_of_range("AltSet::reset: index outside universe");
        words_[i / word_bits] &= ~(word_type(1) << (i % word_bits));
    }

    std::uint32_t count() const {
        std::uint32_t c = 0;
        for (word_type w : words_) c += std::uint32_t(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (word_type w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const AltSet& o) const {
        assert(m_ == o.m_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool contains(const AltSet& o) const { return o.is_subset_of(*this); }

    bool intersects(const AltSet& o) const {
        assert(m_ == o.m_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    AltSet operator|(const AltSet& o) const {
        assert(m_ == o.m_);
        AltSet r(m_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    AltSet operator&(const AltSet& o) const {
        assert(m_ == o.m_);
        AltSet r(m_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    // Set difference.
    AltSet operator-(const AltSet& o) const {
        assert(m_ == o.m_);
        AltSet r(m_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    AltSet with(std::uint32_t x) const {
        AltSet r(*this);
        r.set(x);
        return r;
    }

    // Reuses this set's storage; operands must share the universe.
    void assign_union(const AltSet& a, const AltSet& b) {
        assert(a.m_ == b.m_);
        m_ = a.m_;
        words_.resize(a.words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] | b.words_[i];
    }

    // The single member if |this| == 1, otherwise nullopt.
    std::optional<std::uint32_t> sole_element() const {
        std::optional<std::uint32_t> found;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            word_type w = words_[i];
            if (!w) continue;
            if (found || (w & (w - 1))) return std::nullopt;
            found = std::uint32_t(i) * word_bits + std::uint32_t(std::countr_zero(w));
        }
        return found;
    }

    // Smallest element, nullopt if empty.
    std::optional<std::uint32_t> first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return std::uint32_t(i) * word_bits + std::uint32_t(std::countr_zero(words_[i]));
        return std::nullopt;
    }

    // Visits elements in ascending index order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            word_type w = words_[i];
            while (w) {
                f(std::uint32_t(i) * word_bits + std::uint32_t(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> elements() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::uint32_t e) { out.push_back(e); });
        return out;
    }

    std::uint64_t to_mask() const {
        assert(m_ <= 64);
        return words_.empty() ? 0 : words_[0];
    }

    bool operator==(const AltSet&) const = default;

    // Numeric value order (high word first); any strict total order works for
    // deduplication, this one matches ascending-bitmask order for m <= 64.
    bool operator<(const AltSet& o) const {
        assert(m_ == o.m_);
        for (std::size_t i = words_.size(); i-- > 0;) {
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        }
        return false;
    }

private:
    static std::size_t words_for(std::uint32_t m) {
        return (std::size_t(m) + word_bits - 1) / word_bits;
    }

    std::uint32_t m_ = 0;
    std::vector<word_type> words_;
};

}  // namespace subcheck
