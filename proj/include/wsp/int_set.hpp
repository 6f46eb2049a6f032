#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace wsp {

/// Integers handled by the artifact. Zero is never a valid element.
using Element = std::uint32_t;

/// A set of positive integers backed by a dense bitmap.
///
/// Bit k of the bitmap is set iff k is a member; bit 0 is always clear. The
/// word vector always carries one trailing zero word so that unaligned 64-bit
/// windows (see window()) can be read without bounds checks.
class IntSet
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    class const_iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Element;
        using difference_type = std::ptrdiff_t;
        using pointer = const Element*;
        using reference = Element;

        const_iterator() = default;
        const_iterator(const IntSet* set, std::size_t word);

        Element operator*() const { return current_; }
        const_iterator& operator++();
        const_iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const const_iterator& other) const
        {
            return word_ == other.word_ && pending_ == other.pending_;
        }

    private:
        void settle();

        const IntSet* set_ = nullptr;
        std::size_t word_ = 0;
        Word pending_ = 0;
        Element current_ = 0;
    };

    IntSet();
    IntSet(std::initializer_list<Element> values);
    explicit IntSet(std::span<const Element> values);

    /// Inserts v; throws std::invalid_argument for v == 0.
    void insert(Element v);
    /// Inserts every integer in [lo, hi].
    void insert_range(Element lo, Element hi);

    [[nodiscard]] bool contains(std::uint64_t v) const
    {
        return v / word_bits < words_.size() && ((words_[v / word_bits] >> (v % word_bits)) & 1U);
    }

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] bool empty() const { return size_ == 0; }
    /// Largest element, 0 for the empty set.
    [[nodiscard]] Element max() const { return max_; }
    /// Smallest element, 0 for the empty set.
    [[nodiscard]] Element min() const;

    [[nodiscard]] const_iterator begin() const { return {this, 0}; }
    [[nodiscard]] const_iterator end() const { return {this, words_.size()}; }

    [[nodiscard]] std::vector<Element> to_vector() const;

    /// Raw bitmap, including the trailing zero word.
    [[nodiscard]] std::span<const Word> words() const { return words_; }

    /// 64 bits of membership starting at bit `offset`: bit j of the result is
    /// set iff offset + j is a member.
    [[nodiscard]] Word window(std::size_t offset) const
    {
        const std::size_t w = offset / word_bits;
        const unsigned shift = offset % word_bits;
        if (w >= words_.size())
            return 0;
        Word lo = words_[w] >> shift;
        if (shift != 0 && w + 1 < words_.size())
            lo |= words_[w + 1] << (word_bits - shift);
        return lo;
    }

    /// True iff every element of this set is in `other`.
    [[nodiscard]] bool is_subset_of(const IntSet& other) const;

    friend bool operator==(const IntSet& a, const IntSet& b);

private:
    void grow_to(Element v);

    std::vector<Word> words_;
    std::size_t size_ = 0;
    Element max_ = 0;
};

} // namespace wsp
