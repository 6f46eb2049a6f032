#include "wsp/int_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wsp {

IntSet::const_iterator::const_iterator(const IntSet* set, std::size_t word) : set_(set), word_(word)
{
    if (word_ < set_->words_.size())
        pending_ = set_->words_[word_];
    settle();
}

void IntSet::const_iterator::settle()
{
    const auto& words = set_->words_;
    while (pending_ == 0) {
        if (++word_ >= words.size()) {
            word_ = words.size();
            return;
        }
        pending_ = words[word_];
    }
    current_ = static_cast<Element>(word_ * word_bits + std::countr_zero(pending_));
}

IntSet::const_iterator& IntSet::const_iterator::operator++()
{
    pending_ &= pending_ - 1;
    settle();
    return *this;
}

IntSet::IntSet() : words_(1, 0) {}

IntSet::IntSet(std::initializer_list<Element> values) : IntSet(std::span<const Element>(values.begin(), values.size())) {}

IntSet::IntSet(std::span<const Element> values) : IntSet()
{
    if (!values.empty())
        grow_to(*std::max_element(values.begin(), values.end()));
    for (Element v : values)
        insert(v);
}

void IntSet::grow_to(Element v)
{
    const std::size_t needed = v / word_bits + 2;
    if (words_.size() < needed)
        words_.resize(needed, 0);
}

void IntSet::insert(Element v)
{
    if (v == 0)
        throw std::invalid_argument("IntSet elements must be positive");
    grow_to(v);
    Word& w = words_[v / word_bits];
    const Word bit = Word{1} << (v % word_bits);
    if ((w & bit) == 0) {
        w |= bit;
        ++size_;
        max_ = std::max(max_, v);
    }
}

void IntSet::insert_range(Element lo, Element hi)
{
    if (lo > hi)
        return;
    grow_to(hi);
    for (std::uint64_t v = lo; v <= hi; ++v)
        insert(static_cast<Element>(v));
}

Element IntSet::min() const
{
    return empty() ? 0 : *begin();
}

std::vector<Element> IntSet::to_vector() const
{
    std::vector<Element> out;
    out.reserve(size_);
    for (Element v : *this)
        out.push_back(v);
    return out;
}

bool IntSet::is_subset_of(const IntSet& other) const
{
    const auto theirs = other.words();
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const Word t = i < theirs.size() ? theirs[i] : 0;
        if ((words_[i] & ~t) != 0)
            return false;
    }
    return true;
}

bool operator==(const IntSet& a, const IntSet& b)
{
    if (a.size_ != b.size_ || a.max_ != b.max_)
        return false;
    const std::size_t used = a.max_ / IntSet::word_bits + 1;
    return std::equal(a.words_.begin(), a.words_.begin() + static_cast<std::ptrdiff_t>(used), b.words_.begin());
}

} // namespace wsp
