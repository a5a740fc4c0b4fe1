#include "ramsey/vertex_set.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <string>

namespace ramsey {

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<int> members)
{
    return of(universe, std::span<const int>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::size_t universe, std::span<const int> members)
{
    VertexSet s(universe);
    for (int v : members)
        s.insert(v);
    return s;
}

VertexSet VertexSet::full(std::size_t universe)
{
    return range(universe, 0, static_cast<int>(universe));
}

VertexSet VertexSet::range(std::size_t universe, int first, int last)
{
    VertexSet s(universe);
    for (int v = first; v < last; ++v)
        s.insert(v);
    return s;
}

bool VertexSet::empty() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::insert(int v)
{
    if (v < 0 || static_cast<std::size_t>(v) >= universe_)
        throw InputError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    const auto i = static_cast<std::size_t>(v);
    words_[i / word_bits] |= Word{1} << (i % word_bits);
}

void VertexSet::erase(int v)
{
    if (v < 0 || static_cast<std::size_t>(v) >= universe_)
        return;
    const auto i = static_cast<std::size_t>(v);
    words_[i / word_bits] &= ~(Word{1} << (i % word_bits));
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

VertexSet& VertexSet::operator&=(std::span<const Word> other)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= i < other.size() ? other[i] : 0;
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    if (other.universe_ > universe_) {
        universe_ = other.universe_;
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t i = 0; i < other.words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept
{
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

bool VertexSet::subset_of(const VertexSet& other) const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const Word o = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~o)
            return false;
    }
    return true;
}

} // namespace ramsey
