#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ramsey {

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + word_bits - 1) / word_bits; }

inline std::size_t popcount(std::span<const Word> a)
{
    std::size_t total = 0;
    for (Word w : a)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

inline std::size_t intersection_count(std::span<const Word> a, std::span<const Word> b)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

template <class F>
void for_each_bit(std::span<const Word> words, F&& f)
{
    for (std::size_t i = 0; i < words.size(); ++i) {
        Word w = words[i];
        while (w) {
            const int b = std::countr_zero(w);
            f(static_cast<int>(i * word_bits + static_cast<std::size_t>(b)));
            w &= w - 1;
        }
    }
}

/// A set of vertex indices of a host graph, stored as a fixed-width bit-set.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

    static VertexSet of(std::size_t universe, std::initializer_list<int> members);
    static VertexSet of(std::size_t universe, std::span<const int> members);
    static VertexSet full(std::size_t universe);
    static VertexSet range(std::size_t universe, int first, int last);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return popcount(words_); }
    bool empty() const noexcept;

    bool contains(int v) const noexcept
    {
        const auto i = static_cast<std::size_t>(v);
        return i < universe_ && ((words_[i / word_bits] >> (i % word_bits)) & 1U);
    }
    void insert(int v);
    void erase(int v);

    std::vector<int> members() const;

    template <class F>
    void for_each(F&& f) const
    {
        for_each_bit(words_, std::forward<F>(f));
    }

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    VertexSet& operator&=(std::span<const Word> other);
    VertexSet& operator&=(const VertexSet& other) { return *this &= other.words(); }
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    bool intersects(const VertexSet& other) const noexcept;
    bool subset_of(const VertexSet& other) const noexcept;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

inline VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
inline VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
inline VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

} // namespace ramsey
