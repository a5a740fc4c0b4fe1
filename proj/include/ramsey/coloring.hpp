#pragma once

#include "ramsey/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

enum class Color : std::uint8_t { red, blue };

inline constexpr Color other(Color c) noexcept { return c == Color::red ? Color::blue : Color::red; }
std::string_view to_string(Color c) noexcept;

/// A red/blue assignment to the edges of a host graph. Immutable; the red and blue
/// subgraphs are materialized at construction.
class TwoColoring {
public:
    TwoColoring() = default;
    /// `red_bits` has one bit per canonical edge index of `host`; unset means blue.
    TwoColoring(Graph host, std::vector<Word> red_bits);

    template <class ColorOf> // Color color_of(int u, int v), called with u < v
    static TwoColoring from_function(Graph host, ColorOf&& color_of)
    {
        std::vector<Word> bits(words_for(static_cast<std::size_t>(host.edge_count())), 0);
        std::size_t index = 0;
        for (const auto& e : host.edges()) {
            if (color_of(e.u, e.v) == Color::red)
                bits[index / word_bits] |= Word{1} << (index % word_bits);
            ++index;
        }
        return TwoColoring(std::move(host), std::move(bits));
    }

    static TwoColoring monochromatic(Graph host, Color c);

    const Graph& host() const noexcept { return host_; }
    const Graph& subgraph(Color c) const noexcept { return c == Color::red ? red_ : blue_; }
    std::span<const Word> red_bits() const noexcept { return red_bits_; }

    /// Color of host edge {u, v}; throws InputError when it is not an edge.
    Color color(int u, int v) const;
    std::int64_t red_count() const noexcept { return red_.edge_count(); }

    TwoColoring swapped() const;

    friend bool operator==(const TwoColoring& a, const TwoColoring& b)
    {
        return a.host_ == b.host_ && a.red_bits_ == b.red_bits_;
    }

private:
    Graph host_;
    std::vector<Word> red_bits_;
    Graph red_;
    Graph blue_;
};

inline const Graph& color_subgraph(const TwoColoring& c, Color color) { return c.subgraph(color); }

/// Coloring file format: the edge-list format with a third column "r" or "b".
TwoColoring read_coloring(std::istream& in);
TwoColoring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const TwoColoring& c);

} // namespace ramsey
