#include "ramsey/coloring.hpp"

#include "ramsey/errors.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ramsey {

std::string_view to_string(Color c) noexcept
{
    return c == Color::red ? "red" : "blue";
}

TwoColoring::TwoColoring(Graph host, std::vector<Word> red_bits) : host_(std::move(host)), red_bits_(std::move(red_bits))
{
    const auto m = static_cast<std::size_t>(host_.edge_count());
    red_bits_.resize(words_for(m), 0);
    if (m % word_bits != 0 && !red_bits_.empty())
        red_bits_.back() &= (Word{1} << (m % word_bits)) - 1;
    GraphBuilder red(host_.vertex_count());
    GraphBuilder blue(host_.vertex_count());
    std::size_t index = 0;
    for (int u = 0; u < host_.vertex_count(); ++u)
        for_each_bit(host_.row(u), [&](int v) {
            if (v <= u)
                return;
            if ((red_bits_[index / word_bits] >> (index % word_bits)) & 1U)
                red.add_edge_unchecked(u, v);
            else
                blue.add_edge_unchecked(u, v);
            ++index;
        });
    red_ = std::move(red).build();
    blue_ = std::move(blue).build();
}

TwoColoring TwoColoring::monochromatic(Graph host, Color c)
{
    std::vector<Word> bits(words_for(static_cast<std::size_t>(host.edge_count())), c == Color::red ? ~Word{0} : Word{0});
    return TwoColoring(std::move(host), std::move(bits));
}

Color TwoColoring::color(int u, int v) const
{
    const auto index = host_.edge_index(u, v);
    if (index < 0)
        throw InputError("not an edge: " + std::to_string(u) + " " + std::to_string(v));
    const auto i = static_cast<std::size_t>(index);
    return ((red_bits_[i / word_bits] >> (i % word_bits)) & 1U) ? Color::red : Color::blue;
}

TwoColoring TwoColoring::swapped() const
{
    std::vector<Word> bits = red_bits_;
    for (auto& w : bits)
        w = ~w;
    return TwoColoring(host_, std::move(bits));
}

TwoColoring read_coloring(std::istream& in)
{
    std::string line;
    int line_no = 0;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            const auto first = out.find_first_not_of(" \t\r");
            if (first == std::string::npos || out[first] == '#')
                continue;
            return true;
        }
        return false;
    };
    if (!next_content_line(line))
        throw ParseError("coloring: missing vertex count line");
    long long n = -1;
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> n) || n < 0 || (ls >> extra))
            throw ParseError("coloring line " + std::to_string(line_no) + ": expected a vertex count");
    }
    if (n > (1 << 20))
        throw LimitsError("coloring: vertex count exceeds 2^20");
    GraphBuilder builder(static_cast<int>(n));
    std::vector<std::pair<Edge, Color>> colored;
    while (next_content_line(line)) {
        std::istringstream ls(line);
        long long u = -1, v = -1;
        std::string tag, extra;
        if (!(ls >> u >> v >> tag) || (ls >> extra) || (tag != "r" && tag != "b"))
            throw ParseError("coloring line " + std::to_string(line_no) + ": expected \"u v r|b\"");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("coloring line " + std::to_string(line_no) + ": invalid edge");
        if (builder.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("coloring line " + std::to_string(line_no) + ": edge listed twice");
        builder.add_edge(static_cast<int>(u), static_cast<int>(v));
        colored.push_back({{static_cast<int>(u), static_cast<int>(v)}, tag == "r" ? Color::red : Color::blue});
    }
    Graph host = std::move(builder).build();
    std::vector<Word> bits(words_for(static_cast<std::size_t>(host.edge_count())), 0);
    for (const auto& [e, c] : colored)
        if (c == Color::red) {
            const auto i = static_cast<std::size_t>(host.edge_index(e.u, e.v));
            bits[i / word_bits] |= Word{1} << (i % word_bits);
        }
    return TwoColoring(std::move(host), std::move(bits));
}

TwoColoring read_coloring_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open coloring file " + path);
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const TwoColoring& c)
{
    out << c.host().vertex_count() << '\n';
    std::size_t index = 0;
    const auto bits = c.red_bits();
    for (const auto& e : c.host().edges()) {
        const bool red = (bits[index / word_bits] >> (index % word_bits)) & 1U;
        out << e.u << ' ' << e.v << ' ' << (red ? 'r' : 'b') << '\n';
        ++index;
    }
}

} // namespace ramsey
