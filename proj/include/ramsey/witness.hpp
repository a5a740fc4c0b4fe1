#pragma once

#include "ramsey/coloring.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

/// Triangle accounting of a fixed coloring. m_r + m_b + m_rb == t always.
struct ColoringCounts {
    std::int64_t t = 0;
    std::int64_t m_r = 0;
    std::int64_t m_b = 0;
    std::int64_t m_rb = 0;
    std::int64_t m = 0;
    friend bool operator==(const ColoringCounts&, const ColoringCounts&) = default;
};

/// A monochromatic book (spine is a clique) or biclique (spine is any k-set):
/// every spine-page pair, and for books every spine pair, is an edge of `color`.
struct BookWitness {
    Color color = Color::red;
    std::vector<int> spine;
    std::vector<int> pages;
};

/// M_rb from (1/2) sum_v e(N_R(v), N_B(v)); M_r, M_b from same-color codegree sums over
/// monochromatic edges. Throws InternalError if the pieces do not add up to T.
ColoringCounts goodman_counts(const TwoColoring& c);

/// Monochromatic B_n^(k): a k-clique of one color with at least n common neighbors in that color.
std::optional<BookWitness> find_mono_book(const TwoColoring& c, int k, int n);

/// Monochromatic K_{k,n}: k vertices with at least n common neighbors in one color.
std::optional<BookWitness> find_mono_biclique(const TwoColoring& c, int k, int n);

/// Largest common same-color neighborhood of a k-clique of `color`; 0 if there is no such clique.
std::int64_t max_book_size(const TwoColoring& c, Color color, int k);

/// Re-checks a witness against the coloring from scratch.
bool verify_book(const TwoColoring& c, const BookWitness& w, int k, int n);
bool verify_biclique(const TwoColoring& c, const BookWitness& w, int k, int n);

} // namespace ramsey
