#pragma once
// ============================================================================
// point: domain elements
//   - interval_point: x in [0,1]
//   - cantor_point: packed word over the two-symbol alphabet {0,2};
//     bit i set means symbol 2 at coordinate i+1; depth = known prefix length
//   - seq_point: finite window of component points (products, sequence spaces)
// ============================================================================

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mdimlab/common.hpp"

namespace mdim {

inline constexpr std::int32_t max_word_depth = 64;

struct interval_point {
    double x = 0.0;
};

struct cantor_point {
    std::uint64_t bits = 0;
    std::int32_t depth = max_word_depth;
};

struct point;

struct seq_point {
    std::vector<point> entries;
};

struct point {
    std::variant<interval_point, cantor_point, seq_point> v;

    point() : v(interval_point{}) {}
    point(interval_point p) : v(p) {}
    point(cantor_point p) : v(p) {}
    point(seq_point p) : v(std::move(p)) {}
};

// checked constructors --------------------------------------------------------

inline interval_point make_interval(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw validation_error("interval point must lie in [0,1]");
    }
    return interval_point{x};
}

inline cantor_point make_cantor(std::uint64_t bits, std::int32_t depth) {
    if (depth < 0 || depth > max_word_depth) {
        throw depth_error("cantor word depth must be in [0,64]");
    }
    if (depth < max_word_depth && (bits >> depth) != 0) {
        throw validation_error("cantor word has symbols beyond its depth");
    }
    return cantor_point{bits, depth};
}

// word from a symbol string like "2020": position n (1-based) is chars[n-1]
cantor_point cantor_from_symbols(const std::string& symbols);
std::string cantor_to_symbols(const cantor_point& p);

// Block index of a word: k when the word starts with exactly k-1 zeros then a
// 2 (so block k words have their first 2 at coordinate k); 0 for the all-zero
// word (the fixed point / unresolved prefix).
inline std::int32_t cantor_block(const cantor_point& p) {
    if (p.bits == 0) return 0;
    const std::int32_t first = __builtin_ctzll(p.bits);  // 0-based coordinate
    return first + 1;
}

}  // namespace mdim
