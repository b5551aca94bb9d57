#include "mdimlab/point.hpp"

namespace mdim {

cantor_point cantor_from_symbols(const std::string& symbols) {
    if (symbols.size() > static_cast<std::size_t>(max_word_depth)) {
        throw depth_error("word longer than the packed capacity (64)");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const char c = symbols[i];
        if (c == '2') {
            bits |= (std::uint64_t{1} << i);
        } else if (c != '0') {
            throw validation_error("word symbols must be 0 or 2");
        }
    }
    return cantor_point{bits, static_cast<std::int32_t>(symbols.size())};
}

std::string cantor_to_symbols(const cantor_point& p) {
    std::string s(static_cast<std::size_t>(p.depth), '0');
    for (std::int32_t i = 0; i < p.depth; ++i) {
        if ((p.bits >> i) & 1u) s[static_cast<std::size_t>(i)] = '2';
    }
    return s;
}

}  // namespace mdim
