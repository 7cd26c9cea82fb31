#ifndef BICOVER_COVER_IO_HPP
#define BICOVER_COVER_IO_HPP

#include <bicover/cover.hpp>

#include <string>
#include <string_view>

namespace bicover
{
    // Canonical cover file format, bit-exact:
    //   {"n":<int>,"bicliques":[{"left":[<int>...],"right":[<int>...]},...]}
    // UTF-8, compact, keys in that order, sides ascending, no trailing
    // whitespace. parse(serialize(c)) == c.
    auto serialize_cover(const CoverSpec & cover) -> std::string;

    // Accepts the canonical format (side arrays in any order, duplicates
    // rejected). Throws InputError naming the bad field or biclique index.
    auto parse_cover(std::string_view text) -> CoverSpec;
}

#endif
