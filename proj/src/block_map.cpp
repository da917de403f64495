#include "squiral/block_map.hpp"

#include "squiral/errors.hpp"

namespace squiral {

void validate(const BlockMap& map) {
    if (map.size.empty()) throw input_error("block map has no axes");
    for (Int k : map.size)
        if (k < 2) throw input_error("block size must be at least 2 in every direction");
    if (map.cells() != checked_product(map.size))
        throw input_error("entry count does not match block size");
    bool plus = false, minus = false;
    for (std::int8_t v : map.entries) {
        if (v == 1) plus = true;
        else if (v == -1) minus = true;
        else throw input_error("block entries must be +1 or -1");
    }
    if (!plus || !minus) throw input_error("block entries must not be all equal");
}

BlockMap builtin_squiral() {
    BlockMap map;
    map.size = {3, 3};
    map.entries.resize(9);
    for (Int r = 0; r < 3; ++r)
        for (Int s = 0; s < 3; ++s)
            map.entries[r * 3 + s] = (r % 2 == 0 && s % 2 == 0) ? -1 : 1;
    return map;
}

BlockMap flipped(const BlockMap& map) {
    BlockMap out = map;
    for (auto& v : out.entries) v = static_cast<std::int8_t>(-v);
    return out;
}

} // namespace squiral
