#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "regtri/graph.hpp"

namespace regtri {

// Parse/format error with the byte offset of the offending character.
struct Graph6Error : std::runtime_error {
    Graph6Error(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6 at byte " + std::to_string(offset) + ": " + what),
          offset(offset) {}
    std::size_t offset;
};

// Header-less graph6: 6-bit groups (value + 63), upper triangle in column
// order. Short form for n < 63, 4-byte long form for 63 <= n < 258048.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace regtri
