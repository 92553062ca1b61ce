// graph6 text encoding: header byte 63+n for n <= 62, '~' + 3 six-bit groups
// for larger n, then the upper triangle column-major in 6-bit groups offset by 63.
#pragma once

#include <srg/graphs.hpp>

#include <string>
#include <string_view>

namespace srg {

struct ParseError : std::runtime_error {
    std::size_t offset;

    ParseError(const std::string& message, std::size_t at)
        : std::runtime_error(message + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace srg
