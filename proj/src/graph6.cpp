#include <srg/graph6.hpp>

namespace srg {

namespace {

constexpr int kOffset = 63;
constexpr int kLongHeader = 126;  // '~'

}  // namespace

std::string graph6_encode(const Graph& g) {
    const std::size_t n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kOffset + n));
    } else {
        // 63 <= n <= 258047: '~' then n in three 6-bit groups, most significant first.
        out.push_back(static_cast<char>(kLongHeader));
        out.push_back(static_cast<char>(kOffset + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(kOffset + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(kOffset + (n & 0x3f)));
    }

    int group = 0;
    int bits_in_group = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits_in_group == 6) {
                out.push_back(static_cast<char>(kOffset + group));
                group = 0;
                bits_in_group = 0;
            }
        }
    if (bits_in_group > 0) {
        group <<= (6 - bits_in_group);
        out.push_back(static_cast<char>(kOffset + group));
    }
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t count) {
        if (pos + count > text.size()) throw ParseError("unexpected end of graph6 data", text.size());
    };
    auto sixbits = [&]() {
        need(1);
        const unsigned char ch = static_cast<unsigned char>(text[pos]);
        if (ch < kOffset || ch > kOffset + 63) throw ParseError("byte out of graph6 range", pos);
        ++pos;
        return static_cast<std::size_t>(ch - kOffset);
    };

    need(1);
    std::size_t n;
    if (static_cast<unsigned char>(text[0]) == kLongHeader) {
        ++pos;
        const std::size_t hi = sixbits();
        const std::size_t mid = sixbits();
        const std::size_t lo = sixbits();
        n = (hi << 12) | (mid << 6) | lo;
        if (n <= 62) throw ParseError("long-form header used for a small graph", 0);
    } else {
        n = sixbits();
    }
    if (n > Graph::max_vertices)
        throw ParseError("graph order " + std::to_string(n) + " exceeds the supported cap", 0);

    BitMatrix adj(n, n);
    int group = 0;
    int bits_left = 0;
    std::size_t group_pos = pos;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (bits_left == 0) {
                group_pos = pos;
                group = static_cast<int>(sixbits());
                bits_left = 6;
            }
            if (group & 0x20) {
                adj.set(i, j, true);
                adj.set(j, i, true);
            }
            group <<= 1;
            group &= 0x3f;
            --bits_left;
        }
    if (bits_left > 0 && group != 0) throw ParseError("nonzero padding bits", group_pos);
    if (pos != text.size()) throw ParseError("trailing bytes after graph6 data", pos);
    return Graph(std::move(adj));
}

}  // namespace srg
