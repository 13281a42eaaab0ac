#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bisectlab/graph.hpp"

namespace bisectlab {

// graph6 text format, short form only (n <= 62): one header byte 63+n,
// then ceil(n(n-1)/2 / 6) payload bytes carrying the upper triangle of the
// adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),... packed
// big-endian six bits per byte, zero-padded, each byte offset by 63.

struct Graph6Error : std::runtime_error {
    std::size_t offset;
    Graph6Error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte offset " + std::to_string(off) + ")"), offset(off) {}
};

inline SimpleGraph parse_graph6(std::string_view line) {
    // Tolerate the optional ">>graph6<<" prefix and a trailing newline.
    if (line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw Graph6Error("empty graph6 record", 0);

    const unsigned char head = static_cast<unsigned char>(line[0]);
    if (head == 126) throw Graph6Error("long-form graph6 (n > 62) not supported", 0);
    if (head < 63 || head > 63 + 62) throw Graph6Error("invalid graph6 header byte", 0);
    const int n = head - 63;

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() - 1 < nbytes) throw Graph6Error("truncated graph6 payload", line.size());
    if (line.size() - 1 > nbytes) throw Graph6Error("trailing garbage after graph6 payload", 1 + nbytes);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const std::size_t byte_idx = 1 + bit / 6;
            const unsigned char c = static_cast<unsigned char>(line[byte_idx]);
            if (c < 63 || c > 126) throw Graph6Error("payload byte out of range", byte_idx);
            if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits must be zero.
    for (; bit < nbytes * 6; ++bit) {
        const std::size_t byte_idx = 1 + bit / 6;
        const unsigned char c = static_cast<unsigned char>(line[byte_idx]);
        if (c < 63 || c > 126) throw Graph6Error("payload byte out of range", byte_idx);
        if ((c - 63) >> (5 - bit % 6) & 1) throw Graph6Error("nonzero padding bit", byte_idx);
    }
    return SimpleGraph(n, std::move(edges));
}

inline std::string write_graph6(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("write_graph6: n > 62 unsupported");
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string out(1 + (nbits + 5) / 6, static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.adjacent(u, v)) out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
    return out;
}

}  // namespace bisectlab
