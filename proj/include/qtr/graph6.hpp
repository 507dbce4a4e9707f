#pragma once

// graph6 interchange format, bit-exact per the de-facto specification:
// header byte 63+n for n <= 62 ('~' escape plus an 18-bit order for larger
// graphs), then the upper triangle in column-major order, 6 bits per byte,
// offset 63, zero padded.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qtr/graph.hpp"

namespace qtr {

class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& message, std::size_t byte_offset)
        : std::runtime_error(message + " (byte " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

inline std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int bits = 0;
    int group = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + group));
                bits = 0;
                group = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (group << (6 - bits))));
    return out;
}

inline Graph graph6_decode(std::string_view line) {
    const auto byte_at = [&](std::size_t pos) -> int {
        if (pos >= line.size())
            throw Graph6ParseError("graph6: truncated input", line.size());
        int c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126)
            throw Graph6ParseError("graph6: byte outside printable range 63..126", pos);
        return c - 63;
    };

    if (line.empty()) throw Graph6ParseError("graph6: empty input", 0);

    std::size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            throw Graph6ParseError("graph6: 36-bit orders are not supported", 1);
        n = (static_cast<long long>(byte_at(1)) << 12) | (byte_at(2) << 6) | byte_at(3);
        pos = 4;
    } else {
        n = byte_at(0);
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw Graph6ParseError("graph6: order must be between 1 and 64, got " + std::to_string(n), 0);

    const long long bit_count = n * (n - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((bit_count + 5) / 6);
    if (line.size() < pos + body_bytes)
        throw Graph6ParseError("graph6: truncated bit field, expected " +
                                   std::to_string(body_bytes) + " body bytes",
                               line.size());
    if (line.size() > pos + body_bytes)
        throw Graph6ParseError("graph6: trailing data after bit field", pos + body_bytes);

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t at = pos + static_cast<std::size_t>(bit / 6);
            int shift = 5 - static_cast<int>(bit % 6);
            if ((byte_at(at) >> shift) & 1) g.add_edge(i, j);
        }
    }
    // padding bits must be zero, otherwise encode(decode(s)) != s
    for (long long pad = bit; pad < static_cast<long long>(body_bytes) * 6; ++pad) {
        std::size_t at = pos + static_cast<std::size_t>(pad / 6);
        int shift = 5 - static_cast<int>(pad % 6);
        if ((byte_at(at) >> shift) & 1)
            throw Graph6ParseError("graph6: nonzero padding bit", at);
    }
    return g;
}

}  // namespace qtr
