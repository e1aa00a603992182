#include "sg/graph6.hpp"

#include <vector>

namespace sg {

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        // long form: '~' then n in 18 bits, big-endian 6-bit groups
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view s) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > s.size())
            throw decode_error("truncated graph6 string", s.size());
    };
    auto byte = [&](std::size_t at) -> int {
        int c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126)
            throw decode_error("byte out of graph6 range", at);
        return c - 63;
    };
    need(1);
    long n;
    if (s[0] == 126) {
        need(4);
        if (s[1] == 126)
            throw decode_error("8-byte order form not supported", 1);
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        if (n <= 62)
            throw decode_error("long order form used for a small order", 0);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    if (n < 1)
        throw decode_error("order must be >= 1", 0);
    if (n > Graph::kMaxOrder)
        throw capacity_error("graph6 order " + std::to_string(n) + " exceeds capacity");

    long bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos != body)
        throw decode_error("body length mismatch", s.size());

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    long bit = 0;
    for (std::size_t k = 0; k < body; ++k) {
        int v = byte(pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= bits) {
                if ((v >> b) & 1)
                    throw decode_error("nonzero padding bits", pos + k);
                continue;
            }
            if ((v >> b) & 1) {
                // column-major upper triangle: bit index -> (i, j)
                long r = bit, j = 1;
                while (r >= j) r -= j, ++j;
                rows[static_cast<std::size_t>(r)] |= std::uint64_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << r;
            }
        }
    }
    return Graph::from_rows(static_cast<int>(n), rows);
}

std::string dot_export(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.order(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j))
                out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

} // namespace sg
