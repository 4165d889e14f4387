#include "regtri/graph6.hpp"

namespace regtri {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

int decode_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw Graph6Error(pos, "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > kMaxByte)
        throw Graph6Error(pos, "byte outside graph6 range 63..126");
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error(0, "empty input");

    std::size_t pos = 0;
    long long n;
    if (text[0] != '~') {
        n = decode_byte(text, pos++);
    } else {
        ++pos;
        if (pos < text.size() && text[pos] == '~')
            throw Graph6Error(pos, "8-byte order form exceeds supported size");
        long long b0 = decode_byte(text, pos);
        long long b1 = decode_byte(text, pos + 1);
        long long b2 = decode_byte(text, pos + 2);
        n = (b0 << 12) | (b1 << 6) | b2;
        pos += 3;
        if (n < 63) throw Graph6Error(1, "long order form used for n < 63");
    }
    if (n > Graph::max_vertices)
        throw Graph6Error(0, "order " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(Graph::max_vertices));

    Graph g(static_cast<int>(n));
    const long long nbits = n * (n - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos != body_bytes)
        throw Graph6Error(text.size(),
                          "body length " + std::to_string(text.size() - pos) + " != expected " +
                              std::to_string(body_bytes));

    long long bit = 0;
    int col = 1, rowv = 0;
    for (std::size_t i = 0; i < body_bytes; ++i) {
        int value = decode_byte(text, pos + i);
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            bool set = (value >> shift) & 1;
            if (bit >= nbits) {
                if (set) throw Graph6Error(pos + i, "nonzero padding bits");
                continue;
            }
            if (set) g.add_edge(rowv, col);
            if (++rowv == col) {
                rowv = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int value = 0, filled = 0;
    for (int col = 1; col < n; ++col)
        for (int rowv = 0; rowv < col; ++rowv) {
            value = (value << 1) | (g.has_edge(rowv, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + kBias));
                value = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kBias));
    return out;
}

}  // namespace regtri
