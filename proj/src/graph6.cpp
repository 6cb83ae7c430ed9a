#include "thetakit/graph.hpp"

namespace thetakit {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

int decode_byte(unsigned char c) {
    if (c < kOffset || c > kMaxByte)
        throw Graph6Error(Graph6Error::Kind::bad_char,
                          "graph6: byte outside printable range 63..126");
    return c - kOffset;
}

} // namespace

Graph parse_graph6(const std::string& text, int long_form_cap) {
    if (text.empty())
        throw Graph6Error(Graph6Error::Kind::bad_header, "graph6: empty input");

    std::size_t pos = 0;
    long long n = 0;
    if (static_cast<unsigned char>(text[0]) < kOffset || static_cast<unsigned char>(text[0]) > kMaxByte)
        throw Graph6Error(Graph6Error::Kind::bad_header, "graph6: malformed header byte");
    if (static_cast<unsigned char>(text[0]) == 126) {
        // Long form: '~' then three bytes of an 18-bit count. The 8-byte
        // form ('~~') is beyond the cap and rejected as overlong.
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw Graph6Error(Graph6Error::Kind::overlong,
                              "graph6: 36-bit vertex counts not supported");
        if (text.size() < 4)
            throw Graph6Error(Graph6Error::Kind::bad_header,
                              "graph6: truncated long-form header");
        for (int k = 1; k <= 3; ++k)
            n = (n << 6) | decode_byte(static_cast<unsigned char>(text[k]));
        pos = 4;
        if (n > long_form_cap)
            throw Graph6Error(Graph6Error::Kind::overlong,
                              "graph6: vertex count " + std::to_string(n) +
                                  " exceeds cap " + std::to_string(long_form_cap));
    } else {
        n = decode_byte(static_cast<unsigned char>(text[0]));
        pos = 1;
    }
    if (n < 1)
        throw Graph6Error(Graph6Error::Kind::bad_header, "graph6: vertex count must be >= 1");

    const long long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos < need)
        throw Graph6Error(Graph6Error::Kind::truncated, "graph6: truncated bit stream");
    if (text.size() - pos > need)
        throw Graph6Error(Graph6Error::Kind::trailing, "graph6: trailing bytes after bit stream");

    Graph g(static_cast<int>(n));
    long long bit = 0;
    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const int byte = decode_byte(static_cast<unsigned char>(text[pos + bit / 6]));
            if (byte & (1 << (5 - bit % 6))) g.add_edge(u, v);
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.n();
    if (n > 62)
        throw std::invalid_argument("write_graph6: encoder handles short form only (n <= 62)");
    std::string out;
    out.push_back(static_cast<char>(n + kOffset));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kOffset));
    return out;
}

} // namespace thetakit
