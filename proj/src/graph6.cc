/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kem/graph6.hh>

#include <utility>
#include <vector>

using std::pair;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

using namespace kem;

namespace
{
    constexpr int graph6_offset = 63;
    constexpr long long max_graph6_order = 258047;

    auto sextet(string_view text, std::size_t pos) -> int
    {
        unsigned char c = text[pos];
        if (c < 63 || c > 126)
            throw InvalidInput{ "graph6 character out of range at position " + to_string(pos) };
        return c - graph6_offset;
    }
}

auto kem::parse_graph6(string_view text) -> Graph
{
    constexpr string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());

    if (text.empty())
        throw InvalidInput{ "empty graph6 record" };

    std::size_t pos = 0;
    long long n = sextet(text, pos++);
    if (n == 63) {
        if (text.size() < 4)
            throw InvalidInput{ "malformed graph6 length header" };
        if (text[1] == '~')
            throw InvalidInput{ "graph6 orders above " + to_string(max_graph6_order) + " are not supported" };
        n = 0;
        for (int i = 0 ; i < 3 ; ++i)
            n = (n << 6) | sextet(text, pos++);
        if (n < 63)
            throw InvalidInput{ "malformed graph6 length header" };
    }

    if (n < 1)
        throw InvalidInput{ "graph6 record has no vertices" };

    long long bits = n * (n - 1) / 2;
    long long chars = (bits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) != chars)
        throw InvalidInput{ "graph6 record has " + to_string(text.size() - pos) + " data characters, expected " + to_string(chars) };

    vector<pair<int, int> > edges;
    long long k = 0;
    for (long long j = 1 ; j < n ; ++j)
        for (long long i = 0 ; i < j ; ++i, ++k) {
            int s = sextet(text, pos + k / 6);
            if (s & (1 << (5 - k % 6)))
                edges.emplace_back(int(i), int(j));
        }

    for ( ; k < chars * 6 ; ++k)
        if (sextet(text, pos + k / 6) & (1 << (5 - k % 6)))
            throw InvalidInput{ "graph6 record has nonzero padding bits" };

    return Graph{ int(n), edges };
}

auto kem::emit_graph6(const Graph & g) -> string
{
    long long n = g.p();
    string result;
    if (n <= 62)
        result.push_back(char(n + graph6_offset));
    else {
        result.push_back('~');
        for (int shift = 12 ; shift >= 0 ; shift -= 6)
            result.push_back(char(((n >> shift) & 63) + graph6_offset));
    }

    long long bits = n * (n - 1) / 2;
    vector<int> data((bits + 5) / 6, 0);
    for (auto & e : g.edges()) {
        long long k = (long long)(e.v) * (e.v - 1) / 2 + e.u;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    for (int d : data)
        result.push_back(char(d + graph6_offset));
    return result;
}
