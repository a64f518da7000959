/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kem/graph.hh>

#include <algorithm>
#include <functional>
#include <set>

using std::pair;
using std::set;
using std::string;
using std::to_string;
using std::vector;

using namespace kem;

InvalidInput::InvalidInput(const string & what) :
    std::invalid_argument(what)
{
}

CapExceeded::CapExceeded(const string & what) :
    std::runtime_error(what)
{
}

namespace
{
    auto pair_str(int u, int v) -> string
    {
        return "(" + to_string(u) + "," + to_string(v) + ")";
    }
}

Graph::Graph(int p, const vector<pair<int, int> > & edges) :
    _p(p)
{
    if (p < 1)
        throw InvalidInput{ "graph must have at least one vertex, got p=" + to_string(p) };

    set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= p || v >= p)
            throw InvalidInput{ "edge " + pair_str(u, v) + " has an endpoint out of range for p=" + to_string(p) };
        if (u == v)
            throw InvalidInput{ "self-loop " + pair_str(u, v) };
        Edge e{ std::min(u, v), std::max(u, v) };
        if (! seen.insert(e).second)
            throw InvalidInput{ "duplicate edge " + pair_str(u, v) };
    }
    _edges.assign(seen.begin(), seen.end());
}

auto Graph::has_edge(int u, int v) const -> bool
{
    return edge_index(u, v) >= 0;
}

auto Graph::edge_index(int u, int v) const -> int
{
    Edge e{ std::min(u, v), std::max(u, v) };
    auto it = std::lower_bound(_edges.begin(), _edges.end(), e);
    if (it == _edges.end() || *it != e)
        return -1;
    return int(it - _edges.begin());
}

auto Graph::degrees() const -> vector<int>
{
    vector<int> result(_p, 0);
    for (auto & e : _edges) {
        ++result[e.u];
        ++result[e.v];
    }
    return result;
}

auto Graph::adjacency() const -> vector<vector<int> >
{
    vector<vector<int> > result(_p);
    for (auto & e : _edges) {
        result[e.u].push_back(e.v);
        result[e.v].push_back(e.u);
    }
    return result;
}

auto Graph::relabelled(const vector<int> & perm) const -> Graph
{
    vector<pair<int, int> > mapped;
    mapped.reserve(_edges.size());
    for (auto & e : _edges)
        mapped.emplace_back(perm.at(e.u), perm.at(e.v));
    return Graph{ _p, mapped };
}

auto kem::graph_from_edges(int p, const vector<pair<int, int> > & edges) -> Graph
{
    return Graph{ p, edges };
}

auto kem::degree_sequence(const Graph & g) -> vector<int>
{
    auto d = g.degrees();
    std::sort(d.begin(), d.end(), std::greater<>{});
    return d;
}

auto kem::is_connected(const Graph & g) -> bool
{
    auto adj = g.adjacency();
    vector<bool> seen(g.p(), false);
    vector<int> stack{ 0 };
    seen[0] = true;
    int count = 1;
    while (! stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (! seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.p();
}
