/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kem/canonical.hh>
#include <kem/graph6.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>

using std::string;
using std::to_string;
using std::vector;

using namespace kem;

namespace
{
    struct CanonicalSearch
    {
        int p;
        vector<std::uint32_t> adj;
        vector<int> cell_of_position;
        vector<int> cell_of_vertex;

        vector<int> order, best_order;
        vector<std::uint32_t> best_columns, columns;
        bool have_best = false;
        std::uint32_t placed = 0;

        explicit CanonicalSearch(const Graph & g) :
            p(g.p()),
            adj(g.p(), 0),
            cell_of_position(g.p()),
            cell_of_vertex(g.p()),
            order(g.p()),
            best_columns(g.p(), 0),
            columns(g.p(), 0)
        {
            for (auto & e : g.edges()) {
                adj[e.u] |= std::uint32_t{ 1 } << e.v;
                adj[e.v] |= std::uint32_t{ 1 } << e.u;
            }

            // cells are degree classes, highest degree first
            auto deg = g.degrees();
            vector<int> by_degree(p);
            std::iota(by_degree.begin(), by_degree.end(), 0);
            std::stable_sort(by_degree.begin(), by_degree.end(), [&] (int a, int b) { return deg[a] > deg[b]; });
            int cell = 0;
            for (int pos = 0 ; pos < p ; ++pos) {
                if (pos > 0 && deg[by_degree[pos]] != deg[by_degree[pos - 1]])
                    ++cell;
                cell_of_position[pos] = cell;
                cell_of_vertex[by_degree[pos]] = cell;
            }
        }

        auto twins(int u, int w) const -> bool
        {
            std::uint32_t mask = ~((std::uint32_t{ 1 } << u) | (std::uint32_t{ 1 } << w));
            return (adj[u] & mask) == (adj[w] & mask);
        }

        // bit (31 - i) holds adjacency to the vertex at position i, so
        // numeric order on columns is lexicographic order on bit strings
        auto column(int j, int w) const -> std::uint32_t
        {
            std::uint32_t result = 0;
            for (int i = 0 ; i < j ; ++i)
                if (adj[order[i]] & (std::uint32_t{ 1 } << w))
                    result |= std::uint32_t{ 1 } << (31 - i);
            return result;
        }

        // -1, 0, 1 as columns[0..j] compares with the best ordering's
        auto compare_prefix(int j) const -> int
        {
            for (int i = 0 ; i <= j ; ++i)
                if (columns[i] != best_columns[i])
                    return columns[i] < best_columns[i] ? -1 : 1;
            return 0;
        }

        auto search(int j) -> void
        {
            if (j == p) {
                if (! have_best || (p > 0 && compare_prefix(p - 1) > 0)) {
                    best_order = order;
                    best_columns = columns;
                    have_best = true;
                }
                return;
            }

            vector<int> tried;
            for (int w = 0 ; w < p ; ++w) {
                if ((placed >> w) & 1 || cell_of_vertex[w] != cell_of_position[j])
                    continue;
                if (std::any_of(tried.begin(), tried.end(), [&] (int u) { return twins(u, w); }))
                    continue;
                tried.push_back(w);

                order[j] = w;
                columns[j] = column(j, w);
                if (have_best && compare_prefix(j) < 0)
                    continue;

                placed |= std::uint32_t{ 1 } << w;
                search(j + 1);
                placed &= ~(std::uint32_t{ 1 } << w);
            }
        }
    };
}

auto kem::canonical_labelling(const Graph & g, int p_max) -> vector<int>
{
    if (g.p() > p_max || g.p() > canonical_hard_limit)
        throw CapExceeded{ "canonical form requested for p=" + to_string(g.p()) + " above cap " + to_string(std::min(p_max, canonical_hard_limit)) };

    CanonicalSearch search{ g };
    search.search(0);

    vector<int> perm(g.p());
    for (int pos = 0 ; pos < g.p() ; ++pos)
        perm[search.best_order[pos]] = pos;
    return perm;
}

auto kem::canonical_graph(const Graph & g, int p_max) -> Graph
{
    return g.relabelled(canonical_labelling(g, p_max));
}

auto kem::canonical_form(const Graph & g, int p_max) -> CanonicalCode
{
    return CanonicalCode{ emit_graph6(canonical_graph(g, p_max)) };
}

auto kem::are_isomorphic(const Graph & g, const Graph & h, int p_max) -> bool
{
    if (g.p() != h.p() || g.q() != h.q() || degree_sequence(g) != degree_sequence(h))
        return false;
    return canonical_form(g, p_max) == canonical_form(h, p_max);
}
