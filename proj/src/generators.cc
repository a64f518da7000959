/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kem/canonical.hh>
#include <kem/generators.hh>
#include <kem/graph6.hh>

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

using std::map;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

using namespace kem;

namespace
{
    using Chords = vector<pair<int, int> >;

    // all triangulations of the sub-polygon with corners lo..hi (consecutive)
    auto triangulate(int lo, int hi, map<pair<int, int>, vector<Chords> > & memo) -> const vector<Chords> &
    {
        auto key = pair{ lo, hi };
        if (auto it = memo.find(key) ; it != memo.end())
            return it->second;

        vector<Chords> result;
        if (hi - lo < 2)
            result.emplace_back();
        else
            for (int apex = lo + 1 ; apex < hi ; ++apex) {
                const auto & left = triangulate(lo, apex, memo);
                const auto & right = triangulate(apex, hi, memo);
                for (auto & l : left)
                    for (auto & r : right) {
                        Chords c = l;
                        c.insert(c.end(), r.begin(), r.end());
                        if (apex - lo > 1)
                            c.emplace_back(lo, apex);
                        if (hi - apex > 1)
                            c.emplace_back(apex, hi);
                        std::sort(c.begin(), c.end());
                        result.push_back(std::move(c));
                    }
            }
        return memo.emplace(key, std::move(result)).first->second;
    }

    auto check_order(int p, int cap, const string & what) -> void
    {
        if (p > cap)
            throw CapExceeded{ what + " requested for p=" + to_string(p) + " above cap " + to_string(cap) };
    }

    auto sort_unique(vector<pair<CanonicalCode, Graph> > & coded) -> vector<Graph>
    {
        std::sort(coded.begin(), coded.end(), [] (auto & a, auto & b) { return a.first < b.first; });
        vector<Graph> result;
        for (std::size_t i = 0 ; i < coded.size() ; ++i)
            if (0 == i || coded[i].first != coded[i - 1].first)
                result.push_back(std::move(coded[i].second));
        return result;
    }

    auto mop_order_checks(int p, const Caps & caps) -> void
    {
        if (p < 3)
            throw InvalidInput{ "maximal outerplanar graphs are generated for p >= 3, got " + to_string(p) };
        check_order(p, caps.p_max, "maximal outerplanar generation");
    }

    auto complete_graph_edges(int p) -> vector<pair<int, int> >
    {
        vector<pair<int, int> > result;
        for (int j = 1 ; j < p ; ++j)
            for (int i = 0 ; i < j ; ++i)
                result.emplace_back(i, j);
        return result;
    }

    auto sparse_checks(SparseSpec spec, const Caps & caps) -> int
    {
        if (spec.p < 1)
            throw InvalidInput{ "p must be at least 1" };
        if (spec.h < 0 || spec.p - spec.h < 0)
            throw InvalidInput{ "need 0 <= h <= p, got p=" + to_string(spec.p) + " h=" + to_string(spec.h) };
        check_order(spec.p, caps.p_sparse, "sparse graph generation");
        if (spec.p > 8)
            throw CapExceeded{ "sparse graph generation is limited to p <= 8 (edge subsets are 32-bit masks)" };
        int q = spec.p - spec.h;
        if (q > spec.p * (spec.p - 1) / 2)
            throw InvalidInput{ "no simple graph has p=" + to_string(spec.p) + " and q=" + to_string(q) };
        return q;
    }

    // every q-subset of the complete graph's edges, as bitmasks, in increasing order
    auto edge_subsets(int total, int q) -> vector<std::uint32_t>
    {
        vector<std::uint32_t> result;
        if (0 == q) {
            result.push_back(0);
            return result;
        }
        std::uint64_t limit = std::uint64_t{ 1 } << total;
        for (std::uint64_t m = (std::uint64_t{ 1 } << q) - 1 ; m < limit ; ) {
            result.push_back(std::uint32_t(m));
            std::uint64_t low = m & -m, ripple = m + low;
            m = (((ripple ^ m) >> 2) / low) | ripple;
        }
        return result;
    }

    auto subset_graph(int p, const vector<pair<int, int> > & all, std::uint32_t mask) -> Graph
    {
        vector<pair<int, int> > chosen;
        for (std::size_t i = 0 ; i < all.size() ; ++i)
            if ((mask >> i) & 1)
                chosen.push_back(all[i]);
        return Graph{ p, chosen };
    }
}

auto kem::triangulations(int n) -> vector<TriangulationCode>
{
    if (n < 3)
        throw InvalidInput{ "polygon needs at least 3 corners, got " + to_string(n) };
    map<pair<int, int>, vector<Chords> > memo;
    vector<TriangulationCode> result;
    for (auto & c : triangulate(0, n - 1, memo))
        result.push_back(TriangulationCode{ n, c });
    return result;
}

auto kem::triangulation_graph(const TriangulationCode & t) -> Graph
{
    vector<pair<int, int> > edges;
    for (int i = 0 ; i < t.n ; ++i)
        edges.emplace_back(i, (i + 1) % t.n);
    edges.insert(edges.end(), t.diagonals.begin(), t.diagonals.end());
    return Graph{ t.n, edges };
}

auto kem::triangulation_count(int p) -> std::uint64_t
{
    return triangulations(p).size();
}

auto kem::generate_mops_serial(int p, const Caps & caps) -> vector<Graph>
{
    mop_order_checks(p, caps);
    vector<pair<CanonicalCode, Graph> > coded;
    for (auto & t : triangulations(p)) {
        auto g = canonical_graph(triangulation_graph(t), caps.p_max);
        coded.emplace_back(CanonicalCode{ emit_graph6(g) }, g);
    }
    return sort_unique(coded);
}

auto kem::generate_mops(int p, const Caps & caps) -> vector<Graph>
{
    mop_order_checks(p, caps);
    auto raw = triangulations(p);
    vector<pair<CanonicalCode, Graph> > coded(raw.size());

    #pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0 ; i < raw.size() ; ++i) {
        auto g = canonical_graph(triangulation_graph(raw[i]), caps.p_max);
        coded[i] = { CanonicalCode{ emit_graph6(g) }, std::move(g) };
    }
    return sort_unique(coded);
}

auto kem::generate_sparse_graphs_serial(SparseSpec spec, bool connected_only, const Caps & caps) -> vector<Graph>
{
    int q = sparse_checks(spec, caps);
    auto all = complete_graph_edges(spec.p);
    map<CanonicalCode, Graph> seen;
    for (auto mask : edge_subsets(int(all.size()), q)) {
        auto g = subset_graph(spec.p, all, mask);
        if (connected_only && ! is_connected(g))
            continue;
        auto c = canonical_graph(g, caps.p_sparse);
        auto code = CanonicalCode{ emit_graph6(c) };
        seen.emplace(code, c);
    }
    vector<Graph> result;
    for (auto & [code, g] : seen)
        result.push_back(g);
    return result;
}

auto kem::generate_sparse_graphs(SparseSpec spec, bool connected_only, const Caps & caps) -> vector<Graph>
{
    int q = sparse_checks(spec, caps);
    auto all = complete_graph_edges(spec.p);
    auto masks = edge_subsets(int(all.size()), q);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    vector<map<CanonicalCode, Graph> > local(threads);

    #pragma omp parallel for schedule(dynamic, 256)
    for (std::size_t i = 0 ; i < masks.size() ; ++i) {
        int t = 0;
#ifdef _OPENMP
        t = omp_get_thread_num();
#endif
        auto g = subset_graph(spec.p, all, masks[i]);
        if (connected_only && ! is_connected(g))
            continue;
        auto c = canonical_graph(g, caps.p_sparse);
        local[t].emplace(CanonicalCode{ emit_graph6(c) }, std::move(c));
    }

    map<CanonicalCode, Graph> merged;
    for (auto & m : local)
        merged.merge(m);
    vector<Graph> result;
    for (auto & [code, g] : merged)
        result.push_back(g);
    return result;
}

auto kem::named_family(const string & name, int n) -> Graph
{
    auto too_small = [&] (int min) {
        if (n < min)
            throw InvalidInput{ "family " + name + " needs n >= " + to_string(min) + ", got " + to_string(n) };
    };

    vector<pair<int, int> > edges;
    if (name == "path") {
        too_small(1);
        for (int i = 0 ; i + 1 < n ; ++i)
            edges.emplace_back(i, i + 1);
        return Graph{ n, edges };
    }
    else if (name == "cycle") {
        too_small(3);
        for (int i = 0 ; i < n ; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph{ n, edges };
    }
    else if (name == "star") {
        too_small(1);
        for (int i = 1 ; i < n ; ++i)
            edges.emplace_back(0, i);
        return Graph{ n, edges };
    }
    else if (name == "complete") {
        too_small(1);
        return Graph{ n, complete_graph_edges(n) };
    }
    else if (name == "fan") {
        // hub 0 joined to the path 1..n-1
        too_small(2);
        for (int i = 1 ; i < n ; ++i) {
            edges.emplace_back(0, i);
            if (i + 1 < n)
                edges.emplace_back(i, i + 1);
        }
        return Graph{ n, edges };
    }
    else if (name == "wheel") {
        too_small(4);
        for (int i = 1 ; i < n ; ++i) {
            edges.emplace_back(0, i);
            edges.emplace_back(i, i + 1 < n ? i + 1 : 1);
        }
        return Graph{ n, edges };
    }
    else if (name == "friendship") {
        too_small(1);
        for (int t = 0 ; t < n ; ++t) {
            edges.emplace_back(0, 2 * t + 1);
            edges.emplace_back(0, 2 * t + 2);
            edges.emplace_back(2 * t + 1, 2 * t + 2);
        }
        return Graph{ 2 * n + 1, edges };
    }
    else
        throw InvalidInput{ "unknown graph family '" + name + "'" };
}
