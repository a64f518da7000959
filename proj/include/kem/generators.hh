/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KEM_GUARD_KEM_GENERATORS_HH
#define KEM_GUARD_KEM_GENERATORS_HH 1

#include <kem/caps.hh>
#include <kem/graph.hh>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kem
{
    /// A triangulation of the convex n-gon with corners 0..n-1, as its n-3 chords.
    struct TriangulationCode
    {
        int n;
        std::vector<std::pair<int, int> > diagonals;
    };

    struct SparseSpec
    {
        int p;
        int h;
    };

    /// Every labelled triangulation of the convex n-gon, by recursion on the
    /// apex of the triangle standing on the base edge (0, n-1).
    auto triangulations(int n) -> std::vector<TriangulationCode>;

    /// Boundary cycle plus diagonals.
    auto triangulation_graph(const TriangulationCode & t) -> Graph;

    /// Size of the raw triangulation stream; equals Catalan(p-2).
    auto triangulation_count(int p) -> std::uint64_t;

    /**
     * One canonical representative per isomorphism class of maximal
     * outerplanar graphs of order p, sorted by CanonicalCode.
     */
    auto generate_mops(int p, const Caps & caps = Caps{}) -> std::vector<Graph>;
    auto generate_mops_serial(int p, const Caps & caps = Caps{}) -> std::vector<Graph>;

    /**
     * One canonical representative per isomorphism class of graphs with p
     * vertices and p-h edges, sorted by CanonicalCode.
     */
    auto generate_sparse_graphs(SparseSpec spec, bool connected_only, const Caps & caps = Caps{}) -> std::vector<Graph>;
    auto generate_sparse_graphs_serial(SparseSpec spec, bool connected_only, const Caps & caps = Caps{}) -> std::vector<Graph>;

    /// path, cycle, star, complete, fan, wheel, friendship. n is the vertex
    /// count, except for friendship where it is the number of triangles.
    auto named_family(const std::string & name, int n) -> Graph;
}

#endif
