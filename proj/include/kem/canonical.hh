/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KEM_GUARD_KEM_CANONICAL_HH
#define KEM_GUARD_KEM_CANONICAL_HH 1

#include <kem/caps.hh>
#include <kem/graph.hh>

#include <compare>
#include <string>
#include <vector>

namespace kem
{
    /**
     * Identifies an isomorphism class. The code is the graph6 record of the
     * canonically relabelled graph, so it is printable, orders first by p,
     * and can be decoded back into a representative.
     */
    struct CanonicalCode
    {
        std::string code;

        auto operator<=> (const CanonicalCode &) const = default;
    };

    /**
     * Returns perm such that g.relabelled(perm) is the canonical
     * representative. Vertices are placed in nonincreasing degree order;
     * within each degree class every ordering is searched, keeping the one
     * whose upper-triangle adjacency bits (graph6 order) are largest.
     * Branches whose partial bit string already falls below the best are
     * cut, and interchangeable twin vertices are only tried once.
     *
     * Throws CapExceeded if g.p() > p_max.
     */
    auto canonical_labelling(const Graph & g, int p_max = Caps{}.p_max) -> std::vector<int>;

    auto canonical_graph(const Graph & g, int p_max = Caps{}.p_max) -> Graph;

    auto canonical_form(const Graph & g, int p_max = Caps{}.p_max) -> CanonicalCode;

    auto are_isomorphic(const Graph & g, const Graph & h, int p_max = Caps{}.p_max) -> bool;
}

#endif
