/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KEM_GUARD_KEM_GRAPH6_HH
#define KEM_GUARD_KEM_GRAPH6_HH 1

#include <kem/graph.hh>

#include <string>
#include <string_view>

namespace kem
{
    /**
     * Decode one graph6 record. An optional ">>graph6<<" header is accepted.
     * The record must not carry trailing characters or nonzero padding bits.
     * Throws InvalidInput on any malformed record.
     */
    auto parse_graph6(std::string_view text) -> Graph;

    /// Encode the labelled adjacency of g, no header and no newline.
    auto emit_graph6(const Graph & g) -> std::string;
}

#endif
