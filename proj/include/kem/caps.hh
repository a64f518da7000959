/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KEM_GUARD_KEM_CAPS_HH
#define KEM_GUARD_KEM_CAPS_HH 1

namespace kem
{
    /// Size caps for the exhaustive routines. All must be positive.
    struct Caps
    {
        int p_max = 10;     // canonical_form, generate_mops, census
        int p_sparse = 8;   // generate_sparse_graphs
        int q_brute = 8;    // brute_force_is_k_em
        int q_enum = 12;    // enumerate_labelings
    };

    /// Orders above this cannot be canonicalised at all (bitmask width).
    constexpr int canonical_hard_limit = 31;
}

#endif
