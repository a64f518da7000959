/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// Test-only reference routines. Nothing here calls the search code it is
// used to check.

#ifndef KEM_GUARD_TESTS_ORACLES_HH
#define KEM_GUARD_TESTS_ORACLES_HH 1

#include <kem/graph.hh>
#include <kem/graph6.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle
{
    /// Smallest graph6 record over all p! relabellings.
    inline auto brute_canonical(const kem::Graph & g) -> std::string
    {
        std::vector<int> perm(g.p());
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        do {
            auto s = kem::emit_graph6(g.relabelled(perm));
            if (best.empty() || s < best)
                best = s;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    inline auto all_pairs(int p) -> std::vector<std::pair<int, int> >
    {
        std::vector<std::pair<int, int> > result;
        for (int i = 0 ; i < p ; ++i)
            for (int j = i + 1 ; j < p ; ++j)
                result.emplace_back(i, j);
        return result;
    }

    /// Every labelled simple graph on p vertices.
    inline auto all_labelled_graphs(int p) -> std::vector<kem::Graph>
    {
        auto pairs = all_pairs(p);
        std::vector<kem::Graph> result;
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{ 1 } << pairs.size()) ; ++mask) {
            std::vector<std::pair<int, int> > chosen;
            for (std::size_t i = 0 ; i < pairs.size() ; ++i)
                if ((mask >> i) & 1)
                    chosen.push_back(pairs[i]);
            result.emplace_back(p, chosen);
        }
        return result;
    }

    /// Number of distinct residue sequences over the sorted edges with all vertex sums equal mod p.
    inline auto count_magic_assignments(const kem::Graph & g, long long k) -> long long
    {
        int p = g.p();
        std::vector<int> residues;
        for (long long l = k ; l < k + g.q() ; ++l)
            residues.push_back(int(l % p));
        std::sort(residues.begin(), residues.end());
        long long count = 0;
        do {
            std::vector<int> sums(p, 0);
            for (int i = 0 ; i < g.q() ; ++i) {
                sums[g.edges()[i].u] += residues[i];
                sums[g.edges()[i].v] += residues[i];
            }
            bool magic = true;
            for (int s : sums)
                magic = magic && s % p == sums[0] % p;
            count += magic;
        } while (std::next_permutation(residues.begin(), residues.end()));
        return count;
    }

    /// Catalan numbers from the convolution recurrence.
    inline auto catalan(int n) -> std::uint64_t
    {
        std::vector<std::uint64_t> c{ 1 };
        for (int m = 1 ; m <= n ; ++m) {
            std::uint64_t s = 0;
            for (int i = 0 ; i < m ; ++i)
                s += c[i] * c[m - 1 - i];
            c.push_back(s);
        }
        return c[n];
    }

    inline auto random_graph(std::mt19937 & rng, int p, double density) -> kem::Graph
    {
        std::bernoulli_distribution coin(density);
        std::vector<std::pair<int, int> > chosen;
        for (auto e : all_pairs(p))
            if (coin(rng))
                chosen.push_back(e);
        return kem::Graph{ p, chosen };
    }

    inline auto random_permutation(std::mt19937 & rng, int p) -> std::vector<int>
    {
        std::vector<int> perm(p);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return perm;
    }

    /// Order-4 maximal outerplanar graph: 4-cycle plus chord (0,2).
    inline auto mop4() -> kem::Graph
    {
        return kem::Graph{ 4, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 0 }, { 0, 2 } } };
    }

    /// Hamiltonian cycle by trying every vertex order starting at 0.
    inline auto has_hamiltonian_cycle(const kem::Graph & g) -> bool
    {
        std::vector<int> order(g.p());
        std::iota(order.begin(), order.end(), 0);
        do {
            bool ok = true;
            for (int i = 0 ; i < g.p() && ok ; ++i)
                ok = g.has_edge(order[i], order[(i + 1) % g.p()]);
            if (ok)
                return true;
        } while (std::next_permutation(order.begin() + 1, order.end()));
        return false;
    }
}

#endif
