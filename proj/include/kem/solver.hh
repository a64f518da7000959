/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KEM_GUARD_KEM_SOLVER_HH
#define KEM_GUARD_KEM_SOLVER_HH 1

#include <kem/caps.hh>
#include <kem/graph.hh>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kem
{
    using Label = std::int64_t;

    /// Multiplicities of {k, ..., k+q-1} reduced mod p.
    struct ResidueMultiset
    {
        int p;
        std::vector<int> counts;
    };

    /// An edge labelling f together with its base label k.
    struct Labeling
    {
        Label k = 0;
        std::vector<std::pair<Edge, Label> > assignment;

        auto operator== (const Labeling &) const -> bool = default;
    };

    /// A labelling whose vertex sums are all congruent to c mod p.
    struct Witness
    {
        Labeling labeling;
        int c = 0;

        auto operator== (const Witness &) const -> bool = default;
    };

    /// The residues k in [0, p-1] for which a graph is k-edge-magic.
    struct KSpectrum
    {
        int p = 1;
        std::vector<int> members;

        [[nodiscard]] auto contains(Label k) const -> bool;

        auto operator== (const KSpectrum &) const -> bool = default;
    };

    struct VerifyResult
    {
        bool valid = false;
        int c = 0;
        std::vector<std::string> violations;
    };

    /// Why a residue is, or is not, in a spectrum.
    enum class KStatus
    {
        magic,
        filtered,
        exhausted
    };

    struct KOutcome
    {
        int k;
        KStatus status;
        std::optional<Witness> witness;
    };

    auto label_residues(Label k, int q, int p) -> ResidueMultiset;

    /// False only if 2qk + q(q-1) is nonzero mod p, which rules out any k-EM labelling.
    auto counting_filter(const Graph & g, Label k) -> bool;

    /**
     * Exact decision procedure. Tries each constant c in turn, assigning
     * label residues to edges in breadth-first order and cutting a branch as
     * soon as a vertex whose edges are all labelled has sum other than c.
     * Throws InvalidInput for negative k.
     */
    auto is_k_em(const Graph & g, Label k) -> std::optional<Witness>;

    auto classify(const Graph & g) -> KSpectrum;

    /// Per-residue outcome for each k in ks (reduced mod p, deduplicated, ascending).
    auto classify_detailed(const Graph & g, const std::vector<Label> & ks) -> std::vector<KOutcome>;

    /// Throws InvalidInput if the labelling names an edge absent from g.
    auto verify_labeling(const Graph & g, const Labeling & labeling) -> VerifyResult;

    /**
     * All magic residue assignments, as witnesses, in lexicographic order of
     * the residue sequence over the sorted edge list. Stops after limit.
     * Throws CapExceeded if q > q_enum.
     */
    auto enumerate_labelings(const Graph & g, Label k, std::size_t limit = std::numeric_limits<std::size_t>::max(),
            int q_enum = Caps{}.q_enum) -> std::vector<Witness>;

    /// Reference oracle: every distinct permutation of the residue multiset, no pruning.
    auto brute_force_is_k_em(const Graph & g, Label k, int q_brute = Caps{}.q_brute) -> std::optional<Witness>;

    auto spectrum_string(const KSpectrum & s, const std::string & empty_marker = "") -> std::string;
}

#endif
