/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KEM_GUARD_KEM_CENSUS_HH
#define KEM_GUARD_KEM_CENSUS_HH 1

#include <kem/canonical.hh>
#include <kem/caps.hh>
#include <kem/graph.hh>
#include <kem/solver.hh>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kem
{
    /// Rows in a persistent store are only reused when their tag matches.
    inline constexpr const char * solver_version = "kem-solver-1";

    enum class CensusMode
    {
        full_spectrum,
        k_list
    };

    enum class ReportFormat
    {
        csv,
        jsonl
    };

    struct CensusRow
    {
        CanonicalCode code;
        std::string graph6;             // canonical representative; witnesses refer to its labelling
        int p = 0, q = 0;
        bool skipped = false;
        std::string skip_reason;
        std::vector<int> tested;        // residues that were decided
        KSpectrum spectrum;
        std::map<int, Witness> witnesses;
        std::map<int, KStatus> excluded;

        auto operator== (const CensusRow &) const -> bool = default;
    };

    struct CensusOptions
    {
        CensusMode mode = CensusMode::full_spectrum;
        std::vector<Label> ks;          // used in k_list mode
        Caps caps;
        int jobs = 1;
        bool include_empty = false;     // q = 0 graphs are vacuously k-EM; reported as skipped unless set
        std::optional<std::filesystem::path> store;
    };

    struct CensusResult
    {
        std::vector<CensusRow> rows;
        std::vector<std::string> errors;    // "line N: ..." for unreadable records
        std::size_t computed = 0;
        std::size_t reused = 0;
    };

    /// Decide every residue in ks for the canonical graph g.
    auto classify_row(const Graph & canonical, const std::vector<int> & ks) -> CensusRow;

    /// Classification kernels over many graphs; results are index-aligned with
    /// the input. The parallel one uses up to jobs OpenMP threads.
    auto classify_rows(const std::vector<Graph> & graphs, CensusMode mode, const std::vector<Label> & ks, int jobs) -> std::vector<CensusRow>;
    auto classify_rows_serial(const std::vector<Graph> & graphs, CensusMode mode, const std::vector<Label> & ks) -> std::vector<CensusRow>;

    /// Residues decided for a graph of order p: all of them, or ks reduced mod p.
    auto residues_for(int p, CensusMode mode, const std::vector<Label> & ks) -> std::vector<int>;

    /// Census over an already-decoded stream of graphs.
    auto run_census(const std::vector<Graph> & graphs, const CensusOptions & options) -> CensusResult;

    /// Census over graph6 lines; unreadable lines are reported and skipped.
    auto run_census(std::istream & source, const CensusOptions & options) -> CensusResult;

    /// Same rows as run_census, one graph at a time on the calling thread, no store.
    auto run_census_serial(const std::vector<Graph> & graphs, const CensusOptions & options) -> CensusResult;

    /// Rows from rows whose spectrum contains k.
    auto rows_with_k(const std::vector<CensusRow> & rows, Label k) -> std::vector<CensusRow>;

    auto row_to_json(const CensusRow & row) -> std::string;
    auto row_from_json(const std::string & line) -> CensusRow;

    auto report_emit(const std::vector<CensusRow> & rows, ReportFormat format, std::ostream & out) -> void;

    /// Throws std::runtime_error if the destination cannot be written.
    auto report_emit(const std::vector<CensusRow> & rows, ReportFormat format, const std::filesystem::path & destination) -> void;

    auto load_rows(std::istream & in) -> std::vector<CensusRow>;

    /// Every witness verifies and every excluded residue is recorded as
    /// filtered only when the counting filter fails. Empty when consistent.
    auto audit_row(const CensusRow & row) -> std::vector<std::string>;

    struct ConjectureVerdict
    {
        int p;
        bool holds = false;
        std::size_t mops = 0;
        std::vector<std::pair<CanonicalCode, KSpectrum> > counterexamples;
        bool filter_forces_two = false;     // counting filter admits exactly k = 2 mod p
        bool beyond_proved_range = false;   // p outside {5, 7}
    };

    auto is_prime(int n) -> bool;

    /// Throws InvalidInput unless p is prime and at least 5; CapExceeded past caps.p_max.
    auto check_mop_conjecture(int p, const Caps & caps = Caps{}, int jobs = 1) -> ConjectureVerdict;
}

#endif
