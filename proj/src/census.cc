/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kem/census.hh>
#include <kem/generators.hh>
#include <kem/graph6.hh>
#include <kem/witness_json.hh>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

using nlohmann::ordered_json;
using std::map;
using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

using namespace kem;

namespace
{
    auto status_name(KStatus s) -> string
    {
        switch (s) {
            case KStatus::magic:     return "magic";
            case KStatus::filtered:  return "filtered";
            case KStatus::exhausted: return "exhausted";
        }
        return "?";
    }

    auto status_from_name(const string & s) -> KStatus
    {
        if (s == "magic") return KStatus::magic;
        if (s == "filtered") return KStatus::filtered;
        if (s == "exhausted") return KStatus::exhausted;
        throw InvalidInput{ "unknown residue status '" + s + "'" };
    }

    auto skipped_row(const Graph & g, const string & code, const string & reason) -> CensusRow
    {
        CensusRow row;
        row.code = CanonicalCode{ code };
        row.graph6 = code;
        row.p = g.p();
        row.q = g.q();
        row.skipped = true;
        row.skip_reason = reason;
        row.spectrum = KSpectrum{ g.p(), {} };
        return row;
    }

    /// Narrow a stored row to the residues requested now.
    auto restrict_row(const CensusRow & row, const vector<int> & residues) -> CensusRow
    {
        CensusRow result = row;
        result.tested = residues;
        result.spectrum.members.clear();
        result.witnesses.clear();
        result.excluded.clear();
        for (int k : residues) {
            if (row.spectrum.contains(k)) {
                result.spectrum.members.push_back(k);
                result.witnesses.emplace(k, row.witnesses.at(k));
            }
            else
                result.excluded.emplace(k, row.excluded.at(k));
        }
        return result;
    }

    auto covers(const CensusRow & stored, const vector<int> & residues) -> bool
    {
        return std::all_of(residues.begin(), residues.end(), [&] (int k) {
                return std::binary_search(stored.tested.begin(), stored.tested.end(), k)
                    && (stored.witnesses.contains(k) || stored.excluded.contains(k)); });
    }

    auto load_store(const std::filesystem::path & path) -> map<CanonicalCode, CensusRow>
    {
        map<CanonicalCode, CensusRow> result;
        std::ifstream in{ path };
        if (! in)
            return result;
        string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            auto j = ordered_json::parse(line, nullptr, false);
            if (j.is_discarded() || ! j.contains("version") || j["version"] != solver_version)
                continue;
            auto row = row_from_json(line);
            if (! row.skipped)
                result.insert_or_assign(row.code, std::move(row));
        }
        return result;
    }

    auto finish(vector<CensusRow> rows) -> vector<CensusRow>
    {
        std::sort(rows.begin(), rows.end(), [] (const CensusRow & a, const CensusRow & b) { return a.code < b.code; });
        return rows;
    }

    struct Prepared
    {
        vector<CensusRow> skipped;
        vector<Graph> unique;       // canonical, in code order
    };

    auto prepare(const vector<Graph> & graphs, const CensusOptions & options) -> Prepared
    {
        Prepared result;
        map<CanonicalCode, Graph> unique;
        std::set<string> skipped_codes;
        for (auto & g : graphs) {
            if (g.p() > options.caps.p_max || g.p() > canonical_hard_limit) {
                auto code = emit_graph6(g);
                if (skipped_codes.insert(code).second)
                    result.skipped.push_back(skipped_row(g, code, "p=" + to_string(g.p()) + " exceeds cap " + to_string(options.caps.p_max)));
                continue;
            }
            auto c = canonical_graph(g, options.caps.p_max);
            auto code = emit_graph6(c);
            if (0 == g.q() && ! options.include_empty) {
                if (skipped_codes.insert(code).second)
                    result.skipped.push_back(skipped_row(c, code, "empty graph (q=0) is vacuously k-EM for every k"));
                continue;
            }
            unique.emplace(CanonicalCode{ code }, std::move(c));
        }
        for (auto & [code, g] : unique)
            result.unique.push_back(std::move(g));
        return result;
    }
}

auto kem::residues_for(int p, CensusMode mode, const vector<Label> & ks) -> vector<int>
{
    std::set<int> result;
    if (mode == CensusMode::full_spectrum)
        for (int k = 0 ; k < p ; ++k)
            result.insert(k);
    else
        for (auto k : ks) {
            if (k < 0)
                throw InvalidInput{ "k must be nonnegative, got " + to_string(k) };
            result.insert(int(k % p));
        }
    return { result.begin(), result.end() };
}

auto kem::classify_row(const Graph & canonical, const vector<int> & ks) -> CensusRow
{
    CensusRow row;
    row.graph6 = emit_graph6(canonical);
    row.code = CanonicalCode{ row.graph6 };
    row.p = canonical.p();
    row.q = canonical.q();
    row.tested = ks;
    row.spectrum = KSpectrum{ canonical.p(), {} };

    for (auto & o : classify_detailed(canonical, vector<Label>(ks.begin(), ks.end()))) {
        if (o.status == KStatus::magic) {
            row.spectrum.members.push_back(o.k);
            row.witnesses.emplace(o.k, std::move(*o.witness));
        }
        else
            row.excluded.emplace(o.k, o.status);
    }
    return row;
}

auto kem::classify_rows_serial(const vector<Graph> & graphs, CensusMode mode, const vector<Label> & ks) -> vector<CensusRow>
{
    vector<CensusRow> rows;
    rows.reserve(graphs.size());
    for (auto & g : graphs)
        rows.push_back(classify_row(g, residues_for(g.p(), mode, ks)));
    return rows;
}

auto kem::classify_rows(const vector<Graph> & graphs, CensusMode mode, const vector<Label> & ks, int jobs) -> vector<CensusRow>
{
    vector<vector<int> > residues;
    for (auto & g : graphs)
        residues.push_back(residues_for(g.p(), mode, ks));

    vector<CensusRow> rows(graphs.size());
    long n = long(graphs.size());

    #pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(jobs, 1))
    for (long i = 0 ; i < n ; ++i)
        rows[i] = classify_row(graphs[i], residues[i]);

    return rows;
}

auto kem::run_census(const vector<Graph> & graphs, const CensusOptions & options) -> CensusResult
{
    if (options.jobs < 1)
        throw InvalidInput{ "jobs must be at least 1" };

    CensusResult result;
    auto prepared = prepare(graphs, options);

    map<CanonicalCode, CensusRow> stored;
    if (options.store)
        stored = load_store(*options.store);

    vector<Graph> todo;
    for (auto & g : prepared.unique) {
        auto residues = residues_for(g.p(), options.mode, options.ks);
        auto it = stored.find(CanonicalCode{ emit_graph6(g) });
        if (it != stored.end() && covers(it->second, residues)) {
            result.rows.push_back(restrict_row(it->second, residues));
            ++result.reused;
        }
        else
            todo.push_back(g);
    }

    auto fresh = classify_rows(todo, options.mode, options.ks, options.jobs);
    result.computed = fresh.size();

    // single writer: rows are appended in code order after the parallel phase
    if (options.store && ! fresh.empty()) {
        std::ofstream out{ *options.store, std::ios::app };
        if (! out)
            throw std::runtime_error{ "cannot append to store " + options.store->string() };
        for (auto & row : fresh)
            out << row_to_json(row) << '\n';
    }

    result.rows.insert(result.rows.end(), fresh.begin(), fresh.end());
    result.rows.insert(result.rows.end(), prepared.skipped.begin(), prepared.skipped.end());
    result.rows = finish(std::move(result.rows));
    return result;
}

auto kem::run_census_serial(const vector<Graph> & graphs, const CensusOptions & options) -> CensusResult
{
    CensusResult result;
    auto prepared = prepare(graphs, options);
    result.rows = classify_rows_serial(prepared.unique, options.mode, options.ks);
    result.computed = result.rows.size();
    result.rows.insert(result.rows.end(), prepared.skipped.begin(), prepared.skipped.end());
    result.rows = finish(std::move(result.rows));
    return result;
}

auto kem::run_census(std::istream & source, const CensusOptions & options) -> CensusResult
{
    vector<Graph> graphs;
    vector<string> errors;
    string line;
    for (int line_number = 1 ; std::getline(source, line) ; ++line_number) {
        while (! line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty())
            continue;
        try {
            graphs.push_back(parse_graph6(line));
        }
        catch (const InvalidInput & e) {
            errors.push_back("line " + to_string(line_number) + ": " + e.what());
        }
    }

    auto result = run_census(graphs, options);
    result.errors = std::move(errors);
    return result;
}

auto kem::rows_with_k(const vector<CensusRow> & rows, Label k) -> vector<CensusRow>
{
    vector<CensusRow> result;
    for (auto & row : rows)
        if (! row.skipped && row.spectrum.contains(k))
            result.push_back(row);
    return result;
}

auto kem::row_to_json(const CensusRow & row) -> string
{
    ordered_json j;
    j["code"] = row.code.code;
    j["graph6"] = row.graph6;
    j["p"] = row.p;
    j["q"] = row.q;
    j["status"] = row.skipped ? "skipped" : "ok";
    if (row.skipped)
        j["reason"] = row.skip_reason;
    j["tested"] = row.tested;
    j["spectrum"] = row.spectrum.members;

    ordered_json excluded = ordered_json::object();
    for (auto & [k, s] : row.excluded)
        excluded[to_string(k)] = status_name(s);
    j["excluded"] = std::move(excluded);

    ordered_json witnesses = ordered_json::object();
    for (auto & [k, w] : row.witnesses)
        witnesses[to_string(k)] = witness_to_json(w, row.p);
    j["witnesses"] = std::move(witnesses);

    j["version"] = solver_version;
    return j.dump();
}

auto kem::row_from_json(const string & line) -> CensusRow
{
    try {
        auto j = ordered_json::parse(line);
        CensusRow row;
        row.code = CanonicalCode{ j.at("code").get<string>() };
        row.graph6 = j.at("graph6").get<string>();
        row.p = j.at("p").get<int>();
        row.q = j.at("q").get<int>();
        row.skipped = j.at("status").get<string>() == "skipped";
        if (row.skipped)
            row.skip_reason = j.at("reason").get<string>();
        row.tested = j.at("tested").get<vector<int> >();
        row.spectrum = KSpectrum{ row.p, j.at("spectrum").get<vector<int> >() };
        for (auto & [k, s] : j.at("excluded").items())
            row.excluded.emplace(std::stoi(k), status_from_name(s.get<string>()));
        for (auto & [k, w] : j.at("witnesses").items())
            row.witnesses.emplace(std::stoi(k), witness_from_json(w));
        return row;
    }
    catch (const nlohmann::json::exception & e) {
        throw InvalidInput{ string{ "malformed census row: " } + e.what() };
    }
}

auto kem::report_emit(const vector<CensusRow> & rows, ReportFormat format, std::ostream & out) -> void
{
    if (format == ReportFormat::csv) {
        out << "graph6,p,q,spectrum\n";
        for (auto & row : rows)
            out << row.graph6 << ',' << row.p << ',' << row.q << ','
                << (row.skipped ? string{ "skipped" } : spectrum_string(row.spectrum)) << '\n';
    }
    else
        for (auto & row : rows)
            out << row_to_json(row) << '\n';
}

auto kem::report_emit(const vector<CensusRow> & rows, ReportFormat format, const std::filesystem::path & destination) -> void
{
    std::ofstream out{ destination, std::ios::binary | std::ios::trunc };
    if (! out)
        throw std::runtime_error{ "cannot write report to " + destination.string() };
    report_emit(rows, format, out);
    out.flush();
    if (! out)
        throw std::runtime_error{ "error while writing report to " + destination.string() };
}

auto kem::load_rows(std::istream & in) -> vector<CensusRow>
{
    vector<CensusRow> rows;
    string line;
    while (std::getline(in, line))
        if (! line.empty())
            rows.push_back(row_from_json(line));
    return rows;
}

auto kem::audit_row(const CensusRow & row) -> vector<string>
{
    vector<string> problems;
    if (row.skipped)
        return problems;

    auto g = parse_graph6(row.graph6);
    auto where = [&] (int k) { return row.graph6 + " k=" + to_string(k) + ": "; };

    for (int k : row.spectrum.members)
        if (k < 0 || k >= row.p)
            problems.push_back(where(k) + "spectrum member out of range");

    for (int k : row.tested) {
        bool member = row.spectrum.contains(k);
        auto w = row.witnesses.find(k);
        auto x = row.excluded.find(k);
        if (member) {
            if (w == row.witnesses.end()) {
                problems.push_back(where(k) + "member without witness");
                continue;
            }
            auto v = verify_labeling(g, w->second.labeling);
            if (! v.valid || v.c != w->second.c || w->second.labeling.k % row.p != k)
                problems.push_back(where(k) + "witness does not verify");
        }
        else if (x == row.excluded.end())
            problems.push_back(where(k) + "non-member without recorded reason");
        else if ((x->second == KStatus::filtered) == counting_filter(g, k))
            problems.push_back(where(k) + "recorded reason disagrees with counting filter");
    }
    return problems;
}

auto kem::is_prime(int n) -> bool
{
    if (n < 2)
        return false;
    for (int d = 2 ; d * d <= n ; ++d)
        if (0 == n % d)
            return false;
    return true;
}

auto kem::check_mop_conjecture(int p, const Caps & caps, int jobs) -> ConjectureVerdict
{
    if (! is_prime(p) || p < 5)
        throw InvalidInput{ "conjecture check needs a prime p >= 5, got " + to_string(p) };

    auto mops = generate_mops(p, caps);
    auto rows = classify_rows(mops, CensusMode::full_spectrum, {}, jobs);

    ConjectureVerdict verdict;
    verdict.p = p;
    verdict.mops = mops.size();
    verdict.beyond_proved_range = p != 5 && p != 7;

    KSpectrum expected{ p, { 2 % p } };
    for (auto & row : rows)
        if (row.spectrum != expected)
            verdict.counterexamples.emplace_back(row.code, row.spectrum);
    verdict.holds = verdict.counterexamples.empty();

    verdict.filter_forces_two = true;
    for (auto & g : mops)
        for (int k = 0 ; k < p ; ++k)
            if (counting_filter(g, k) != (k == 2 % p))
                verdict.filter_forces_two = false;

    return verdict;
}
