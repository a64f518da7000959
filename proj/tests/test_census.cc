/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kem/census.hh>
#include <kem/generators.hh>
#include <kem/graph6.hh>

#include "oracles.hh"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kem;
using std::string;
using std::vector;

namespace
{
    auto csv(const vector<CensusRow> & rows) -> string
    {
        std::ostringstream out;
        report_emit(rows, ReportFormat::csv, out);
        return out.str();
    }

    auto jsonl(const vector<CensusRow> & rows) -> string
    {
        std::ostringstream out;
        report_emit(rows, ReportFormat::jsonl, out);
        return out.str();
    }

    auto temp_path(const string & name) -> std::filesystem::path
    {
        auto p = std::filesystem::temp_directory_path() / ("kem_test_" + name);
        std::filesystem::remove(p);
        return p;
    }

    auto k_list(vector<Label> ks) -> CensusOptions
    {
        CensusOptions o;
        o.mode = CensusMode::k_list;
        o.ks = std::move(ks);
        return o;
    }
}

TEST_CASE("census over MOPs")
{
    auto r4 = run_census(generate_mops(4), CensusOptions{});
    REQUIRE(r4.rows.size() == 1);
    CHECK(r4.rows[0].spectrum == KSpectrum{ 4, { 2 } });
    CHECK(r4.rows[0].tested == vector<int>{ 0, 1, 2, 3 });

    auto r7 = run_census(generate_mops(7), k_list({ 3 }));
    CHECK(r7.rows.size() == 4);
    CHECK(rows_with_k(r7.rows, 3).empty());
    for (auto & row : r7.rows)
        CHECK(row.tested == vector<int>{ 3 });

    CHECK(run_census(vector<Graph>{}, CensusOptions{}).rows.empty());
}

TEST_CASE("census over a graph6 stream")
{
    std::istringstream in{ "A_\n\nnot-a-graph\nBw\r\nA_\n" };
    auto r = run_census(in, CensusOptions{});
    REQUIRE(r.errors.size() == 1);
    CHECK(r.errors[0].starts_with("line 3:"));
    REQUIRE(r.rows.size() == 2);
    CHECK(r.computed == 2);
    CHECK(r.rows[0].graph6 == "A_");
    CHECK(r.rows[0].spectrum.members == vector<int>{ 0, 1 });
    CHECK(r.rows[1].spectrum.members.empty());
    CHECK(r.rows[1].excluded.size() == 3);

    std::istringstream empty{ "" };
    CHECK(run_census(empty, CensusOptions{}).rows.empty());
}

TEST_CASE("isomorphic inputs share a row")
{
    vector<Graph> in{ named_family("path", 4), graph_from_edges(4, { { 2, 0 }, { 0, 3 }, { 3, 1 } }), named_family("star", 4) };
    auto r = run_census(in, CensusOptions{});
    CHECK(r.rows.size() == 2);
    CHECK(r.computed == 2);
}

TEST_CASE("rows over caps or without edges are reported as skipped")
{
    vector<Graph> in{ named_family("path", 12), Graph{ 3, {} }, named_family("path", 3) };
    auto r = run_census(in, CensusOptions{});
    REQUIRE(r.rows.size() == 3);
    int skipped = 0;
    for (auto & row : r.rows)
        skipped += row.skipped;
    CHECK(skipped == 2);
    auto text = csv(r.rows);
    CHECK(text.find(",12,11,skipped\n") != string::npos);
    CHECK(text.find("B?,3,0,skipped\n") != string::npos);

    CensusOptions with_empty;
    with_empty.include_empty = true;
    auto r2 = run_census(vector<Graph>{ Graph{ 3, {} } }, with_empty);
    REQUIRE(r2.rows.size() == 1);
    CHECK(r2.rows[0].spectrum.members == vector<int>{ 0, 1, 2 });
}

TEST_CASE("report_emit")
{
    auto k2 = run_census(vector<Graph>{ graph_from_edges(2, { { 0, 1 } }) }, CensusOptions{});
    CHECK(csv(k2.rows) == "graph6,p,q,spectrum\nA_,2,1,0;1\n");
    CHECK(csv({}) == "graph6,p,q,spectrum\n");
    CHECK(jsonl({}).empty());

    auto rows = run_census(generate_mops(6), CensusOptions{}).rows;
    rows.push_back(run_census(vector<Graph>{ named_family("path", 12) }, CensusOptions{}).rows.at(0));
    std::istringstream back{ jsonl(rows) };
    CHECK(load_rows(back) == rows);

    auto dest = temp_path("report.csv");
    report_emit(rows, ReportFormat::csv, dest);
    std::ifstream f{ dest };
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str() == csv(rows));
    std::filesystem::remove(dest);

    CHECK_THROWS_AS(report_emit(rows, ReportFormat::csv, std::filesystem::path{ "/nonexistent-dir/x.csv" }), std::runtime_error);
}

TEST_CASE("census determinism and serial reference")
{
    vector<Graph> in;
    for (int p = 3 ; p <= 8 ; ++p)
        for (auto & g : generate_mops(p))
            in.push_back(g);
    for (int h = 0 ; h <= 2 ; ++h)
        for (auto & g : generate_sparse_graphs({ 5, h }, false))
            in.push_back(g.relabelled({ 4, 3, 2, 1, 0 }));

    CensusOptions parallel;
    parallel.jobs = 4;
    auto a = run_census(in, parallel);
    auto b = run_census(in, CensusOptions{});
    auto s = run_census_serial(in, CensusOptions{});
    CHECK(jsonl(a.rows) == jsonl(b.rows));
    CHECK(a.rows == s.rows);

    for (auto & row : a.rows)
        CHECK(audit_row(row).empty());
}

TEST_CASE("persistent store")
{
    auto store = temp_path("store.jsonl");
    auto graphs = generate_mops(6);
    for (auto & g : generate_mops(7))
        graphs.push_back(g);

    CensusOptions options;
    options.store = store;
    auto cold = run_census(graphs, options);
    CHECK(cold.computed == 7);
    CHECK(cold.reused == 0);

    auto warm = run_census(graphs, options);
    CHECK(warm.computed == 0);
    CHECK(warm.reused == 7);
    CHECK(jsonl(warm.rows) == jsonl(cold.rows));

    // k-list runs are served from full-spectrum rows
    auto opts_k = k_list({ 3, 4 });
    opts_k.store = store;
    auto from_store = run_census(graphs, opts_k);
    CHECK(from_store.reused == 7);
    CHECK(jsonl(from_store.rows) == jsonl(run_census(graphs, k_list({ 3, 4 })).rows));

    // rows under another version tag are ignored
    {
        std::ofstream out{ store, std::ios::trunc };
        string line = row_to_json(cold.rows[0]);
        auto pos = line.find(solver_version);
        line.replace(pos, string{ solver_version }.size(), "kem-solver-0");
        out << line << '\n';
    }
    CHECK(run_census(graphs, options).computed == 7);

    std::filesystem::remove(store);
}

TEST_CASE("audit_row catches tampering")
{
    auto row = run_census(generate_mops(4), CensusOptions{}).rows.at(0);
    CHECK(audit_row(row).empty());

    auto bad = row;
    bad.witnesses.at(2).labeling.assignment[0].second += 1;
    CHECK(! audit_row(bad).empty());

    auto wrong_reason = row;
    wrong_reason.excluded.at(0) = KStatus::filtered;
    CHECK(! audit_row(wrong_reason).empty());
}

TEST_CASE("check_mop_conjecture")
{
    auto v5 = check_mop_conjecture(5);
    CHECK(v5.holds);
    CHECK(v5.mops == 1);
    CHECK(v5.filter_forces_two);
    CHECK(! v5.beyond_proved_range);

    auto v7 = check_mop_conjecture(7, Caps{}, 2);
    CHECK(v7.holds);
    CHECK(v7.mops == 4);
    CHECK(v7.counterexamples.empty());

    CHECK_THROWS_AS(check_mop_conjecture(6), InvalidInput);
    CHECK_THROWS_AS(check_mop_conjecture(3), InvalidInput);
    CHECK_THROWS_AS(check_mop_conjecture(11), CapExceeded);

    // the verdict matches a census over the same MOPs
    auto rows = run_census(generate_mops(7), CensusOptions{}).rows;
    bool all_two = std::all_of(rows.begin(), rows.end(), [] (auto & r) { return r.spectrum == KSpectrum{ 7, { 2 } }; });
    CHECK(all_two == v7.holds);
}
