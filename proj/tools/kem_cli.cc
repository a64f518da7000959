/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// Command-line front end. Exit status: 0 success (k-EM, conjecture holds),
// 1 negative result, 2 usage or input error.

#include <kem/census.hh>
#include <kem/generators.hh>
#include <kem/graph6.hh>
#include <kem/solver.hh>
#include <kem/witness_json.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

using std::cerr;
using std::cout;
using std::string;
using std::vector;

using namespace kem;

namespace
{
    constexpr int exit_ok = 0, exit_negative = 1, exit_usage = 2;

    struct Source
    {
        std::unique_ptr<std::ifstream> file;
        std::istream * stream = nullptr;
    };

    auto open_source(const string & name) -> Source
    {
        Source s;
        if (name == "-")
            s.stream = &std::cin;
        else {
            s.file = std::make_unique<std::ifstream>(name);
            if (! *s.file)
                throw InvalidInput{ "cannot read " + name };
            s.stream = s.file.get();
        }
        return s;
    }

    auto check_caps(const Caps & caps, int jobs) -> void
    {
        if (caps.p_max < 1 || caps.p_sparse < 1 || caps.q_brute < 1 || caps.q_enum < 1)
            throw InvalidInput{ "caps must be positive" };
        if (jobs < 1)
            throw InvalidInput{ "--jobs must be at least 1" };
    }

    auto print_graphs(const vector<Graph> & graphs) -> void
    {
        for (auto & g : graphs)
            cout << emit_graph6(g) << '\n';
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "k-edge-magic labelling solver, generator and census" };
    app.require_subcommand(1);
    app.fallthrough();

    Caps caps;
    int jobs = 1;
    app.add_option("--p-max", caps.p_max, "largest order for canonical forms and MOP generation")->envname("KEM_P_MAX");
    app.add_option("--p-sparse", caps.p_sparse, "largest order for (p, p-h) generation")->envname("KEM_P_SPARSE");
    app.add_option("--q-brute", caps.q_brute, "edge cap for the brute-force oracle")->envname("KEM_Q_BRUTE");
    app.add_option("--q-enum", caps.q_enum, "edge cap for labelling enumeration")->envname("KEM_Q_ENUM");
    app.add_option("--jobs", jobs, "worker threads for census and conjecture")->envname("KEM_JOBS");

    auto solve = app.add_subcommand("solve", "find a k-edge-magic labelling of one graph");
    string solve_record;
    Label solve_k = 0;
    solve->add_option("graph6", solve_record, "graph6 record")->required();
    solve->add_option("--k", solve_k, "base label")->required();

    auto classify_cmd = app.add_subcommand("classify", "print the k-spectrum of each graph in a graph6 stream");
    string classify_source = "-";
    classify_cmd->add_option("source", classify_source, "graph6 file, or - for standard input");

    auto generate = app.add_subcommand("generate", "write graph6 records for a graph family");
    generate->require_subcommand(1);
    int gen_p = 0, gen_h = 0, family_n = 0;
    bool connected_only = false;
    string family_name;
    auto gen_mop = generate->add_subcommand("mop", "maximal outerplanar graphs of order p");
    gen_mop->add_option("order", gen_p, "order p");
    gen_mop->add_option("--p", gen_p, "order p");
    auto gen_sparse = generate->add_subcommand("sparse", "graphs with p vertices and p-h edges");
    gen_sparse->set_help_flag("--help", "print this help message and exit");
    gen_sparse->add_option("--p", gen_p, "order p")->required();
    gen_sparse->add_option("--h", gen_h, "deficiency h (q = p - h)")->required();
    gen_sparse->add_flag("--connected-only", connected_only, "only connected graphs");
    auto gen_family = generate->add_subcommand("family", "a named family: path cycle star complete fan wheel friendship");
    gen_family->add_option("name", family_name, "family name")->required();
    gen_family->add_option("n", family_n, "size")->required();

    auto census = app.add_subcommand("census", "classify a graph6 stream and write a report");
    string census_source = "-", mode = "spectrum", format = "csv", output;
    vector<Label> census_ks;
    string store;
    census->add_option("source", census_source, "graph6 file, or - for standard input");
    census->add_option("--mode", mode, "spectrum or k-list")->check(CLI::IsMember({ "spectrum", "k-list" }))->envname("KEM_MODE");
    census->add_option("--k", census_ks, "residues to decide in k-list mode");
    census->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({ "csv", "jsonl" }))->envname("KEM_FORMAT");
    census->add_option("--store", store, "persistent JSONL result store")->envname("KEM_STORE");
    census->add_option("--output,-o", output, "report file (default standard output)");
    census->add_flag("--include-empty", "classify edgeless graphs instead of reporting them as skipped");

    auto conjecture = app.add_subcommand("conjecture", "check that every MOP of prime order p has spectrum {2}");
    int conjecture_p = 0;
    conjecture->add_option("p", conjecture_p, "prime order")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        check_caps(caps, jobs);

        if (*solve) {
            auto g = parse_graph6(solve_record);
            if (auto w = is_k_em(g, solve_k)) {
                cout << witness_to_string(*w, g.p()) << '\n';
                return exit_ok;
            }
            cout << "none\n";
            return exit_negative;
        }

        if (*classify_cmd) {
            auto src = open_source(classify_source);
            int status = exit_ok;
            string line;
            for (int n = 1 ; std::getline(*src.stream, line) ; ++n) {
                while (! line.empty() && (line.back() == '\r' || line.back() == ' '))
                    line.pop_back();
                if (line.empty())
                    continue;
                try {
                    auto g = parse_graph6(line);
                    cout << line << '\t' << spectrum_string(classify(g), "-") << '\n';
                }
                catch (const InvalidInput & e) {
                    cerr << "line " << n << ": " << e.what() << '\n';
                    status = exit_usage;
                }
            }
            return status;
        }

        if (*generate) {
            if (*gen_mop)
                print_graphs(generate_mops(gen_p, caps));
            else if (*gen_sparse)
                print_graphs(generate_sparse_graphs(SparseSpec{ gen_p, gen_h }, connected_only, caps));
            else
                cout << emit_graph6(named_family(family_name, family_n)) << '\n';
            return exit_ok;
        }

        if (*census) {
            CensusOptions options;
            options.mode = mode == "spectrum" ? CensusMode::full_spectrum : CensusMode::k_list;
            options.ks = census_ks;
            options.caps = caps;
            options.jobs = jobs;
            options.include_empty = census->count("--include-empty") > 0;
            if (! store.empty())
                options.store = store;
            if (options.mode == CensusMode::k_list && census_ks.empty())
                throw InvalidInput{ "--mode=k-list needs at least one --k" };

            auto src = open_source(census_source);
            auto result = run_census(*src.stream, options);
            for (auto & e : result.errors)
                cerr << e << '\n';

            auto fmt = format == "csv" ? ReportFormat::csv : ReportFormat::jsonl;
            if (output.empty())
                report_emit(result.rows, fmt, cout);
            else
                report_emit(result.rows, fmt, std::filesystem::path{ output });
            return result.errors.empty() ? exit_ok : exit_usage;
        }

        if (*conjecture) {
            auto v = check_mop_conjecture(conjecture_p, caps, jobs);
            cout << (v.holds ? "HOLDS" : "FAILS") << '\n';
            cout << "p=" << v.p << " mops=" << v.mops << " counting filter admits only k=2: " << (v.filter_forces_two ? "yes" : "no") << '\n';
            if (v.beyond_proved_range)
                cout << "note: outside the proved orders 5 and 7; exhaustive evidence only\n";
            for (auto & [code, spectrum] : v.counterexamples)
                cout << "counterexample " << code.code << " spectrum " << spectrum_string(spectrum, "-") << '\n';
            return v.holds ? exit_ok : exit_negative;
        }
    }
    catch (const InvalidInput & e) {
        cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const CapExceeded & e) {
        cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }

    return exit_usage;
}
