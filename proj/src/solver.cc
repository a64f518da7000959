/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kem/solver.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using std::function;
using std::map;
using std::nullopt;
using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

using namespace kem;

namespace
{
    auto mod(Label a, int p) -> int
    {
        Label r = a % p;
        return int(r < 0 ? r + p : r);
    }

    auto check_k(Label k) -> void
    {
        if (k < 0)
            throw InvalidInput{ "k must be nonnegative, got " + to_string(k) };
    }

    /// Concrete labels from per-edge residues: within each residue class, the
    /// interval's labels go to edges in increasing edge order.
    auto witness_from_residues(const Graph & g, Label k, const vector<int> & residue_of_edge, int c) -> Witness
    {
        int p = g.p();
        vector<vector<Label> > pool(p);
        for (Label l = k ; l < k + g.q() ; ++l)
            pool[mod(l, p)].push_back(l);

        vector<std::size_t> next(p, 0);
        Witness w;
        w.c = c;
        w.labeling.k = k;
        for (int e = 0 ; e < g.q() ; ++e) {
            int r = residue_of_edge[e];
            w.labeling.assignment.emplace_back(g.edges()[e], pool[r][next[r]++]);
        }
        return w;
    }

    /**
     * Backtracking over residue assignments along a fixed edge order. With a
     * target constant, completed vertices must hit it; without one, the first
     * completed vertex fixes it.
     */
    class ResidueSearch
    {
        private:
            const Graph & _g;
            int _p;
            vector<int> _order;                 // position -> edge index
            vector<vector<int> > _completes;    // position -> vertices finished there
            vector<int> _isolated;
            vector<int> _counts;
            vector<int> _sums;
            vector<int> _residue_of_edge;
            optional<int> _c;
            function<auto (const vector<int> &, int) -> bool> _found;

            auto assign(int pos) -> bool
            {
                if (pos == int(_order.size()))
                    return _found(_residue_of_edge, *_c);

                const Edge & e = _g.edges()[_order[pos]];
                for (int r = 0 ; r < _p ; ++r) {
                    if (0 == _counts[r])
                        continue;

                    --_counts[r];
                    int old_u = _sums[e.u], old_v = _sums[e.v];
                    _sums[e.u] = (old_u + r) % _p;
                    _sums[e.v] = (old_v + r) % _p;
                    _residue_of_edge[_order[pos]] = r;

                    bool fixed_here = false;
                    bool ok = true;
                    for (int v : _completes[pos]) {
                        if (! _c) {
                            _c = _sums[v];
                            fixed_here = true;
                        }
                        else if (_sums[v] != *_c) {
                            ok = false;
                            break;
                        }
                    }

                    bool keep_going = true;
                    if (ok)
                        keep_going = assign(pos + 1);

                    if (fixed_here)
                        _c = nullopt;
                    _sums[e.u] = old_u;
                    _sums[e.v] = old_v;
                    ++_counts[r];

                    if (! keep_going)
                        return false;
                }
                return true;
            }

        public:
            ResidueSearch(const Graph & g, Label k, vector<int> order) :
                _g(g),
                _p(g.p()),
                _order(std::move(order)),
                _completes(_order.size()),
                _counts(label_residues(k, g.q(), g.p()).counts),
                _sums(g.p(), 0),
                _residue_of_edge(g.q(), -1)
            {
                vector<int> last(g.p(), -1);
                for (int pos = 0 ; pos < int(_order.size()) ; ++pos) {
                    const Edge & e = g.edges()[_order[pos]];
                    last[e.u] = pos;
                    last[e.v] = pos;
                }
                for (int v = 0 ; v < g.p() ; ++v) {
                    if (last[v] < 0)
                        _isolated.push_back(v);
                    else
                        _completes[last[v]].push_back(v);
                }
            }

            /// Calls found(residues, c) per solution until it returns false.
            auto run(optional<int> target, function<auto (const vector<int> &, int) -> bool> found) -> void
            {
                _found = std::move(found);
                _c = target;
                if (! _isolated.empty()) {
                    if (_c && *_c != 0)
                        return;
                    _c = 0;
                }
                assign(0);
            }
    };

    /// Vertices in breadth-first order (each component rooted at its
    /// highest-degree vertex); a vertex's unlisted edges are appended when it
    /// is visited, so it is complete from then on.
    auto breadth_first_edge_order(const Graph & g) -> vector<int>
    {
        auto adj = g.adjacency();
        auto deg = g.degrees();
        vector<int> roots(g.p());
        for (int v = 0 ; v < g.p() ; ++v)
            roots[v] = v;
        std::stable_sort(roots.begin(), roots.end(), [&] (int a, int b) { return deg[a] > deg[b]; });

        vector<bool> seen(g.p(), false), listed(g.q(), false);
        vector<int> order;
        for (int root : roots) {
            if (seen[root])
                continue;
            seen[root] = true;
            vector<int> queue{ root };
            for (std::size_t head = 0 ; head < queue.size() ; ++head) {
                int v = queue[head];
                for (int w : adj[v]) {
                    int e = g.edge_index(v, w);
                    if (! listed[e]) {
                        listed[e] = true;
                        order.push_back(e);
                    }
                    if (! seen[w]) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        return order;
    }
}

auto KSpectrum::contains(Label k) const -> bool
{
    return std::binary_search(members.begin(), members.end(), mod(k, p));
}

auto kem::label_residues(Label k, int q, int p) -> ResidueMultiset
{
    ResidueMultiset result{ p, vector<int>(p, q / p) };
    int start = mod(k, p);
    for (int i = 0 ; i < q % p ; ++i)
        ++result.counts[(start + i) % p];
    return result;
}

auto kem::counting_filter(const Graph & g, Label k) -> bool
{
    Label p = g.p(), q = g.q();
    Label total = ((2 * q) % p) * mod(k, g.p()) + (q * (q - 1)) % p;
    return 0 == total % p;
}

auto kem::is_k_em(const Graph & g, Label k) -> optional<Witness>
{
    check_k(k);
    if (0 == g.q())
        return witness_from_residues(g, k, {}, 0);

    ResidueSearch search{ g, k, breadth_first_edge_order(g) };
    optional<Witness> result;
    for (int c = 0 ; c < g.p() && ! result ; ++c)
        search.run(c, [&] (const vector<int> & residues, int found_c) {
            result = witness_from_residues(g, k, residues, found_c);
            return false;
        });
    return result;
}

auto kem::classify_detailed(const Graph & g, const vector<Label> & ks) -> vector<KOutcome>
{
    std::set<int> residues;
    for (auto k : ks) {
        check_k(k);
        residues.insert(mod(k, g.p()));
    }

    vector<KOutcome> result;
    for (int k : residues) {
        if (! counting_filter(g, k))
            result.push_back(KOutcome{ k, KStatus::filtered, nullopt });
        else if (auto w = is_k_em(g, k))
            result.push_back(KOutcome{ k, KStatus::magic, std::move(w) });
        else
            result.push_back(KOutcome{ k, KStatus::exhausted, nullopt });
    }
    return result;
}

auto kem::classify(const Graph & g) -> KSpectrum
{
    vector<Label> ks;
    for (int k = 0 ; k < g.p() ; ++k)
        ks.push_back(k);

    KSpectrum result{ g.p(), {} };
    for (auto & o : classify_detailed(g, ks))
        if (o.status == KStatus::magic)
            result.members.push_back(o.k);
    return result;
}

auto kem::verify_labeling(const Graph & g, const Labeling & labeling) -> VerifyResult
{
    VerifyResult result;
    int p = g.p();

    vector<int> labelled(g.q(), 0);
    vector<Label> label_of(g.q(), 0);
    for (auto & [e, l] : labeling.assignment) {
        int idx = g.edge_index(e.u, e.v);
        if (idx < 0)
            throw InvalidInput{ "labelling names edge (" + to_string(e.u) + "," + to_string(e.v) + ") which is not in the graph" };
        ++labelled[idx];
        label_of[idx] = l;
    }

    for (int i = 0 ; i < g.q() ; ++i) {
        auto & e = g.edges()[i];
        if (labelled[i] != 1)
            result.violations.push_back("edge (" + to_string(e.u) + "," + to_string(e.v) + ") labelled " + to_string(labelled[i]) + " times");
    }

    std::multiset<Label> used;
    for (auto & [e, l] : labeling.assignment)
        used.insert(l);
    for (Label l = labeling.k ; l < labeling.k + g.q() ; ++l)
        if (used.count(l) != 1)
            result.violations.push_back("label " + to_string(l) + " used " + to_string(used.count(l)) + " times");
    for (Label l : used)
        if (l < labeling.k || l >= labeling.k + g.q())
            result.violations.push_back("label " + to_string(l) + " outside [" + to_string(labeling.k) + ", " + to_string(labeling.k + g.q() - 1) + "]");

    vector<int> sums(p, 0);
    for (int i = 0 ; i < g.q() ; ++i) {
        auto & e = g.edges()[i];
        sums[e.u] = (sums[e.u] + mod(label_of[i], p)) % p;
        sums[e.v] = (sums[e.v] + mod(label_of[i], p)) % p;
    }
    for (int v = 1 ; v < p ; ++v)
        if (sums[v] != sums[0])
            result.violations.push_back("vertex sums differ mod " + to_string(p) + ": vertex 0 has " + to_string(sums[0])
                    + ", vertex " + to_string(v) + " has " + to_string(sums[v]));

    result.valid = result.violations.empty();
    result.c = sums[0];
    return result;
}

auto kem::enumerate_labelings(const Graph & g, Label k, std::size_t limit, int q_enum) -> vector<Witness>
{
    check_k(k);
    if (g.q() > q_enum)
        throw CapExceeded{ "enumeration requested for q=" + to_string(g.q()) + " above cap " + to_string(q_enum) };

    vector<Witness> result;
    if (0 == limit)
        return result;
    if (0 == g.q()) {
        result.push_back(witness_from_residues(g, k, {}, 0));
        return result;
    }

    vector<int> natural(g.q());
    for (int e = 0 ; e < g.q() ; ++e)
        natural[e] = e;
    ResidueSearch search{ g, k, natural };
    search.run(nullopt, [&] (const vector<int> & residues, int c) {
        result.push_back(witness_from_residues(g, k, residues, c));
        return result.size() < limit;
    });
    return result;
}

auto kem::brute_force_is_k_em(const Graph & g, Label k, int q_brute) -> optional<Witness>
{
    check_k(k);
    if (g.q() > q_brute)
        throw CapExceeded{ "brute force requested for q=" + to_string(g.q()) + " above cap " + to_string(q_brute) };

    int p = g.p();
    vector<Label> labels;
    for (Label l = k ; l < k + g.q() ; ++l)
        labels.push_back(l);

    // permute residues only; labels within a class are interchangeable
    vector<int> residues;
    for (Label l : labels)
        residues.push_back(int(l % p));
    std::sort(residues.begin(), residues.end());

    do {
        vector<int> sums(p, 0);
        for (int i = 0 ; i < g.q() ; ++i) {
            sums[g.edges()[i].u] += residues[i];
            sums[g.edges()[i].v] += residues[i];
        }
        bool magic = std::all_of(sums.begin(), sums.end(), [&] (int s) { return s % p == sums[0] % p; });
        if (magic) {
            map<int, vector<Label> > pool;
            for (Label l : labels)
                pool[int(l % p)].push_back(l);
            Witness w;
            w.c = sums[0] % p;
            w.labeling.k = k;
            for (int i = 0 ; i < g.q() ; ++i) {
                auto & bucket = pool[residues[i]];
                w.labeling.assignment.emplace_back(g.edges()[i], bucket.front());
                bucket.erase(bucket.begin());
            }
            return w;
        }
    } while (std::next_permutation(residues.begin(), residues.end()));

    return nullopt;
}

auto kem::spectrum_string(const KSpectrum & s, const string & empty_marker) -> string
{
    if (s.members.empty())
        return empty_marker;
    string result;
    for (auto m : s.members) {
        if (! result.empty())
            result += ';';
        result += to_string(m);
    }
    return result;
}
