/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kem/witness_json.hh>

#include <algorithm>

using nlohmann::ordered_json;
using std::string;

using namespace kem;

auto kem::witness_to_json(const Witness & w, int p) -> ordered_json
{
    auto assignment = w.labeling.assignment;
    std::sort(assignment.begin(), assignment.end());

    ordered_json labels = ordered_json::array();
    for (auto & [e, l] : assignment)
        labels.push_back(ordered_json::array({ e.u, e.v, l }));

    ordered_json result;
    result["k"] = w.labeling.k;
    result["p"] = p;
    result["c"] = w.c;
    result["labels"] = std::move(labels);
    return result;
}

auto kem::witness_from_json(const ordered_json & j, int * p_out) -> Witness
{
    try {
        Witness w;
        w.labeling.k = j.at("k").get<Label>();
        w.c = j.at("c").get<int>();
        for (auto & triple : j.at("labels")) {
            if (! triple.is_array() || triple.size() != 3)
                throw InvalidInput{ "witness label entries must be [u, v, label]" };
            w.labeling.assignment.emplace_back(Edge{ triple[0].get<int>(), triple[1].get<int>() }, triple[2].get<Label>());
        }
        if (p_out)
            *p_out = j.at("p").get<int>();
        return w;
    }
    catch (const nlohmann::json::exception & e) {
        throw InvalidInput{ string{ "malformed witness JSON: " } + e.what() };
    }
}

auto kem::witness_to_string(const Witness & w, int p) -> string
{
    return witness_to_json(w, p).dump();
}
