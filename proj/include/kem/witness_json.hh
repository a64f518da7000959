/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KEM_GUARD_KEM_WITNESS_JSON_HH
#define KEM_GUARD_KEM_WITNESS_JSON_HH 1

#include <kem/solver.hh>

#include <json.hpp>

#include <string>

namespace kem
{
    /// {"k": int, "p": int, "c": int, "labels": [[u, v, label], ...]}, edges sorted.
    auto witness_to_json(const Witness & w, int p) -> nlohmann::ordered_json;

    /// Inverse of witness_to_json; p is written to *p_out when given.
    auto witness_from_json(const nlohmann::ordered_json & j, int * p_out = nullptr) -> Witness;

    auto witness_to_string(const Witness & w, int p) -> std::string;
}

#endif
