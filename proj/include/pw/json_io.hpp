#pragma once

// JSON documents for posets, lattices, spaces, chains, Stone maps and
// validation reports. Output is canonical: covers sorted, keys in fixed
// order, so equal values serialize to identical bytes.

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pw/chains.hpp"
#include "pw/duality.hpp"

namespace pw {

using Json = nlohmann::ordered_json;

// {"size": n, "covers": [[i, j], ...], "labels": [...]?}. Labels are only
// written when some point has a non-default label.
Json poset_to_json(const Poset& P);
Poset poset_from_json(const Json& j);

// {"birkhoff": poset} when the lattice is distributive, otherwise
// {"elements": n, "leq": [[i, j], ...], "bottom": b, "top": t}.
Json lattice_to_json(const FinDLat& L);
// Accepts both forms; a bare poset document is read as its Birkhoff lattice.
FinDLat lattice_from_json(const Json& j);

// {"priestley": poset}; a bare poset document is also accepted.
Json space_to_json(const FinPriestley& X);
FinPriestley space_from_json(const Json& j);

// {"chain": ["fin:3", "omega", "dense"]}.
Json chain_to_json(const ChainFrame& C);
ChainFrame chain_from_json(const Json& j);

// The space document extended with "filters" and "phi" (lists of element
// and point indices).
Json stone_record_to_json(const StoneMapRecord& rec);

Json report_to_json(const ValidationReport& r, bool with_timing = true);

// 64-bit FNV-1a over the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);
// Stable content id of a poset: hash of the canonical relabelling's
// document (labels dropped).
std::string poset_id(const Poset& P);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pw
