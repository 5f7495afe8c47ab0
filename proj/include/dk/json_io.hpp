// JSON serialization for every object kind, with a "kind" discriminator per
// payload.  Canonical form: sorted keys, no insignificant whitespace, and the
// volatile "timings" field removed, so content hashes (64-bit FNV-1a over the
// canonical text, printed as "fnv1a:<16 hex digits>") are stable across runs.
// Matrix entries are emitted as JSON integers when they fit in 64 bits and as
// decimal strings otherwise; parsing accepts both.  Every parser validates the
// reconstructed object and reports the failing identity by name.

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dk/enriched.hpp"
#include "json.hpp"

namespace dk {

using Json = nlohmann::json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json matrix_to_json(const IntMat& A);  // array of rows
// Row/column counts come from the surrounding payload's rank data.
IntMat matrix_from_json(const Json& j, int rows, int cols);

Json to_json(const ChainComplex& C);
Json to_json(const ChainMap& f);
Json to_json(const SimplicialAbGroup& A);
Json to_json(const SimplicialMap& f);
Json to_json(const DGAlgebra& R);
Json to_json(const SimplicialRing& A);
Json to_json(const IGraph& G);
Json to_json(const ICategory& C);
// Modules reference their ring payload by content hash.
Json to_json(const DGModule& M);
Json to_json(const SimplicialModule& M);

ChainComplex complex_from_json(const Json& j);
ChainMap chain_map_from_json(const Json& j);
SimplicialAbGroup simplicial_from_json(const Json& j);
SimplicialMap simplicial_map_from_json(const Json& j);
DGAlgebra dga_from_json(const Json& j);
SimplicialRing simplicial_ring_from_json(const Json& j);
IGraph igraph_from_json(const Json& j);
ICategory icategory_from_json(const Json& j);
DGModule dg_module_from_json(const Json& j, const std::map<std::string, DGAlgebra>& rings);
SimplicialModule simplicial_module_from_json(const Json& j,
                                             const std::map<std::string, SimplicialRing>& rings);

std::string kind_of(const Json& j);
std::string canonical_json(const Json& j);
std::uint64_t fnv1a64(const std::string& text);
std::string content_hash(const Json& j);
Json parse_text(const std::string& text);

// "H_n = Z^r ⊕ Z/d₁ ⊕ …" with "Z" for rank one and "0" for the trivial group.
std::string homology_line(int n, const CokernelData& H);
std::string homology_table(const ChainComplex& C);

}  // namespace dk
