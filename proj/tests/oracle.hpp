// Test-only reference implementations, kept independent of the search-based
// code paths they check.
#pragma once

#include "gcw/sectors.hpp"

#include <optional>
#include <vector>

namespace gcw::oracle {

// Brute force over all vertex permutations (nv <= 8): minimal certificate,
// orbit sign comparison, zero detection.
Canon canonicalize(const Graph& g);

// parity of the permutation restricted to the odd vertex class, the factor a
// relabeling contributes to the orientation
int odd_class_parity(const Graph& g, const std::vector<int>& perm);

// Naive labeled enumeration of an entire sector followed by signed orbit
// reduction; hard-capped at 7 vertices.
Basis basis(const SectorKey& key, bool allow_tadpoles = true);

// rank of the cycle space of the underlying undirected graph, via GF(2)
// elimination on the incidence matrix
int cycle_space_rank(const Graph& g);

} // namespace gcw::oracle
