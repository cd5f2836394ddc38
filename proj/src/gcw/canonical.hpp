// Canonical forms with sign, and zero detection.
//
// canonicalize() returns a unique representative of the isomorphism class
// together with the sign relating the input orientation to the canonical
// one.  A generator is zero exactly when some automorphism of it reverses
// the orientation; those classes are reported with zero=true.
#pragma once

#include "gcw/graph.hpp"

namespace gcw {

struct Canon {
    Graph graph; // canonical representative, sign normalized to +1
    int sign = 0;
    bool zero = false;
};

Canon canonicalize(const Graph& g);

// Canonical class representative ignoring all sign data.  Same key as
// canonicalize().graph; usable on classes that would be zero.
Graph canonical_class(const Graph& g);

// Forgets colors, directions and parameters; canonical key of the underlying
// undirected multigraph.  Used by the sector enumerator.
Graph undirected_class(const Graph& g);

} // namespace gcw
