// Sector bases: one canonical representative per nonzero isomorphism class
// of a complex restricted to fixed (d, loop order, vertex count).
//
// Enumeration runs in three stages: connected undirected multigraph classes
// grow by pendant edges and edge subdivisions from min-valence-3 cores, then
// directed flavors expand each class into its acyclic orientations, then the
// two-colored flavor paints white subsets of the sinks.
#pragma once

#include "gcw/vector.hpp"

#include <map>
#include <string>
#include <vector>

namespace gcw {

struct SectorKey {
    ComplexId complex_id = ComplexId::GC0;
    int8_t d = 2;
    int8_t g = 0;  // loop order
    int8_t vw = 0; // white vertices (HAT only)
    int8_t vb = 0; // black vertices; total count for single-colored flavors

    int v() const { return vw + vb; }
    int e() const { return v() + g - 1; }
    std::string str() const;
    friend auto operator<=>(const SectorKey&, const SectorKey&) = default;
};

// cohomological degree shared by all members of the sector
int sector_degree(const SectorKey& key);

struct Basis {
    SectorKey key;
    std::vector<Graph> graphs; // sorted by canonical encoding
    std::map<Graph, int> index;

    int size() const { return int(graphs.size()); }
    int index_of(const Graph& g) const {
        auto it = index.find(g);
        return it == index.end() ? -1 : it->second;
    }
    void finish(); // sorts and rebuilds the index
};

struct GenOptions {
    bool allow_tadpoles = true; // GC bases only
    long candidate_cap = 50'000'000;
    int threads = 0; // 0 = library default
};

// connected undirected multigraph classes with v vertices and first Betti
// number g; memoized, thread safe
const std::vector<Graph>& undirected_classes(int v, int g, long cap = 50'000'000);

Basis generate_basis(const SectorKey& key, const GenOptions& opts = {});

// serialization: "#sector;<key>" header then one encoded graph per line
std::vector<std::string> basis_to_lines(const Basis& b);
Basis basis_from_lines(const std::vector<std::string>& lines);
SectorKey parse_sector_key(const std::string& s);

} // namespace gcw
