// Colored directed multigraphs with orientation data.
//
// A generator of one of the three graph families is a graph together with an
// orientation record.  The stored representation fixes the orientation
// implicitly: the edge list order is the edge ordering, the vertex index
// order is the vertex ordering, and `sign` is the global sign.  Which parts
// of that data carry Koszul signs depends on the flavor and the parity of d:
//
//   flavor GC  (parameter d):    vertices have degree d, edges degree 1-d,
//                                edge directions only matter as a flip sign
//                                (-1)^d per flip;
//   flavor OGC (parameter d+1):  vertices degree d+1, edges degree -d,
//                                directions rigid, no directed cycles;
//   flavor HAT (parameter d):    white vertices degree d, black vertices
//                                degree d+1, edges degree -d, directions
//                                rigid, acyclic, whites are sinks.
//
// A class of objects is *ordered up to sign* exactly when its degree is odd.
#pragma once

#include "gcw/base.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gcw {

constexpr int kMaxV = 16;
constexpr int kMaxE = 32;

enum class Flavor : uint8_t { GC = 0, OGC = 1, HAT = 2 };

const char* flavor_name(Flavor f);

struct Edge {
    uint8_t src = 0;
    uint8_t dst = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Graph {
    Flavor flavor = Flavor::GC;
    int8_t d = 2;        // base parameter; OGC formulas use d+1 internally
    bool labeled = false; // vertices pinned (operadic generators); no relabeling
    int8_t sign = +1;
    uint8_t nv = 0;
    uint8_t ne = 0;
    uint16_t white_mask = 0; // bit per vertex; GC/OGC graphs are all black
    std::array<Edge, kMaxE> edge{};

    static Graph make(Flavor f, int d, int nv, std::initializer_list<Edge> es,
                      uint16_t whites = 0);

    bool is_white(int v) const { return (white_mask >> v) & 1; }
    void add_edge(int s, int t);

    // valence counts a tadpole end twice
    int valence(int v) const;
    int outdeg(int v) const;
    int indeg(int v) const;
    int tadpoles(int v) const;
    int num_whites() const;
    int num_blacks() const { return nv - num_whites(); }

    bool connected() const;
    bool acyclic() const; // directed
    bool whites_are_sinks() const;
    bool has_tadpole() const;

    // flavor invariants; returns empty string if fine, else a diagnostic
    std::string check() const;

    friend auto operator<=>(const Graph& a, const Graph& b) = default;
};

// Sign bookkeeping tables ---------------------------------------------------

// true if the given vertex belongs to the odd-degree vertex class
bool vertex_odd(const Graph& g, int v);
// true if edges of this flavor/parity are ordered up to sign
bool edges_odd(Flavor f, int d);
inline bool edges_odd(const Graph& g) { return edges_odd(g.flavor, g.d); }
// true if flipping an edge direction contributes (-1)^d (flavor GC only)
inline bool flips_signed(const Graph& g) { return g.flavor == Flavor::GC; }

// Gradings ------------------------------------------------------------------

// first Betti number e - v + 1; throws on disconnected input
int loop_order(const Graph& g);
// cohomological degree per the flavor's formula
int degree(const Graph& g);

// Complexes -----------------------------------------------------------------

enum class ComplexId : uint8_t {
    fGC, GC0, GC2, GC3, fOGC, OGC0, OGC2, OGC3, HAT, HATblack
};

const char* complex_name(ComplexId c);
bool parse_complex(const std::string& s, ComplexId& out);
Flavor complex_flavor(ComplexId c);
bool complex_connected(ComplexId c);

// membership test for a canonical graph in the named complex; tadpoles in GC
// bases can be excluded via the flag
bool validate(const Graph& g, ComplexId c, bool allow_tadpoles = true);

// Text encoding ---------------------------------------------------------------
// One graph per line: "GC;d=2;V=2;C=bb;E=0>1;s=+" -- byte stable.

std::string encode(const Graph& g);
// throws std::runtime_error with a position diagnostic on malformed input
Graph decode(const std::string& line);

} // namespace gcw
