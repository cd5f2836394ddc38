// Vertex insertion with reattachment sums, the pre-Lie product, the Lie
// bracket, Maurer-Cartan elements and the differentials they twist.
//
// Insertion orientation transport: the replaced vertex is moved to the end
// of the odd-symbol order (sign per odd symbol jumped over) and removed; the
// guest's odd symbols are appended at the end, vertices before edges.  In
// family HAT the insertion of a plain oriented guest into a black vertex
// additionally carries the factor (-1)^{(d+1) deg(guest)}, the suspension
// mismatch between the two factors of the semidirect product.  Conventions
// differing from this one by a sign additive under composition are conjugate
// under a diagonal isomorphism, so the choice is normalization, pinned here
// by the Maurer-Cartan equation of the two-colored element.
#pragma once

#include "gcw/vector.hpp"

namespace gcw {

// signed sum over all reattachments of the half-edges at `v` to the guest's
// vertices; terms violating the target family's constraints are zero and
// dropped.  Throws on flavor/color/parameter mismatch.
GraphVector insert(const Graph& host, int v, const Graph& guest, int trunc = 0);

// pre-Lie product, bilinear vertex-sum extension of insert
GraphVector circ(const GraphVector& a, const GraphVector& b);

// [a,b] = a∘b - (-1)^{|a||b|} b∘a, degrees taken termwise
GraphVector bracket(const GraphVector& a, const GraphVector& b);

struct McElement {
    std::string name; // "gamma0" or "gammaHat"
    Flavor family = Flavor::GC;
    int8_t d = 2;
    int trunc = 0;
    GraphVector value;
};

// the one-edge element of family GC resp. OGC
McElement mc_one_edge(Flavor family, int d);
// the two-colored element: lone black vertex, 1/k! black-to-k-whites
// corollas, and the directed edge; truncated at `trunc` total vertices
McElement mc_two_colored(int d, int trunc);

McElement mc_element(const std::string& name, int d, int trunc = 0);

// true iff bracket(m, m) vanishes (exactly below the truncation bound)
bool verify_mc(const McElement& m);

// differential of the complex x lives in: bracket with the family's MC
// element.  HAT vectors must carry a truncation bound.
GraphVector differential(const GraphVector& x);

} // namespace gcw
