// Formal linear combinations of canonical graphs with exact rational
// coefficients.  A vector in family HAT is a pair (two-colored part, plain
// oriented part); the two components are kept in one term map, told apart by
// the key's flavor.
#pragma once

#include "gcw/canonical.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gcw {

struct GraphVector {
    Flavor family = Flavor::GC;
    int8_t d = 2;
    int trunc = 0; // maximum total vertex count; 0 = unbounded
    std::map<Graph, Rat> terms;

    GraphVector() = default;
    GraphVector(Flavor f, int d_, int trunc_ = 0)
        : family(f), d(int8_t(d_)), trunc(trunc_) {}

    bool key_allowed(const Graph& g) const {
        if (g.d != d) return false;
        if (g.flavor == family) return true;
        return family == Flavor::HAT && g.flavor == Flavor::OGC;
    }

    // canonicalizes, folds the sign into the coefficient, drops zero classes
    // and terms above the truncation bound
    void add(const Graph& g, const Rat& c);
    // key must already be canonical with sign +1
    void add_term(const Graph& key, const Rat& c);

    void add_scaled(const GraphVector& other, const Rat& c);
    void negate();
    void truncate(int bound);

    bool is_zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }
    Rat coeff(const Graph& key) const;

    // one term per line, "num/den;<encoded graph>", sorted by key
    std::vector<std::string> to_lines() const;
    static GraphVector from_lines(Flavor family, int d,
                                  const std::vector<std::string>& lines);

    friend bool operator==(const GraphVector& a, const GraphVector& b) {
        return a.terms == b.terms;
    }
};

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

} // namespace gcw
