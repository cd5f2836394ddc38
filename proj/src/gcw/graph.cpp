#include "gcw/graph.hpp"

#include <algorithm>
#include <sstream>

namespace gcw {

const char* flavor_name(Flavor f) {
    switch (f) {
    case Flavor::GC: return "GC";
    case Flavor::OGC: return "OGC";
    case Flavor::HAT: return "HAT";
    }
    return "?";
}

Graph Graph::make(Flavor f, int d, int nv, std::initializer_list<Edge> es,
                  uint16_t whites) {
    Graph g;
    g.flavor = f;
    g.d = static_cast<int8_t>(d);
    g.nv = static_cast<uint8_t>(nv);
    g.white_mask = whites;
    for (const Edge& e : es) g.add_edge(e.src, e.dst);
    return g;
}

void Graph::add_edge(int s, int t) {
    if (ne >= kMaxE) throw cap_exceeded("edge capacity exceeded");
    edge[ne++] = Edge{static_cast<uint8_t>(s), static_cast<uint8_t>(t)};
}

int Graph::valence(int v) const {
    int k = 0;
    for (int i = 0; i < ne; ++i) {
        if (edge[i].src == v) ++k;
        if (edge[i].dst == v) ++k;
    }
    return k;
}

int Graph::outdeg(int v) const {
    int k = 0;
    for (int i = 0; i < ne; ++i)
        if (edge[i].src == v) ++k;
    return k;
}

int Graph::indeg(int v) const {
    int k = 0;
    for (int i = 0; i < ne; ++i)
        if (edge[i].dst == v) ++k;
    return k;
}

int Graph::tadpoles(int v) const {
    int k = 0;
    for (int i = 0; i < ne; ++i)
        if (edge[i].src == v && edge[i].dst == v) ++k;
    return k;
}

int Graph::num_whites() const { return __builtin_popcount(white_mask); }

bool Graph::connected() const {
    if (nv == 0) return false;
    uint32_t seen = 1;
    uint32_t frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (int i = 0; i < ne; ++i) {
            uint32_t s = 1u << edge[i].src, t = 1u << edge[i].dst;
            if ((seen & s) && !(seen & t)) next |= t;
            if ((seen & t) && !(seen & s)) next |= s;
        }
        seen |= next;
        frontier = next;
    }
    return seen == (1u << nv) - 1;
}

bool Graph::acyclic() const {
    // Kahn peeling on the directed multigraph
    int indegree[kMaxV] = {};
    for (int i = 0; i < ne; ++i) {
        if (edge[i].src == edge[i].dst) return false; // tadpole is a cycle
        ++indegree[edge[i].dst];
    }
    uint32_t removed = 0;
    int count = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < nv; ++v) {
            if ((removed >> v) & 1) continue;
            if (indegree[v] == 0) {
                removed |= 1u << v;
                ++count;
                progress = true;
                for (int i = 0; i < ne; ++i)
                    if (edge[i].src == v) --indegree[edge[i].dst];
            }
        }
    }
    return count == nv;
}

bool Graph::whites_are_sinks() const {
    for (int i = 0; i < ne; ++i)
        if (is_white(edge[i].src)) return false;
    return true;
}

bool Graph::has_tadpole() const {
    for (int i = 0; i < ne; ++i)
        if (edge[i].src == edge[i].dst) return true;
    return false;
}

std::string Graph::check() const {
    if (nv == 0) return "graph has no vertices";
    if (nv > kMaxV) return "vertex capacity exceeded";
    for (int i = 0; i < ne; ++i)
        if (edge[i].src >= nv || edge[i].dst >= nv)
            return "edge endpoint out of range";
    if (sign != 1 && sign != -1) return "orientation sign must be +1 or -1";
    if (flavor != Flavor::HAT && white_mask != 0)
        return "white vertices only occur in flavor HAT";
    if (flavor == Flavor::OGC || flavor == Flavor::HAT) {
        if (!acyclic()) return "directed edges form a closed path";
    }
    if (flavor == Flavor::HAT) {
        if (!whites_are_sinks()) return "white vertex has an outgoing edge";
    }
    return {};
}

bool vertex_odd(const Graph& g, int v) {
    switch (g.flavor) {
    case Flavor::GC: return g.d & 1;            // vertex degree d
    case Flavor::OGC: return !(g.d & 1);        // vertex degree d+1
    case Flavor::HAT:
        // whites degree d, blacks degree d+1
        return g.is_white(v) ? (g.d & 1) : !(g.d & 1);
    }
    return false;
}

bool edges_odd(Flavor f, int d) {
    switch (f) {
    case Flavor::GC: return !(d & 1);  // edge degree 1-d
    case Flavor::OGC: return d & 1;    // edge degree -d
    case Flavor::HAT: return d & 1;    // edge degree -d
    }
    return false;
}

int loop_order(const Graph& g) {
    if (!g.connected()) throw std::runtime_error("loop_order on disconnected graph");
    return g.ne - g.nv + 1;
}

int degree(const Graph& g) {
    int d = g.d, v = g.nv, e = g.ne;
    switch (g.flavor) {
    case Flavor::GC: return d * (v - 1) + (1 - d) * e;
    case Flavor::OGC: return (d + 1) * (v - 1) - d * e;
    case Flavor::HAT: {
        int w = g.num_whites(), b = g.num_blacks();
        return d * w + (d + 1) * b - d * e - d;
    }
    }
    return 0;
}

const char* complex_name(ComplexId c) {
    switch (c) {
    case ComplexId::fGC: return "fGC";
    case ComplexId::GC0: return "GC0";
    case ComplexId::GC2: return "GC2";
    case ComplexId::GC3: return "GC3";
    case ComplexId::fOGC: return "fOGC";
    case ComplexId::OGC0: return "OGC0";
    case ComplexId::OGC2: return "OGC2";
    case ComplexId::OGC3: return "OGC3";
    case ComplexId::HAT: return "HAT";
    case ComplexId::HATblack: return "HATblack";
    }
    return "?";
}

bool parse_complex(const std::string& s, ComplexId& out) {
    for (ComplexId c : {ComplexId::fGC, ComplexId::GC0, ComplexId::GC2,
                        ComplexId::GC3, ComplexId::fOGC, ComplexId::OGC0,
                        ComplexId::OGC2, ComplexId::OGC3, ComplexId::HAT,
                        ComplexId::HATblack}) {
        if (s == complex_name(c)) {
            out = c;
            return true;
        }
    }
    return false;
}

Flavor complex_flavor(ComplexId c) {
    switch (c) {
    case ComplexId::fGC:
    case ComplexId::GC0:
    case ComplexId::GC2:
    case ComplexId::GC3: return Flavor::GC;
    case ComplexId::fOGC:
    case ComplexId::OGC0:
    case ComplexId::OGC2:
    case ComplexId::OGC3: return Flavor::OGC;
    case ComplexId::HAT:
    case ComplexId::HATblack: return Flavor::HAT;
    }
    return Flavor::GC;
}

bool complex_connected(ComplexId c) {
    return c != ComplexId::fGC && c != ComplexId::fOGC;
}

bool validate(const Graph& g, ComplexId c, bool allow_tadpoles) {
    if (!g.check().empty()) return false;
    if (complex_flavor(c) != g.flavor) return false;
    if (complex_connected(c) && !g.connected()) return false;
    switch (c) {
    case ComplexId::fGC:
    case ComplexId::fOGC: break;
    case ComplexId::GC0:
        if (!allow_tadpoles && g.has_tadpole()) return false;
        break;
    case ComplexId::GC2:
        if (!allow_tadpoles && g.has_tadpole()) return false;
        for (int v = 0; v < g.nv; ++v)
            if (g.valence(v) < 2) return false;
        break;
    case ComplexId::GC3:
        if (!allow_tadpoles && g.has_tadpole()) return false;
        for (int v = 0; v < g.nv; ++v)
            if (g.valence(v) < 3) return false;
        break;
    case ComplexId::OGC0: break;
    case ComplexId::OGC2:
        for (int v = 0; v < g.nv; ++v)
            if (g.valence(v) < 2) return false;
        break;
    case ComplexId::OGC3: {
        bool trivalent = false;
        for (int v = 0; v < g.nv; ++v) {
            if (g.valence(v) < 2) return false;
            if (g.valence(v) >= 3) trivalent = true;
        }
        if (!trivalent) return false;
        break;
    }
    case ComplexId::HAT:
        if (g.num_blacks() < 1) return false;
        break;
    case ComplexId::HATblack:
        if (g.num_blacks() < 1) return false;
        if (g.num_whites() != 0) return false;
        break;
    }
    return true;
}

std::string encode(const Graph& g) {
    if (g.labeled) throw std::runtime_error("labeled graphs are not persisted");
    std::ostringstream os;
    os << flavor_name(g.flavor) << ";d=" << int(g.d) << ";V=" << int(g.nv) << ";C=";
    for (int v = 0; v < g.nv; ++v) os << (g.is_white(v) ? 'w' : 'b');
    os << ";E=";
    for (int i = 0; i < g.ne; ++i) {
        if (i) os << ',';
        os << int(g.edge[i].src) << '>' << int(g.edge[i].dst);
    }
    os << ";s=" << (g.sign > 0 ? '+' : '-');
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& line, size_t pos, const char* what) {
    std::ostringstream os;
    os << "parse error at position " << pos << ": " << what << " in \"" << line << "\"";
    throw std::runtime_error(os.str());
}

} // namespace

Graph decode(const std::string& line) {
    Graph g;
    size_t pos = 0;
    auto expect = [&](const char* tok) {
        size_t n = std::string_view(tok).size();
        if (line.compare(pos, n, tok) != 0) parse_fail(line, pos, tok);
        pos += n;
    };
    auto number = [&]() {
        bool neg = pos < line.size() && line[pos] == '-';
        if (neg) ++pos;
        size_t start = pos;
        long v = 0;
        while (pos < line.size() && isdigit(static_cast<unsigned char>(line[pos])))
            v = v * 10 + (line[pos++] - '0');
        if (pos == start) parse_fail(line, pos, "number expected");
        return neg ? -v : v;
    };

    if (line.compare(pos, 3, "GC;") == 0) {
        g.flavor = Flavor::GC;
        pos += 3;
    } else if (line.compare(pos, 4, "OGC;") == 0) {
        g.flavor = Flavor::OGC;
        pos += 4;
    } else if (line.compare(pos, 4, "HAT;") == 0) {
        g.flavor = Flavor::HAT;
        pos += 4;
    } else {
        parse_fail(line, pos, "flavor tag");
    }
    expect("d=");
    g.d = static_cast<int8_t>(number());
    expect(";V=");
    long nv = number();
    if (nv < 1 || nv > kMaxV) parse_fail(line, pos, "vertex count out of range");
    g.nv = static_cast<uint8_t>(nv);
    expect(";C=");
    for (int v = 0; v < g.nv; ++v) {
        if (pos >= line.size()) parse_fail(line, pos, "color string too short");
        char c = line[pos++];
        if (c == 'w')
            g.white_mask |= 1u << v;
        else if (c != 'b')
            parse_fail(line, pos - 1, "color must be b or w");
    }
    expect(";E=");
    if (pos < line.size() && line[pos] != ';') {
        while (true) {
            long s = number();
            expect(">");
            long t = number();
            if (s < 0 || s >= g.nv || t < 0 || t >= g.nv)
                parse_fail(line, pos, "edge endpoint out of range");
            g.add_edge(static_cast<int>(s), static_cast<int>(t));
            if (pos < line.size() && line[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
    }
    expect(";s=");
    if (pos >= line.size()) parse_fail(line, pos, "sign expected");
    char sc = line[pos++];
    if (sc == '+')
        g.sign = +1;
    else if (sc == '-')
        g.sign = -1;
    else
        parse_fail(line, pos - 1, "sign must be + or -");
    if (pos != line.size()) parse_fail(line, pos, "trailing characters");

    std::string err = g.check();
    if (!err.empty()) throw std::runtime_error("invalid graph: " + err);
    return g;
}

} // namespace gcw
