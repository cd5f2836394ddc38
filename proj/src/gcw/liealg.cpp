#include "gcw/liealg.hpp"

#include <algorithm>

namespace gcw {

namespace {

// legal insertion combinations per the colored composition table
bool insertion_legal(const Graph& host, int v, const Graph& guest) {
    if (host.d != guest.d) return false;
    switch (host.flavor) {
    case Flavor::GC: return guest.flavor == Flavor::GC;
    case Flavor::OGC: return guest.flavor == Flavor::OGC;
    case Flavor::HAT:
        return host.is_white(v) ? guest.flavor == Flavor::HAT
                                : guest.flavor == Flavor::OGC;
    }
    return false;
}

// sign of removing vertex v from the host's odd-symbol order and appending
// the guest's odd symbols at the end
int insertion_base_sign(const Graph& host, int v, const Graph& guest) {
    int s = host.sign * guest.sign;
    bool host_edges_odd = edges_odd(host);
    if (vertex_odd(host, v)) {
        int jumped = host_edges_odd ? host.ne : 0;
        for (int u = v + 1; u < host.nv; ++u)
            if (vertex_odd(host, u)) ++jumped;
        if (jumped & 1) s = -s;
    }
    if (host_edges_odd) {
        // guest odd vertices cross the host's edge block
        int guest_odd = 0;
        for (int w = 0; w < guest.nv; ++w)
            if (vertex_odd(guest, w)) ++guest_odd;
        if ((host.ne & 1) && (guest_odd & 1)) s = -s;
    }
    return s;
}

} // namespace

GraphVector insert(const Graph& host, int v, const Graph& guest, int trunc) {
    if (v < 0 || v >= host.nv) throw std::invalid_argument("insert: bad vertex");
    if (host.d != guest.d)
        throw std::invalid_argument("insert: parameter mismatch");
    if (!insertion_legal(host, v, guest))
        throw std::invalid_argument("insert: color/flavor mismatch");
    if (host.labeled != guest.labeled)
        throw std::invalid_argument("insert: labeled/unlabeled mismatch");

    GraphVector out(host.flavor, host.d, trunc);
    if (host.nv - 1 + guest.nv > kMaxV || host.ne + guest.ne > kMaxE) {
        if (trunc > 0 && host.nv - 1 + guest.nv > trunc) return out; // beyond bound
        throw cap_exceeded("insert: capacity exceeded");
    }

    const int base_sign = insertion_base_sign(host, v, guest);

    // vertex relabeling: host keeps low indices with v removed, guest follows
    uint8_t host_map[kMaxV];
    for (int u = 0; u < host.nv; ++u)
        host_map[u] = uint8_t(u < v ? u : u - 1);
    const int guest_base = host.nv - 1;

    // half-edge slots at v, in edge order, source end first
    struct Slot {
        uint8_t edge_idx;
        bool at_src;
    };
    Slot slots[2 * kMaxE];
    int nslots = 0;
    for (int i = 0; i < host.ne; ++i) {
        if (host.edge[i].src == v) slots[nslots++] = {uint8_t(i), true};
        if (host.edge[i].dst == v) slots[nslots++] = {uint8_t(i), false};
    }

    Graph skel;
    skel.flavor = host.flavor;
    skel.d = host.d;
    skel.labeled = host.labeled;
    skel.sign = int8_t(base_sign);
    skel.nv = uint8_t(host.nv - 1 + guest.nv);
    skel.ne = uint8_t(host.ne + guest.ne);
    for (int u = 0; u < host.nv; ++u)
        if (u != v && host.is_white(u)) skel.white_mask |= uint16_t(1u << host_map[u]);
    for (int w = 0; w < guest.nv; ++w)
        if (guest.is_white(w)) skel.white_mask |= uint16_t(1u << (guest_base + w));
    for (int i = 0; i < host.ne; ++i) {
        int s = host.edge[i].src == v ? 0 : host_map[host.edge[i].src];
        int t = host.edge[i].dst == v ? 0 : host_map[host.edge[i].dst];
        skel.edge[i] = Edge{uint8_t(s), uint8_t(t)}; // v-slots patched per term
    }
    for (int i = 0; i < guest.ne; ++i)
        skel.edge[host.ne + i] = Edge{uint8_t(guest_base + guest.edge[i].src),
                                      uint8_t(guest_base + guest.edge[i].dst)};

    const bool needs_acyclic = host.flavor != Flavor::GC;
    // iterate all functions slots -> guest vertices
    uint8_t assign[2 * kMaxE] = {};
    while (true) {
        Graph term = skel;
        for (int s = 0; s < nslots; ++s) {
            uint8_t target = uint8_t(guest_base + assign[s]);
            if (slots[s].at_src)
                term.edge[slots[s].edge_idx].src = target;
            else
                term.edge[slots[s].edge_idx].dst = target;
        }
        if (!needs_acyclic || term.acyclic()) out.add(term, 1);

        int s = 0;
        while (s < nslots && assign[s] == guest.nv - 1) assign[s++] = 0;
        if (s == nslots) break;
        ++assign[s];
    }
    return out;
}

namespace {

// one insertion family: guest term gb into every admissible vertex of ga
void circ_term(const Graph& ga, const Graph& gb, const Rat& coeff, GraphVector& out) {
    for (int v = 0; v < ga.nv; ++v) {
        if (!insertion_legal(ga, v, gb)) continue;
        Rat c = coeff;
        if (ga.flavor == Flavor::HAT && !ga.is_white(v)) {
            // suspension mismatch between the two semidirect factors:
            // (-1)^{(d+1) deg(guest)}
            if (!(ga.d & 1) && (degree(gb) & 1)) c = -c;
        }
        GraphVector parts = insert(ga, v, gb, out.trunc);
        for (const auto& [k, val] : parts.terms) out.add_term(k, val * c);
    }
}

} // namespace

GraphVector circ(const GraphVector& a, const GraphVector& b) {
    if (a.family != b.family || a.d != b.d)
        throw std::invalid_argument("circ: context mismatch");
    if (a.family == Flavor::HAT && a.trunc <= 0)
        throw std::invalid_argument("circ: HAT vectors need a truncation bound");
    GraphVector out(a.family, a.d, a.trunc);
    for (const auto& [ga, ca] : a.terms)
        for (const auto& [gb, cb] : b.terms) circ_term(ga, gb, ca * cb, out);
    return out;
}

GraphVector bracket(const GraphVector& a, const GraphVector& b) {
    if (a.family != b.family || a.d != b.d)
        throw std::invalid_argument("bracket: context mismatch");
    int trunc = std::max(a.trunc, b.trunc);
    if (a.family == Flavor::HAT && trunc <= 0)
        throw std::invalid_argument("bracket: HAT vectors need a truncation bound");
    GraphVector out(a.family, a.d, trunc);
    for (const auto& [ga, ca] : a.terms)
        for (const auto& [gb, cb] : b.terms) {
            Rat c = ca * cb;
            circ_term(ga, gb, c, out);
            if ((degree(ga) & 1) && (degree(gb) & 1))
                circ_term(gb, ga, c, out);
            else
                circ_term(gb, ga, -c, out);
        }
    return out;
}

McElement mc_one_edge(Flavor family, int d) {
    McElement m;
    m.name = "gamma0";
    m.family = family;
    m.d = int8_t(d);
    m.value = GraphVector(family, d);
    Graph e = Graph::make(family, d, 2, {Edge{0, 1}});
    m.value.add(e, 1);
    return m;
}

McElement mc_two_colored(int d, int trunc) {
    if (trunc < 2) throw std::invalid_argument("two-colored MC needs trunc >= 2");
    McElement m;
    m.name = "gammaHat";
    m.family = Flavor::HAT;
    m.d = int8_t(d);
    m.trunc = trunc;
    m.value = GraphVector(Flavor::HAT, d, trunc);

    Graph lone = Graph::make(Flavor::HAT, d, 1, {});
    m.value.add(lone, 1);

    Rat kfact = 1;
    for (int k = 1; k + 1 <= trunc; ++k) {
        kfact *= k;
        Graph corolla;
        corolla.flavor = Flavor::HAT;
        corolla.d = int8_t(d);
        corolla.nv = uint8_t(k + 1);
        for (int i = 1; i <= k; ++i) {
            corolla.add_edge(0, i);
            corolla.white_mask |= uint16_t(1u << i);
        }
        // for odd d the corolla is oriented by interleaved (white, edge)
        // pairs; unshuffling that into the stored block order costs
        // (-1)^{k(k-1)/2}
        Rat c = Rat(1) / kfact;
        if ((d & 1) && ((k * (k - 1) / 2) & 1)) c = -c;
        m.value.add(corolla, c);
    }

    Graph e = Graph::make(Flavor::OGC, d, 2, {Edge{0, 1}});
    m.value.add(e, 1);
    return m;
}

McElement mc_element(const std::string& name, int d, int trunc) {
    if (name == "gamma0") return mc_one_edge(Flavor::GC, d);
    if (name == "gamma0or") return mc_one_edge(Flavor::OGC, d);
    if (name == "gammaHat") return mc_two_colored(d, trunc);
    throw std::invalid_argument("unknown MC element: " + name);
}

bool verify_mc(const McElement& m) { return bracket(m.value, m.value).is_zero(); }

GraphVector differential(const GraphVector& x) {
    if (x.terms.empty()) return x;
    McElement mc;
    switch (x.family) {
    case Flavor::GC: mc = mc_one_edge(Flavor::GC, x.d); break;
    case Flavor::OGC: mc = mc_one_edge(Flavor::OGC, x.d); break;
    case Flavor::HAT:
        if (x.trunc <= 0)
            throw std::invalid_argument("differential: HAT vector needs a truncation bound");
        mc = mc_two_colored(x.d, x.trunc);
        break;
    }
    mc.value.trunc = x.trunc;
    return bracket(mc.value, x);
}

} // namespace gcw
