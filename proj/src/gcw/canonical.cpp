#include "gcw/canonical.hpp"

#include <algorithm>
#include <cstring>

namespace gcw {

namespace {

constexpr int kLeafCap = 1 << 20;

// Individualization-refinement over ordered partitions.  Cells are refined
// by iterated neighbor-multiplicity signatures; the first non-singleton cell
// is branched on.  All discrete leaves attaining the minimal certificate are
// the canonical labeling composed with the automorphism group, so comparing
// their signs decides vanishing.
struct Searcher {
    const Graph* g = nullptr;
    int n = 0;
    bool directed = false;
    bool class_only = false;
    uint8_t out[kMaxV][kMaxV]; // multiplicities, diagonal = tadpoles
    uint8_t in[kMaxV][kMaxV];

    struct Partition {
        uint8_t order[kMaxV];      // vertices in cell order
        uint8_t cell_start[kMaxV]; // start index of the cell containing order[i]
    };

    // best certificate seen: colors in new order, then sorted relabeled edges
    uint16_t best_cert[kMaxV + kMaxE];
    int cert_len = 0;
    bool have_best = false;
    uint8_t best_perm[kMaxV]; // old index -> new index
    bool seen_plus = false, seen_minus = false;
    long leaves = 0;

    void init(const Graph& gr, bool want_directed) {
        g = &gr;
        n = gr.nv;
        directed = want_directed;
        std::memset(out, 0, sizeof(out));
        std::memset(in, 0, sizeof(in));
        for (int i = 0; i < gr.ne; ++i) {
            int s = gr.edge[i].src, t = gr.edge[i].dst;
            if (directed) {
                ++out[s][t];
                ++in[t][s];
            } else if (s == t) {
                ++out[s][s];
            } else {
                ++out[s][t];
                ++out[t][s];
            }
        }
        cert_len = n + gr.ne;
    }

    // signature of v against the current partition (cell starts as labels)
    int signature(const Partition& p, const uint8_t cell_of[kMaxV], int v,
                  uint16_t sig[2 * kMaxV]) const {
        (void)p;
        int len = 0;
        for (int u = 0; u < n; ++u) {
            if (out[v][u]) sig[len++] = uint16_t((cell_of[u] << 8) | out[v][u]);
        }
        std::sort(sig, sig + len);
        if (directed) {
            int len2 = len;
            for (int u = 0; u < n; ++u)
                if (in[v][u]) sig[len2++] = uint16_t(0x8000 | (cell_of[u] << 8) | in[v][u]);
            std::sort(sig + len, sig + len2);
            len = len2;
        }
        return len;
    }

    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            uint8_t cell_of[kMaxV];
            for (int i = 0; i < n; ++i) cell_of[p.order[i]] = p.cell_start[i];
            for (int start = 0; start < n;) {
                int end = start + 1;
                while (end < n && p.cell_start[end] == p.cell_start[start]) ++end;
                int size = end - start;
                if (size > 1) {
                    uint16_t sigs[kMaxV][2 * kMaxV];
                    int sig_len[kMaxV];
                    uint8_t idx[kMaxV];
                    for (int i = 0; i < size; ++i) {
                        sig_len[i] = signature(p, cell_of, p.order[start + i], sigs[i]);
                        idx[i] = uint8_t(i);
                    }
                    auto less = [&](uint8_t a, uint8_t b) {
                        return std::lexicographical_compare(
                            sigs[a], sigs[a] + sig_len[a], sigs[b], sigs[b] + sig_len[b]);
                    };
                    std::stable_sort(idx, idx + size, less);
                    uint8_t reordered[kMaxV];
                    for (int i = 0; i < size; ++i) reordered[i] = p.order[start + idx[i]];
                    bool split = false;
                    for (int i = 0; i < size; ++i) {
                        p.order[start + i] = reordered[i];
                        if (i > 0 && less(idx[i - 1], idx[i])) {
                            p.cell_start[start + i] = uint8_t(start + i);
                            split = true;
                        } else if (i > 0) {
                            p.cell_start[start + i] = p.cell_start[start + i - 1];
                        }
                    }
                    if (split) {
                        changed = true;
                        for (int i = 0; i < n; ++i) cell_of[p.order[i]] = p.cell_start[i];
                    }
                }
                start = end;
            }
        }
    }

    void visit_leaf(const Partition& p) {
        if (++leaves > kLeafCap) throw cap_exceeded("canonical search leaf cap exceeded");
        uint8_t perm[kMaxV]; // old -> new
        for (int i = 0; i < n; ++i) perm[p.order[i]] = uint8_t(i);
        uint16_t cert[kMaxV + kMaxE];
        for (int i = 0; i < n; ++i) cert[i] = g->is_white(p.order[i]) ? 1 : 0;
        uint16_t* ec = cert + n;
        for (int i = 0; i < g->ne; ++i) {
            int a = perm[g->edge[i].src], b = perm[g->edge[i].dst];
            if (!directed && a > b) std::swap(a, b);
            ec[i] = uint16_t((a << 8) | b);
        }
        std::sort(ec, ec + g->ne);
        int cmp = have_best
                      ? std::memcmp(cert, best_cert, size_t(cert_len) * sizeof(uint16_t))
                      : -1;
        if (cmp < 0) {
            std::memcpy(best_cert, cert, size_t(cert_len) * sizeof(uint16_t));
            std::memcpy(best_perm, perm, sizeof(perm));
            have_best = true;
            seen_plus = seen_minus = false;
            if (!class_only) record_sign(perm);
        } else if (cmp == 0 && !class_only) {
            record_sign(perm);
        }
    }

    // sign of the relabeling `perm` applied to g, relative to the canonical
    // orientation (sorted edge list, ascending vertex order)
    int labeling_sign(const uint8_t perm[kMaxV]) const {
        int s = g->sign;
        int flips = 0;
        uint16_t keys[kMaxE];
        for (int i = 0; i < g->ne; ++i) {
            int a = perm[g->edge[i].src], b = perm[g->edge[i].dst];
            if (g->flavor == Flavor::GC && a > b) {
                std::swap(a, b);
                ++flips;
            }
            keys[i] = uint16_t((a << 8) | b);
        }
        if (g->flavor == Flavor::GC && (g->d & 1) && (flips & 1)) s = -s;
        if (edges_odd(*g)) {
            int inv = 0;
            for (int i = 0; i < g->ne; ++i)
                for (int j = i + 1; j < g->ne; ++j)
                    if (keys[j] < keys[i]) inv ^= 1;
            if (inv) s = -s;
        }
        // parity of perm restricted to the odd vertex class
        int inv = 0;
        for (int u = 0; u < n; ++u) {
            if (!vertex_odd(*g, u)) continue;
            for (int w = u + 1; w < n; ++w) {
                if (!vertex_odd(*g, w)) continue;
                if (perm[w] < perm[u]) inv ^= 1;
            }
        }
        if (inv) s = -s;
        return s;
    }

    void record_sign(const uint8_t perm[kMaxV]) {
        if (labeling_sign(perm) > 0)
            seen_plus = true;
        else
            seen_minus = true;
    }

    void search(Partition& p) {
        refine(p);
        int branch = -1;
        for (int start = 0; start < n;) {
            int end = start + 1;
            while (end < n && p.cell_start[end] == p.cell_start[start]) ++end;
            if (end - start > 1) {
                branch = start;
                break;
            }
            start = end;
        }
        if (branch < 0) {
            visit_leaf(p);
            return;
        }
        int end = branch + 1;
        while (end < n && p.cell_start[end] == p.cell_start[branch]) ++end;
        for (int pick = branch; pick < end; ++pick) {
            Partition q = p;
            std::swap(q.order[branch], q.order[pick]);
            for (int i = branch + 1; i < end; ++i) q.cell_start[i] = uint8_t(branch + 1);
            // keep the remainder of the split cell in index order
            std::sort(q.order + branch + 1, q.order + end);
            search(q);
        }
    }

    void run() {
        Partition p;
        // initial partition: sort vertices by (color, tadpoles, degrees)
        uint32_t key[kMaxV];
        for (int v = 0; v < n; ++v) {
            uint32_t k = g->is_white(v) ? 1u : 0u;
            k = (k << 6) | uint32_t(out[v][v]);
            if (directed)
                k = (k << 12) | (uint32_t(g->outdeg(v)) << 6) | uint32_t(g->indeg(v));
            else
                k = (k << 12) | uint32_t(g->valence(v));
            key[v] = k;
        }
        for (int i = 0; i < n; ++i) p.order[i] = uint8_t(i);
        std::sort(p.order, p.order + n,
                  [&](uint8_t a, uint8_t b) { return key[a] < key[b] || (key[a] == key[b] && a < b); });
        p.cell_start[0] = 0;
        for (int i = 1; i < n; ++i)
            p.cell_start[i] = key[p.order[i]] == key[p.order[i - 1]] ? p.cell_start[i - 1]
                                                                     : uint8_t(i);
        search(p);
    }
};

Canon canonicalize_impl(const Graph& g, bool class_only) {
    std::string err = g.check();
    if (!err.empty()) throw std::runtime_error("canonicalize: " + err);

    Canon res;
    if (!class_only) {
        // a tadpole flip reverses orientation when edge flips carry a sign
        if (g.flavor == Flavor::GC && (g.d & 1) && g.has_tadpole()) {
            res.zero = true;
            return res;
        }
    }

    Graph canon = g;
    canon.sign = +1;

    if (g.labeled) {
        // vertices are pinned; only the edge ordering is normalized
        uint16_t keys[kMaxE];
        int flips = 0;
        for (int i = 0; i < g.ne; ++i) {
            int a = g.edge[i].src, b = g.edge[i].dst;
            if (g.flavor == Flavor::GC && a > b) {
                std::swap(a, b);
                ++flips;
            }
            keys[i] = uint16_t((a << 8) | b);
        }
        int s = g.sign;
        if (g.flavor == Flavor::GC && (g.d & 1) && (flips & 1)) s = -s;
        if (edges_odd(g)) {
            int inv = 0;
            for (int i = 0; i < g.ne; ++i)
                for (int j = i + 1; j < g.ne; ++j)
                    if (keys[j] < keys[i]) inv ^= 1;
            if (inv) s = -s;
        }
        std::sort(keys, keys + g.ne);
        for (int i = 0; i < g.ne; ++i)
            canon.edge[i] = Edge{uint8_t(keys[i] >> 8), uint8_t(keys[i] & 0xff)};
        if (!class_only && edges_odd(g)) {
            for (int i = 0; i + 1 < g.ne; ++i)
                if (keys[i] == keys[i + 1]) {
                    res.zero = true;
                    return res;
                }
        }
        res.graph = canon;
        res.sign = s;
        return res;
    }

    thread_local Searcher sr;
    sr.have_best = false;
    sr.seen_plus = sr.seen_minus = false;
    sr.leaves = 0;
    sr.class_only = class_only;
    sr.init(g, g.flavor != Flavor::GC);
    sr.run();

    // rebuild the canonical graph from the winning certificate
    canon.white_mask = 0;
    for (int i = 0; i < sr.n; ++i)
        if (sr.best_cert[i]) canon.white_mask |= uint16_t(1u << i);
    for (int i = 0; i < g.ne; ++i) {
        uint16_t e = sr.best_cert[sr.n + i];
        canon.edge[i] = Edge{uint8_t(e >> 8), uint8_t(e & 0xff)};
    }
    res.graph = canon;
    if (class_only) {
        res.sign = +1;
        return res;
    }

    if (edges_odd(g)) {
        for (int i = 0; i + 1 < g.ne; ++i)
            if (sr.best_cert[sr.n + i] == sr.best_cert[sr.n + i + 1]) {
                res.zero = true;
                return res;
            }
    }
    if (sr.seen_plus && sr.seen_minus) {
        res.zero = true;
        return res;
    }
    res.sign = sr.seen_plus ? +1 : -1;
    return res;
}

} // namespace

Canon canonicalize(const Graph& g) { return canonicalize_impl(g, false); }

Graph canonical_class(const Graph& g) { return canonicalize_impl(g, true).graph; }

Graph undirected_class(const Graph& g) {
    Graph u;
    u.flavor = Flavor::GC;
    u.d = 2;
    u.nv = g.nv;
    for (int i = 0; i < g.ne; ++i) {
        int a = g.edge[i].src, b = g.edge[i].dst;
        u.add_edge(std::min(a, b), std::max(a, b));
    }
    return canonical_class(u);
}

} // namespace gcw
