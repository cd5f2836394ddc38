#include "gcw/sectors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gcw {

std::string SectorKey::str() const {
    std::ostringstream os;
    os << complex_name(complex_id) << ";d=" << int(d) << ";g=" << int(g);
    if (complex_flavor(complex_id) == Flavor::HAT)
        os << ";vw=" << int(vw) << ";vb=" << int(vb);
    else
        os << ";v=" << int(vb);
    return os.str();
}

SectorKey parse_sector_key(const std::string& s) {
    SectorKey k;
    std::istringstream is(s);
    std::string tok;
    if (!std::getline(is, tok, ';') || !parse_complex(tok, k.complex_id))
        throw std::runtime_error("bad sector key: " + s);
    auto field = [&](const char* name) {
        if (!std::getline(is, tok, ';') || tok.rfind(name, 0) != 0)
            throw std::runtime_error("bad sector key field in: " + s);
        return std::stoi(tok.substr(std::string_view(name).size()));
    };
    k.d = int8_t(field("d="));
    k.g = int8_t(field("g="));
    if (complex_flavor(k.complex_id) == Flavor::HAT) {
        k.vw = int8_t(field("vw="));
        k.vb = int8_t(field("vb="));
    } else {
        k.vb = int8_t(field("v="));
    }
    return k;
}

int sector_degree(const SectorKey& key) {
    int d = key.d, v = key.v(), e = key.e();
    switch (complex_flavor(key.complex_id)) {
    case Flavor::GC: return d * (v - 1) + (1 - d) * e;
    case Flavor::OGC: return (d + 1) * (v - 1) - d * e;
    case Flavor::HAT: return d * key.vw + (d + 1) * key.vb - d * e - d;
    }
    return 0;
}

void Basis::finish() {
    std::sort(graphs.begin(), graphs.end(),
              [](const Graph& a, const Graph& b) { return encode(a) < encode(b); });
    index.clear();
    for (size_t i = 0; i < graphs.size(); ++i) index[graphs[i]] = int(i);
}

// ---------------------------------------------------------------------------
// undirected classes

namespace {

// connected multigraphs with min valence >= 3 (tadpole ends count twice);
// labeled enumeration over non-decreasing pair sequences with deficit pruning
void enumerate_cores(int v, int e, long cap, std::set<Graph>& out) {
    if (v < 1 || e < 0) return;
    struct Pair {
        uint8_t a, b;
    };
    std::vector<Pair> pairs;
    for (int a = 0; a < v; ++a)
        for (int b = a; b < v; ++b) pairs.push_back({uint8_t(a), uint8_t(b)});
    const int np = int(pairs.size());
    std::vector<int> val(v, 0);
    std::vector<int> chosen;
    long visited = 0;

    // largest pair index touching each vertex: (u, v-1) packs after all (x<=u,*)
    std::vector<int> last_pair(v);
    for (int i = 0; i < np; ++i) last_pair[pairs[i].a] = i;

    auto rec = [&](auto&& self, int min_pair, int left) -> void {
        if (++visited > cap) throw cap_exceeded("core enumeration cap exceeded");
        if (left == 0) {
            Graph g;
            g.flavor = Flavor::GC;
            g.d = 2;
            g.nv = uint8_t(v);
            for (int idx : chosen) g.add_edge(pairs[idx].a, pairs[idx].b);
            if (!g.connected()) return;
            out.insert(canonical_class(g));
            return;
        }
        int deficit = 0;
        for (int u = 0; u < v; ++u) deficit += std::max(0, 3 - val[u]);
        if (deficit > 2 * left) return;
        for (int u = 0; u < v; ++u)
            if (val[u] < 3 && last_pair[u] < min_pair) return; // frozen under valence
        for (int i = min_pair; i < np; ++i) {
            chosen.push_back(i);
            int add = pairs[i].a == pairs[i].b ? 2 : 1;
            val[pairs[i].a] += add;
            if (pairs[i].a != pairs[i].b) val[pairs[i].b] += 1;
            self(self, i, left - 1);
            val[pairs[i].a] -= add;
            if (pairs[i].a != pairs[i].b) val[pairs[i].b] -= 1;
            chosen.pop_back();
        }
    };
    rec(rec, 0, e);
}

std::map<std::pair<int, int>, std::vector<Graph>> g_class_memo;
std::mutex g_class_mutex;

} // namespace

const std::vector<Graph>& undirected_classes(int v, int g, long cap) {
    if (v < 1 || g < 0) throw std::invalid_argument("bad class parameters");
    if (v > kMaxV) throw cap_exceeded("vertex count beyond capacity");
    {
        std::lock_guard<std::mutex> lock(g_class_mutex);
        auto it = g_class_memo.find({v, g});
        if (it != g_class_memo.end()) return it->second;
    }

    std::set<Graph> classes;
    if (v == 1) {
        Graph single;
        single.flavor = Flavor::GC;
        single.d = 2;
        single.nv = 1;
        for (int i = 0; i < g; ++i) single.add_edge(0, 0);
        classes.insert(canonical_class(single));
    } else {
        // every connected graph with a valence-1 vertex is a pendant
        // extension, every remaining one with a valence-2 vertex is an edge
        // subdivision, and the rest have min valence 3
        const std::vector<Graph>& smaller = undirected_classes(v - 1, g, cap);
        for (const Graph& parent : smaller) {
            if (int(parent.ne) + 1 > kMaxE) throw cap_exceeded("edge capacity");
            for (int u = 0; u < parent.nv; ++u) {
                Graph child = parent;
                child.nv = uint8_t(parent.nv + 1);
                child.add_edge(u, parent.nv);
                classes.insert(canonical_class(child));
            }
            for (int i = 0; i < parent.ne; ++i) {
                Graph child = parent;
                child.nv = uint8_t(parent.nv + 1);
                child.edge[i] = Edge{parent.edge[i].src, uint8_t(parent.nv)};
                child.add_edge(std::min<int>(parent.edge[i].dst, parent.nv),
                               std::max<int>(parent.edge[i].dst, parent.nv));
                classes.insert(canonical_class(child));
            }
        }
        if (v <= 2 * g - 2) enumerate_cores(v, v + g - 1, cap, classes);
    }
    std::lock_guard<std::mutex> lock(g_class_mutex);
    auto [it, fresh] = g_class_memo.try_emplace({v, g});
    if (fresh) it->second.assign(classes.begin(), classes.end());
    return it->second;
}

// ---------------------------------------------------------------------------
// orientations and colorings

namespace {

// all acyclic edge orientations of a connected undirected multigraph,
// reported as raw labeled digraphs
void expand_acyclic(const Graph& und, std::vector<Graph>& out) {
    const int n = und.nv;
    uint16_t reach[kMaxV]; // reach[u] = vertices reachable from u
    for (int u = 0; u < n; ++u) reach[u] = uint16_t(1u << u);

    Graph cur = und;
    auto rec = [&](auto&& self, int i, uint16_t reach_state[kMaxV]) -> void {
        if (i == und.ne) {
            out.push_back(cur);
            return;
        }
        int a = und.edge[i].src, b = und.edge[i].dst;
        if (a == b) return; // tadpole: no acyclic orientation
        for (int dir = 0; dir < 2; ++dir) {
            int s = dir ? b : a, t = dir ? a : b;
            if ((reach_state[t] >> s) & 1) continue; // t already reaches s
            uint16_t saved[kMaxV];
            std::copy(reach_state, reach_state + n, saved);
            for (int u = 0; u < n; ++u)
                if ((reach_state[u] >> s) & 1) reach_state[u] |= reach_state[t];
            cur.edge[i] = Edge{uint8_t(s), uint8_t(t)};
            self(self, i + 1, reach_state);
            std::copy(saved, saved + n, reach_state);
        }
    };
    rec(rec, 0, reach);
}

bool undirected_valence_ok(const Graph& u, ComplexId c) {
    switch (c) {
    case ComplexId::GC2:
    case ComplexId::OGC2:
        for (int v = 0; v < u.nv; ++v)
            if (u.valence(v) < 2) return false;
        return true;
    case ComplexId::GC3:
        for (int v = 0; v < u.nv; ++v)
            if (u.valence(v) < 3) return false;
        return true;
    case ComplexId::OGC3: {
        bool tri = false;
        for (int v = 0; v < u.nv; ++v) {
            if (u.valence(v) < 2) return false;
            tri = tri || u.valence(v) >= 3;
        }
        return tri;
    }
    default: return true;
    }
}

// canonical nonzero graphs contributed by one undirected class
void expand_class(const Graph& und, const SectorKey& key, std::set<Graph>& out,
                  std::atomic<long>& budget) {
    Flavor flavor = complex_flavor(key.complex_id);
    auto charge = [&](long n) {
        if ((budget -= n) < 0) throw cap_exceeded("sector candidate cap exceeded");
    };

    if (flavor == Flavor::GC) {
        Graph g = und;
        g.d = key.d;
        charge(1);
        Canon cn = canonicalize(g);
        if (!cn.zero) out.insert(cn.graph);
        return;
    }

    if (und.has_tadpole()) return;
    std::vector<Graph> oriented;
    expand_acyclic(und, oriented);
    charge(long(oriented.size()));

    if (flavor == Flavor::OGC) {
        for (Graph& g : oriented) {
            g.flavor = Flavor::OGC;
            g.d = key.d;
            Canon cn = canonicalize(g);
            if (!cn.zero) out.insert(cn.graph);
        }
        return;
    }

    // HAT: paint white subsets of the sinks
    for (Graph& g : oriented) {
        g.flavor = Flavor::HAT;
        g.d = key.d;
        uint16_t sinks = 0;
        for (int v = 0; v < g.nv; ++v)
            if (g.outdeg(v) == 0) sinks |= uint16_t(1u << v);
        if (__builtin_popcount(sinks) < key.vw) continue;
        // iterate subsets of `sinks` with popcount vw
        for (uint16_t sub = sinks;; sub = (sub - 1) & sinks) {
            if (__builtin_popcount(sub) == key.vw) {
                charge(1);
                g.white_mask = sub;
                Canon cn = canonicalize(g);
                if (!cn.zero) out.insert(cn.graph);
            }
            if (sub == 0) break;
        }
        g.white_mask = 0;
    }
}

// disjoint unions of connected pieces, for the non-connected complexes
void build_unions(const SectorKey& key, const GenOptions& opts, std::set<Graph>& out);

} // namespace

Basis generate_basis(const SectorKey& key, const GenOptions& opts) {
    Basis basis;
    basis.key = key;
    if (key.v() < 1 || key.e() < 0) return basis;
    if (complex_flavor(key.complex_id) == Flavor::HAT && key.vb < 1) return basis;

    if (!complex_connected(key.complex_id)) {
        std::set<Graph> acc;
        build_unions(key, opts, acc);
        basis.graphs.assign(acc.begin(), acc.end());
        basis.finish();
        return basis;
    }

    const std::vector<Graph>& classes =
        undirected_classes(key.v(), key.g, opts.candidate_cap);
    std::vector<const Graph*> work;
    for (const Graph& und : classes) {
        if (complex_flavor(key.complex_id) != Flavor::GC && und.has_tadpole()) continue;
        if (!opts.allow_tadpoles && und.has_tadpole()) continue;
        if (!undirected_valence_ok(und, key.complex_id)) continue;
        work.push_back(&und);
    }

    std::atomic<long> budget{opts.candidate_cap};
    std::set<Graph> acc;
    int threads = opts.threads;
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    threads = 1;
#endif
    if (threads > 1) {
#ifdef _OPENMP
        std::vector<std::set<Graph>> local;
        local.resize(size_t(threads));
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (size_t i = 0; i < work.size(); ++i) {
            try {
                expand_class(*work[i], key, local[size_t(omp_get_thread_num())], budget);
            } catch (...) {
#pragma omp critical
                err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        for (auto& s : local) acc.merge(s);
#endif
    } else {
        for (const Graph* und : work) expand_class(*und, key, acc, budget);
    }

    for (const Graph& g : acc) {
        if (!validate(g, key.complex_id, opts.allow_tadpoles))
            throw std::logic_error("generated graph fails complex membership: " + encode(g));
    }
    basis.graphs.assign(acc.begin(), acc.end());
    basis.finish();
    return basis;
}

namespace {

// Disjoint unions of connected pieces.  A union with c components and
// component loop orders g_i has e = v + sum(g_i) - c edges, so the sector's
// bookkeeping value g = e - v + 1 forces sum(g_i) = g + c - 1.
void build_unions(const SectorKey& key, const GenOptions& opts, std::set<Graph>& out) {
    ComplexId connected_id =
        key.complex_id == ComplexId::fGC ? ComplexId::GC0 : ComplexId::OGC0;
    const int v = key.v(), g = key.g;

    struct Part {
        int v, g;
    };
    std::vector<Part> profile;
    std::vector<Basis> bases; // aligned with profile

    // component graphs: combinations with repetition inside equal parts
    std::function<void(size_t, std::vector<const Graph*>&)> choose =
        [&](size_t pi, std::vector<const Graph*>& picked) {
            if (pi == profile.size()) {
                Graph u;
                u.flavor = complex_flavor(key.complex_id);
                u.d = key.d;
                int base = 0;
                for (const Graph* comp : picked) {
                    for (int i = 0; i < comp->ne; ++i)
                        u.add_edge(comp->edge[i].src + base, comp->edge[i].dst + base);
                    base += comp->nv;
                }
                u.nv = uint8_t(base);
                Canon cn = canonicalize(u);
                if (!cn.zero) out.insert(cn.graph);
                return;
            }
            const Basis& b = bases[pi];
            bool same_as_prev = pi > 0 && profile[pi].v == profile[pi - 1].v &&
                                profile[pi].g == profile[pi - 1].g;
            int lo = same_as_prev ? bases[pi - 1].index_of(*picked.back()) : 0;
            for (int i = lo; i < b.size(); ++i) {
                picked.push_back(&b.graphs[i]);
                choose(pi + 1, picked);
                picked.pop_back();
            }
        };

    auto run_profile = [&]() {
        bases.clear();
        for (const Part& p : profile) {
            SectorKey ck;
            ck.complex_id = connected_id;
            ck.d = key.d;
            ck.g = int8_t(p.g);
            ck.vb = int8_t(p.v);
            GenOptions o = opts;
            o.threads = 1;
            bases.push_back(generate_basis(ck, o));
            if (bases.back().size() == 0) return;
        }
        std::vector<const Graph*> picked;
        choose(0, picked);
    };

    // profiles with exactly c parts, non-increasing to avoid repeats
    std::function<void(int, int, int, Part)> split = [&](int v_left, int g_left,
                                                         int parts_left, Part max_part) {
        if (parts_left == 0) {
            if (v_left == 0 && g_left == 0) run_profile();
            return;
        }
        if (v_left < parts_left) return;
        for (int pv = std::min(v_left, max_part.v); pv >= 1; --pv) {
            int pg_hi = pv == max_part.v ? std::min(g_left, max_part.g) : g_left;
            for (int pg = pg_hi; pg >= 0; --pg) {
                profile.push_back({pv, pg});
                split(v_left - pv, g_left - pg, parts_left - 1, {pv, pg});
                profile.pop_back();
            }
        }
    };

    for (int c = 1; c <= v; ++c) {
        int gsum = g + c - 1;
        if (gsum < 0) continue;
        split(v, gsum, c, {v, gsum});
    }
}

} // namespace

std::vector<std::string> basis_to_lines(const Basis& b) {
    std::vector<std::string> lines;
    lines.push_back("#sector;" + b.key.str());
    for (const Graph& g : b.graphs) lines.push_back(encode(g));
    return lines;
}

Basis basis_from_lines(const std::vector<std::string>& lines) {
    if (lines.empty() || lines[0].rfind("#sector;", 0) != 0)
        throw std::runtime_error("basis file missing #sector header");
    Basis b;
    b.key = parse_sector_key(lines[0].substr(8));
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        b.graphs.push_back(decode(lines[i]));
    }
    b.finish();
    return b;
}

} // namespace gcw
