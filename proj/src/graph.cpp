#include "regtri/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace regtri {

EdgeSet EdgeSet::from_pairs(std::vector<VertexPair> raw) {
    EdgeSet es;
    for (auto& [u, v] : raw) {
        if (u > v) std::swap(u, v);
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    es.pairs = std::move(raw);
    return es;
}

void EdgeSet::add(int u, int v) {
    if (u > v) std::swap(u, v);
    if (!contains(u, v)) pairs.emplace_back(u, v);
}

bool EdgeSet::contains(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(pairs.begin(), pairs.end(), VertexPair{u, v}) != pairs.end();
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("vertex count out of range [0, " +
                                    std::to_string(max_vertices) + "]: " + std::to_string(n));
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex index out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
}

int Graph::degree(int v) const {
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
    return d;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

bool Graph::is_regular(int k) const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != k) return false;
    return true;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(16);
    for_neighbors(v, [&](int w) { out.push_back(w); });
    return out;
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u)
        for_neighbors(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

long long TriangleCensus::edge_triangles(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(per_edge.begin(), per_edge.end(), VertexPair{u, v},
                               [](const auto& entry, const VertexPair& key) { return entry.first < key; });
    if (it == per_edge.end() || it->first != VertexPair{u, v})
        throw std::invalid_argument("no census entry: not an edge");
    return it->second;
}

namespace {

long long intersect_count(const std::uint64_t* a, const std::uint64_t* b, int words) {
    long long c = 0;
    for (int w = 0; w < words; ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
}

// Popcount of (a & b) restricted to indices > v.
long long intersect_count_above(const std::uint64_t* a, const std::uint64_t* b, int words, int v) {
    int w0 = (v + 1) >> 6;
    if (w0 >= words) return 0;
    long long c = 0;
    std::uint64_t first = a[w0] & b[w0] & (~0ULL << ((v + 1) & 63));
    c += __builtin_popcountll(first);
    for (int w = w0 + 1; w < words; ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
}

}  // namespace

TriangleCensus count_triangles(const Graph& g) {
    const int n = g.vertex_count();
    const int words = g.words_per_row();
    TriangleCensus c;
    c.per_vertex.assign(n, 0);

    long long total_from_above = 0;  // each triangle counted once, at its lex-least edge pair
    long long per_edge_sum = 0;
    for (int u = 0; u < n; ++u) {
        g.for_neighbors(u, [&](int v) {
            if (u >= v) return;
            long long t = intersect_count(g.row(u), g.row(v), words);
            c.per_edge.push_back({{u, v}, t});
            per_edge_sum += t;
            c.per_vertex[u] += t;
            c.per_vertex[v] += t;
            total_from_above += intersect_count_above(g.row(u), g.row(v), words, v);
        });
    }
    // Every triangle contributes to three per-edge counts; the masked count
    // sees it exactly once. Disagreement would be an implementation bug.
    if (per_edge_sum != 3 * total_from_above)
        throw std::logic_error("triangle census internal mismatch");
    c.total = total_from_above;
    for (int v = 0; v < n; ++v) {
        // Each triangle at v is seen by its two incident edges.
        c.per_vertex[v] /= 2;
    }
    return c;
}

long long count_triangles_naive(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("naive census limited to n <= 64");
    long long t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) continue;
            for (int k = j + 1; k < n; ++k)
                if (g.has_edge(i, k) && g.has_edge(j, k)) ++t;
        }
    return t;
}

BipartiteResult is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    BipartiteResult res;
    res.color.assign(n, -1);
    std::vector<int> parent(n, -1), depth(n, 0);

    for (int root = 0; root < n; ++root) {
        if (res.color[root] != -1) continue;
        res.color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            int bad = -1;
            g.for_neighbors(u, [&](int v) {
                if (res.color[v] == -1) {
                    res.color[v] = static_cast<std::int8_t>(1 - res.color[u]);
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (res.color[v] == res.color[u] && bad < 0) {
                    bad = v;
                }
            });
            if (bad >= 0) {
                // Walk both endpoints up to their lowest common ancestor;
                // equal colors guarantee the resulting cycle is odd.
                int a = u, b = bad;
                std::vector<int> pa, pb;
                while (depth[a] > depth[b]) { pa.push_back(a); a = parent[a]; }
                while (depth[b] > depth[a]) { pb.push_back(b); b = parent[b]; }
                while (a != b) {
                    pa.push_back(a);
                    pb.push_back(b);
                    a = parent[a];
                    b = parent[b];
                }
                pa.push_back(a);
                res.odd_cycle = pa;
                for (auto it = pb.rbegin(); it != pb.rend(); ++it) res.odd_cycle.push_back(*it);
                res.bipartite = false;
                return res;
            }
        }
    }
    res.bipartite = true;
    return res;
}

namespace {

struct OddCycleHit {
    int length = -1;
    int root = -1, x = -1, y = -1;  // same-level edge (x, y) in the BFS from root
};

OddCycleHit shortest_odd_closure(const Graph& g) {
    const int n = g.vertex_count();
    OddCycleHit hit;
    // one O(e) sweep settles the common case and spares the per-root scan
    if (is_bipartite(g).bipartite) return hit;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> bfs;
    bfs.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        bfs.clear();
        bfs.push_back(root);
        dist[root] = 0;
        for (std::size_t head = 0; head < bfs.size(); ++head) {
            int u = bfs[head];
            if (hit.length >= 0 && 2 * dist[u] + 1 >= hit.length) break;
            g.for_neighbors(u, [&](int v) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    bfs.push_back(v);
                } else if (dist[v] == dist[u] && v > u) {
                    // Same-level edge closes an odd walk of length 2d+1, which
                    // contains an odd cycle no longer than that.
                    int len = 2 * dist[u] + 1;
                    if (hit.length < 0 || len < hit.length) hit = {len, root, u, v};
                }
            });
        }
        if (hit.length == 3) break;
    }
    return hit;
}

}  // namespace

std::optional<int> shortest_odd_cycle(const Graph& g) {
    OddCycleHit hit = shortest_odd_closure(g);
    if (hit.length < 0) return std::nullopt;
    return hit.length;
}

std::optional<std::vector<int>> shortest_odd_cycle_witness(const Graph& g) {
    OddCycleHit hit = shortest_odd_closure(g);
    if (hit.length < 0) return std::nullopt;

    // Rebuild the BFS tree from the recorded root and close the walk
    // root..x - xy - y..root; stripping the shared ancestor tail leaves an
    // odd cycle, which has exactly the minimum length.
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
    std::vector<int> bfs{hit.root};
    dist[static_cast<std::size_t>(hit.root)] = 0;
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        int u = bfs[head];
        g.for_neighbors(u, [&](int v) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                bfs.push_back(v);
            }
        });
    }
    int a = hit.x, b = hit.y;
    std::vector<int> pa, pb;
    while (a != b) {
        pa.push_back(a);
        pb.push_back(b);
        a = parent[static_cast<std::size_t>(a)];
        b = parent[static_cast<std::size_t>(b)];
    }
    pa.push_back(a);  // the meeting vertex
    std::vector<int> cycle = pa;
    for (auto it = pb.rbegin(); it != pb.rend(); ++it) cycle.push_back(*it);
    // cycle order: x .. lca .. y, closed by the edge (y, x)
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

std::optional<std::array<int, 5>> find_c5(const Graph& g, const std::vector<int>& restrict_set) {
    const int n = g.vertex_count();
    std::vector<char> in(n, 0);
    for (int v : restrict_set) {
        if (v < 0 || v >= n) throw std::out_of_range("restrict set vertex out of range");
        in[v] = 1;
    }
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
        if (in[v]) verts.push_back(v);

    // v0 is the smallest vertex of the cycle; v1 < v4 picks one orientation.
    for (int v0 : verts) {
        std::optional<std::array<int, 5>> hit;
        auto ok = [&](int x) { return in[x] && x > v0; };
        g.for_neighbors(v0, [&](int v1) {
            if (hit || !ok(v1)) return;
            g.for_neighbors(v1, [&](int v2) {
                if (hit || !ok(v2) || v2 == v1) return;
                g.for_neighbors(v2, [&](int v3) {
                    if (hit || !ok(v3) || v3 == v1 || v3 == v2) return;
                    g.for_neighbors(v3, [&](int v4) {
                        if (hit || !ok(v4) || v4 <= v1 || v4 == v2 || v4 == v3) return;
                        if (g.has_edge(v4, v0)) hit = std::array<int, 5>{v0, v1, v2, v3, v4};
                    });
                });
            });
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

Graph delete_edges(const Graph& g, const EdgeSet& edges) {
    Graph out = g;
    for (auto [u, v] : edges.pairs) {
        if (!out.has_edge(u, v))
            throw std::invalid_argument("delete_edges: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not an edge");
        out.remove_edge(u, v);
    }
    return out;
}

Graph induced(const Graph& g, const std::vector<int>& subset) {
    const int n = g.vertex_count();
    std::vector<int> map(n, -1);
    int m = 0;
    for (int v : subset) {
        if (v < 0 || v >= n) throw std::out_of_range("induced: vertex out of range");
        if (map[v] != -1) throw std::invalid_argument("induced: duplicate vertex in subset");
        map[v] = m++;
    }
    Graph out(m);
    for (int v : subset)
        g.for_neighbors(v, [&](int w) {
            if (map[w] != -1 && v < w) out.add_edge(map[v], map[w]);
        });
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace regtri
