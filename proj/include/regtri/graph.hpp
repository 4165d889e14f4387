#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace regtri {

using VertexPair = std::pair<int, int>;

// Deduplicated list of unordered vertex pairs, each stored with u < v.
struct EdgeSet {
    std::vector<VertexPair> pairs;

    static EdgeSet from_pairs(std::vector<VertexPair> raw);
    void add(int u, int v);
    bool contains(int u, int v) const;
    std::size_t size() const { return pairs.size(); }
};

// Compact undirected simple graph: one bit row per vertex, 64 neighbors per
// word. Row intersection (AND + popcount) is the workhorse of the triangle
// census, so rows are kept contiguous.
class Graph {
public:
    static constexpr int max_vertices = 4096;

    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int words_per_row() const { return words_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    int degree(int v) const;
    long long edge_count() const;
    std::vector<int> degrees() const;
    bool is_regular(int k) const;

    std::vector<int> neighbors(int v) const;
    std::vector<VertexPair> edges() const;  // (u, v) with u < v, lexicographic

    template <typename F>
    void for_neighbors(int v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bitsw = r[w];
            while (bitsw) {
                int b = __builtin_ctzll(bitsw);
                f(w * 64 + b);
                bitsw &= bitsw - 1;
            }
        }
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Exact triangle statistics. per_edge is kept in the graph's deterministic
// edge order (lexicographic by (u, v)) so reports are reproducible.
struct TriangleCensus {
    long long total = 0;
    std::vector<long long> per_vertex;
    std::vector<std::pair<VertexPair, long long>> per_edge;

    long long edge_triangles(int u, int v) const;  // throws if (u,v) is not an edge
};

// Edge-iterator census: for each edge, popcount the two endpoint rows.
TriangleCensus count_triangles(const Graph& g);

// Independent naive triple loop, n <= 64 only. Oracle for the census path.
long long count_triangles_naive(const Graph& g);

struct BipartiteResult {
    bool bipartite = false;
    std::vector<std::int8_t> color;  // 0/1 when bipartite, partial otherwise
    std::vector<int> odd_cycle;      // witness vertices in cycle order when not bipartite
};

BipartiteResult is_bipartite(const Graph& g);

// Length of a shortest odd cycle, nullopt iff bipartite.
std::optional<int> shortest_odd_cycle(const Graph& g);

// A shortest odd cycle itself (vertices in cycle order), nullopt iff
// bipartite.
std::optional<std::vector<int>> shortest_odd_cycle_witness(const Graph& g);

// Searches the subgraph induced on `restrict` for a 5-cycle. Exhaustive:
// ordered paths v0 v1 v2 v3 v4 with v0 minimal in the cycle and v1 < v4.
std::optional<std::array<int, 5>> find_c5(const Graph& g, const std::vector<int>& restrict_set);

Graph delete_edges(const Graph& g, const EdgeSet& edges);  // deleting a non-edge throws
Graph induced(const Graph& g, const std::vector<int>& subset);
Graph complement(const Graph& g);

std::string to_dot(const Graph& g);

}  // namespace regtri
