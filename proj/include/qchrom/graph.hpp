#ifndef QCHROM_GRAPH_HPP
#define QCHROM_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qchrom {

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() : n_(0) {}
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const { return adj_[idx(u, v)] != 0; }
    int degree(int v) const { return degree_[v]; }
    const std::vector<int>& neighbours(int v) const { return nbr_[v]; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * n_ + v;
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;  // sorted, u < v
    std::vector<std::uint8_t> adj_;
    std::vector<int> degree_;
    std::vector<std::vector<int>> nbr_;
};

/// Vertex -> colour assignment; colours are 1..d.
struct Colouring {
    int d = 0;
    std::vector<int> colour;  // size n, values in 1..d

    bool total(const Graph& g) const;
    bool proper(const Graph& g) const;
    int colours_used() const;
};

enum class GraphFormat { Dimacs, EdgeList };

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line(line) {}
    int line;
};

Graph parse_graph(std::string_view text, GraphFormat format);
Graph load_graph(const std::string& path, GraphFormat format);
std::string to_dimacs(const Graph& g, const std::string& comment = "");

Graph complement(const Graph& g);
bool is_connected(const Graph& g);

/// Proper 2-colouring by BFS layering, or nullopt if an odd cycle exists.
std::optional<Colouring> is_bipartite(const Graph& g);

struct ChromaticResult {
    int value = 0;
    Colouring witness;
};

/// Exact chromatic number, branch-and-bound with DSATUR ordering and a
/// greedy clique lower bound. Deterministic.
ChromaticResult chromatic_number(const Graph& g);

Graph make_empty(int n);
Graph make_complete(int n);
Graph make_cycle(int n);       // n >= 3
Graph make_path(int n);
Graph make_petersen();
Graph make_hadamard(int N);    // 2^N vertices, edge iff dot product zero
Graph make_erdos_renyi(int n, double p, std::uint64_t seed);

/// Brute-force maximum independent set size; n <= 30 or so.
int independence_number(const Graph& g);

}  // namespace qchrom

#endif
