#include "qchrom/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace qchrom {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::set<std::pair<int, int>> uniq;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
        uniq.insert({u, v});
    }
    edges_.assign(uniq.begin(), uniq.end());
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    degree_.assign(n, 0);
    nbr_.assign(n, {});
    for (auto [u, v] : edges_) {
        adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
        ++degree_[u];
        ++degree_[v];
        nbr_[u].push_back(v);
        nbr_[v].push_back(u);
    }
}

bool Colouring::total(const Graph& g) const {
    if (static_cast<int>(colour.size()) != g.n()) return false;
    for (int c : colour)
        if (c < 1 || c > d) return false;
    return true;
}

bool Colouring::proper(const Graph& g) const {
    if (!total(g)) return false;
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v]) return false;
    return true;
}

int Colouring::colours_used() const {
    std::set<int> s(colour.begin(), colour.end());
    return static_cast<int>(s.size());
}

namespace {

bool blank_or_comment(const std::string& s, char comment_char) {
    for (char c : s) {
        if (c == comment_char) return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
    }
    return lines;
}

Graph parse_dimacs(std::string_view text) {
    auto lines = split_lines(text);
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int lineno = static_cast<int>(li) + 1;
        const std::string& line = lines[li];
        if (blank_or_comment(line, 'c')) continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            std::string kind;
            iss >> kind >> n >> m;
            if (!iss || (kind != "edge" && kind != "edges" && kind != "col"))
                throw ParseError(lineno, "malformed problem line");
            if (n < 0 || m < 0)
                throw ParseError(lineno, "negative counts in problem line");
        } else if (tag == "e") {
            if (n < 0) throw ParseError(lineno, "edge before problem line");
            int u = 0, v = 0;
            iss >> u >> v;
            if (!iss) throw ParseError(lineno, "malformed edge line");
            if (u == v) throw ParseError(lineno, "loop edge");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(lineno, "edge endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError(lineno, "unrecognised line type '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError(static_cast<int>(lines.size()) + 1,
                                "missing problem line");
    return Graph(n, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
    auto lines = split_lines(text);
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int lineno = static_cast<int>(li) + 1;
        std::string line = lines[li];
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.resize(pos);
        if (blank_or_comment(line, '#')) continue;
        std::istringstream iss(line);
        if (n < 0) {
            iss >> n >> m;
            if (!iss || n < 0 || m < 0)
                throw ParseError(lineno, "malformed header");
        } else {
            int u = 0, v = 0;
            iss >> u >> v;
            if (!iss) throw ParseError(lineno, "malformed edge line");
            if (u == v) throw ParseError(lineno, "loop edge");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError(lineno, "edge endpoint out of range");
            edges.emplace_back(u, v);
        }
    }
    if (n < 0) throw ParseError(static_cast<int>(lines.size()) + 1,
                                "missing header");
    return Graph(n, std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Dimacs ? parse_dimacs(text)
                                         : parse_edge_list(text);
}

Graph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str(), format);
}

std::string to_dimacs(const Graph& g, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p edge " << g.n() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), std::move(edges));
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<char> seen(g.n(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbours(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == g.n();
}

std::optional<Colouring> is_bipartite(const Graph& g) {
    Colouring col;
    col.d = 2;
    col.colour.assign(g.n(), 0);
    for (int start = 0; start < g.n(); ++start) {
        if (col.colour[start] != 0) continue;
        col.colour[start] = 1;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbours(v)) {
                if (col.colour[w] == 0) {
                    col.colour[w] = 3 - col.colour[v];
                    q.push(w);
                } else if (col.colour[w] == col.colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return col;
}

namespace {

// Greedy clique from each seed vertex; returns the best one found.
std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> best;
    for (int seed : order) {
        std::vector<int> clique{seed};
        for (int v : order) {
            if (v == seed) continue;
            bool ok = true;
            for (int u : clique)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

struct DsaturSearch {
    const Graph& g;
    int n;
    int best_value;
    std::vector<int> best_col;
    std::vector<int> col;                    // 0 = uncoloured
    std::vector<std::vector<int>> sat_cnt;   // per vertex, per colour, #nbrs
    std::vector<int> sat_deg;

    explicit DsaturSearch(const Graph& graph)
        : g(graph),
          n(graph.n()),
          best_value(n + 1),
          col(n, 0),
          sat_cnt(n, std::vector<int>(n + 2, 0)),
          sat_deg(n, 0) {}

    void assign(int v, int c) {
        col[v] = c;
        for (int w : g.neighbours(v)) {
            if (++sat_cnt[w][c] == 1) ++sat_deg[w];
        }
    }

    void unassign(int v, int c) {
        col[v] = 0;
        for (int w : g.neighbours(v)) {
            if (--sat_cnt[w][c] == 0) --sat_deg[w];
        }
    }

    int pick_vertex() const {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (col[v] != 0) continue;
            if (best < 0 || sat_deg[v] > sat_deg[best] ||
                (sat_deg[v] == sat_deg[best] &&
                 (g.degree(v) > g.degree(best) ||
                  (g.degree(v) == g.degree(best) && v < best))))
                best = v;
        }
        return best;
    }

    void search(int coloured, int used, int lower) {
        if (used >= best_value) return;
        if (coloured == n) {
            best_value = used;
            best_col = col;
            return;
        }
        int v = pick_vertex();
        int cap = std::min(used + 1, best_value - 1);
        for (int c = 1; c <= cap; ++c) {
            if (sat_cnt[v][c] > 0) continue;
            assign(v, c);
            search(coloured + 1, std::max(used, c), lower);
            unassign(v, c);
            if (best_value <= lower) return;  // matched the clique bound
        }
    }
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("chromatic_number needs n >= 1");
    if (g.edge_count() == 0) {
        Colouring c;
        c.d = 1;
        c.colour.assign(g.n(), 1);
        return {1, c};
    }
    DsaturSearch s(g);
    auto clique = greedy_clique(g);
    int lower = static_cast<int>(clique.size());
    // Pre-colour the clique: sound symmetry breaking for exact search.
    int used = 0;
    for (int v : clique) s.assign(v, ++used);
    s.search(used, used, lower);
    Colouring witness;
    witness.d = s.best_value;
    witness.colour = s.best_col;
    return {s.best_value, witness};
}

Graph make_empty(int n) { return Graph(n, {}); }

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(e));
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, std::move(e));
}

Graph make_petersen() {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < 5; ++v) {
        e.emplace_back(v, (v + 1) % 5);          // outer cycle
        e.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        e.emplace_back(v, 5 + v);                // spokes
    }
    return Graph(10, std::move(e));
}

Graph make_hadamard(int N) {
    if (N < 1 || N > 20) throw std::invalid_argument("hadamard needs 1 <= N <= 20");
    const int nv = 1 << N;
    // Vertex k is the +/-1 tuple whose i-th entry is +1 iff bit N-1-i of k
    // is set; k ascending is lexicographic order with -1 < +1.
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b) {
            int disagree = std::popcount(static_cast<unsigned>(a ^ b));
            if (2 * disagree == N) e.emplace_back(a, b);
        }
    return Graph(nv, std::move(e));
}

Graph make_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("bad erdos_renyi parameters");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            // Raw 53-bit draw keeps the stream platform-independent.
            double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < p) e.emplace_back(u, v);
        }
    return Graph(n, std::move(e));
}

int independence_number(const Graph& g) {
    const int n = g.n();
    if (n > 30) throw std::invalid_argument("independence_number: n too large");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    int best = 0;
    // Branch on the lowest eligible vertex: include or exclude.
    std::function<void(std::uint32_t, int)> go = [&](std::uint32_t cand, int size) {
        if (size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        int v = std::countr_zero(cand);
        go(cand & ~(adj[v] | (1u << v)), size + 1);
        go(cand & ~(1u << v), size);
    };
    go(n == 32 ? ~0u : ((1u << n) - 1), 0);
    return best;
}

}  // namespace qchrom
