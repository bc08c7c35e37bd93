#include "gamma2/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "gamma2/errors.hpp"

namespace g2 {

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
             std::string name)
    : n_(n), name_(std::move(name)) {
    if (n <= 0) throw InputError("graph must have at least one vertex");
    adj_.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    m_ = static_cast<std::int64_t>(edges.size());
    for (int v = 0; v < n; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw InputError("duplicate edge at vertex " + std::to_string(v));
        if (nb.empty())
            throw InputError("isolated vertex " + std::to_string(v) +
                             " (graphs here must have no isolated vertices)");
        max_degree_ = std::max<int>(max_degree_, static_cast<int>(nb.size()));
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::components() const {
    std::vector<char> seen(n_, 0);
    int comps = 0;
    std::queue<Vertex> q;
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : adj_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
    }
    return comps;
}

void Graph::set_interior(std::vector<Vertex> interior) {
    std::sort(interior.begin(), interior.end());
    interior_ = std::move(interior);
}

RealFunction laplacian_apply(const Graph& g, const RealFunction& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw InputError("laplacian_apply: function length " + std::to_string(f.size()) +
                         " does not match vertex count " +
                         std::to_string(g.vertex_count()));
    RealFunction out(f.size());
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        double s = 0.0;
        for (Vertex y : g.neighbors(x)) s += f[y] - f[x];
        out[x] = s;
    }
    return out;
}

double gamma(const Graph& g, const RealFunction& f, const RealFunction& h, Vertex x) {
    double s = 0.0;
    for (Vertex y : g.neighbors(x)) s += (f[x] - f[y]) * (h[x] - h[y]);
    return 0.5 * s;
}

double gamma(const Graph& g, const RealFunction& f, Vertex x) {
    return gamma(g, f, f, x);
}

double gamma2(const Graph& g, const RealFunction& f, Vertex x) {
    // Needs Gamma(f) and Delta f on the closed neighborhood of x only; both
    // read f at distance <= 2 from x.
    auto local_laplacian = [&](Vertex w) {
        double s = 0.0;
        for (Vertex y : g.neighbors(w)) s += f[y] - f[w];
        return s;
    };
    double gamma_x = gamma(g, f, x);
    double lap_gamma = 0.0;
    for (Vertex v : g.neighbors(x)) lap_gamma += gamma(g, f, v) - gamma_x;

    double lap_x = local_laplacian(x);
    double gamma_f_lapf = 0.0;
    for (Vertex v : g.neighbors(x))
        gamma_f_lapf += (f[x] - f[v]) * (lap_x - local_laplacian(v));
    gamma_f_lapf *= 0.5;

    return 0.5 * lap_gamma - gamma_f_lapf;
}

VertexBall2 ball2(const Graph& g, Vertex x) {
    if (x < 0 || x >= g.vertex_count())
        throw InputError("ball2: vertex " + std::to_string(x) + " out of range");

    VertexBall2 ball;
    ball.center = x;
    ball.n1 = g.neighbors(x);

    std::vector<int> pos1(g.vertex_count(), -1);
    for (std::size_t i = 0; i < ball.n1.size(); ++i) pos1[ball.n1[i]] = static_cast<int>(i);

    // dist-2 set by scanning neighbors of N1
    std::vector<int> pos2(g.vertex_count(), -1);
    for (Vertex v : ball.n1) {
        for (Vertex u : g.neighbors(v)) {
            if (u == x || pos1[u] >= 0) continue;
            if (pos2[u] < 0) {
                pos2[u] = 0; // mark; indices assigned after sort
                ball.n2.push_back(u);
            }
        }
    }
    std::sort(ball.n2.begin(), ball.n2.end());
    for (std::size_t j = 0; j < ball.n2.size(); ++j) pos2[ball.n2[j]] = static_cast<int>(j);

    ball.deg1.reserve(ball.n1.size());
    for (Vertex v : ball.n1) ball.deg1.push_back(g.degree(v));

    ball.r.assign(ball.n2.size(), 0);
    for (std::size_t i = 0; i < ball.n1.size(); ++i) {
        Vertex v = ball.n1[i];
        for (Vertex u : g.neighbors(v)) {
            if (u == x) continue;
            int j1 = pos1[u];
            if (j1 >= 0) {
                if (static_cast<int>(i) < j1)
                    ball.edges_n1n1.emplace_back(static_cast<int>(i), j1);
                continue;
            }
            int j2 = pos2[u];
            if (j2 >= 0) {
                ball.edges_n1n2.emplace_back(static_cast<int>(i), j2);
                ++ball.r[j2];
            }
        }
    }
    std::sort(ball.edges_n1n1.begin(), ball.edges_n1n1.end());
    std::sort(ball.edges_n1n2.begin(), ball.edges_n1n2.end());
    return ball;
}

TriangleStats triangle_stats(const Graph& g) {
    TriangleStats stats;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (v <= u) continue;
            const auto& a = g.neighbors(u);
            const auto& b = g.neighbors(v);
            int t = 0;
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) {
                    ++t;
                    ++i;
                    ++j;
                } else if (a[i] < b[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
            stats.per_edge.push_back({{u, v}, t});
            stats.max_per_edge = std::max(stats.max_per_edge, t);
        }
    }
    return stats;
}

// ---------------------------------------------------------------------------
// edge-list text format
// ---------------------------------------------------------------------------

namespace {

bool parse_int(const std::string& tok, long& out) {
    if (tok.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (tok[0] == '-') {
        neg = true;
        i = 1;
        if (tok.size() == 1) return false;
    }
    long v = 0;
    for (; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') return false;
        v = v * 10 + (tok[i] - '0');
        if (v > 1000000000L) return false;
    }
    out = neg ? -v : v;
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long n = 0, m = 0;
    int lineno = 0;

    // header
    for (;;) {
        if (!std::getline(in, line))
            throw InputError("edge list: missing header line \"n m\"");
        ++lineno;
        if (split_ws(line).empty()) continue;
        auto toks = split_ws(line);
        if (toks.size() != 2 || !parse_int(toks[0], n) || !parse_int(toks[1], m))
            throw InputError("edge list line " + std::to_string(lineno) +
                             ": malformed header, expected \"n m\"");
        break;
    }
    if (n <= 0) throw InputError("edge list: vertex count must be positive");
    if (m < 0) throw InputError("edge list: negative edge count");

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    long read = 0;
    while (read < m) {
        if (!std::getline(in, line))
            throw InputError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(read));
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        long u, v;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw InputError("edge list line " + std::to_string(lineno) +
                             ": malformed edge, expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge list line " + std::to_string(lineno) + ": index out of range");
        if (u == v)
            throw InputError("edge list line " + std::to_string(lineno) + ": self-loop");
        if (u > v)
            throw InputError("edge list line " + std::to_string(lineno) +
                             ": malformed edge, endpoints must satisfy u < v");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        ++read;
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!split_ws(line).empty())
            throw InputError("edge list line " + std::to_string(lineno) +
                             ": trailing content after " + std::to_string(m) + " edges");
    }

    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InputError("edge list: duplicate edge");
    return Graph(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
    auto es = g.edges();
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(es.size()) + "\n";
    for (auto [u, v] : es)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace g2
