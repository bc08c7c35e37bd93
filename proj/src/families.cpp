#include "gamma2/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "gamma2/errors.hpp"

namespace g2 {

namespace {

std::vector<std::pair<Vertex, Vertex>> dedup(std::vector<std::pair<Vertex, Vertex>> edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

} // namespace

Graph hypercube(int n) {
    if (n < 1) throw InputError("hypercube: n must be >= 1");
    if (n > 24) throw InputError("hypercube: n too large");
    int size = 1 << n;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int x = 0; x < size; ++x)
        for (int b = 0; b < n; ++b) {
            int y = x ^ (1 << b);
            if (x < y) edges.emplace_back(x, y);
        }
    return Graph(size, edges, "hypercube(" + std::to_string(n) + ")");
}

Graph complete(int n) {
    if (n < 2) throw InputError("complete: n must be >= 2");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges, "complete(" + std::to_string(n) + ")");
}

Graph cycle(int n) {
    if (n < 3) throw InputError("cycle: n must be >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    return Graph(n, dedup(edges), "cycle(" + std::to_string(n) + ")");
}

Graph path(int n) {
    if (n < 2) throw InputError("path: n must be >= 2");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    Graph g(n, edges, "path(" + std::to_string(n) + ")");
    std::vector<Vertex> interior;
    for (int v = 2; v <= n - 3; ++v) interior.push_back(v);
    g.set_interior(interior);
    return g;
}

Graph slice(int n, int k) {
    if (n < 2 || k < 1 || k >= n) throw InputError("slice: need n >= 2 and 1 <= k < n");
    if (n > 24) throw InputError("slice: n too large");
    std::vector<int> masks;
    for (int m = 0; m < (1 << n); ++m)
        if (__builtin_popcount(static_cast<unsigned>(m)) == k) masks.push_back(m);
    std::map<int, int> index;
    for (std::size_t i = 0; i < masks.size(); ++i) index[masks[i]] = static_cast<int>(i);

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        int m = masks[i];
        for (int a = 0; a < n; ++a) {
            if (!(m & (1 << a))) continue;
            for (int b = 0; b < n; ++b) {
                if (m & (1 << b)) continue;
                int y = (m ^ (1 << a)) | (1 << b);
                int j = index.at(y);
                if (static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
            }
        }
    }
    return Graph(static_cast<int>(masks.size()), dedup(edges),
                 "slice(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

namespace {

// Balanced +-1 sequences of length 2n encoded as bitmasks (bit i set = +1 at
// position i). Adjacency: transpose one adjacent opposite pair.
std::vector<int> balanced_masks(int n, bool dyck_only) {
    std::vector<int> masks;
    int len = 2 * n;
    for (int m = 0; m < (1 << len); ++m) {
        if (__builtin_popcount(static_cast<unsigned>(m)) != n) continue;
        if (dyck_only) {
            int prefix = 0;
            bool ok = true;
            for (int i = 0; i < len; ++i) {
                prefix += (m & (1 << i)) ? 1 : -1;
                if (prefix < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
        }
        masks.push_back(m);
    }
    return masks;
}

Graph adjacent_transposition_graph(int n, bool dyck_only, const std::string& name) {
    if (n < 1) throw InputError(name + ": n must be >= 1");
    if (n > 12) throw InputError(name + ": n too large");
    auto masks = balanced_masks(n, dyck_only);
    std::map<int, int> index;
    for (std::size_t i = 0; i < masks.size(); ++i) index[masks[i]] = static_cast<int>(i);

    std::vector<std::pair<Vertex, Vertex>> edges;
    int len = 2 * n;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        int m = masks[i];
        for (int p = 0; p + 1 < len; ++p) {
            bool a = m & (1 << p), b = m & (1 << (p + 1));
            if (a == b) continue;
            int y = m ^ (1 << p) ^ (1 << (p + 1));
            auto it = index.find(y);
            if (it == index.end()) continue; // neighbor left the Dyck set
            if (static_cast<int>(i) < it->second)
                edges.emplace_back(static_cast<int>(i), it->second);
        }
    }
    return Graph(static_cast<int>(masks.size()), dedup(edges), name);
}

} // namespace

Graph middle_slice_adjacent(int n) {
    return adjacent_transposition_graph(n, false,
                                        "middle_slice_adjacent(" + std::to_string(n) + ")");
}

Graph dyck(int n) {
    return adjacent_transposition_graph(n, true, "dyck(" + std::to_string(n) + ")");
}

Graph tree(int d, int depth) {
    if (d < 2) throw InputError("tree: d must be >= 2");
    if (depth < 1) throw InputError("tree: depth must be >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<int> level{0};
    std::vector<int> depth_of{0};
    int next = 1;
    for (int lev = 0; lev < depth; ++lev) {
        std::vector<int> children;
        for (int v : level) {
            int fanout = (lev == 0) ? d : d - 1;
            for (int c = 0; c < fanout; ++c) {
                edges.emplace_back(v, next);
                depth_of.push_back(lev + 1);
                children.push_back(next);
                ++next;
            }
        }
        level = std::move(children);
    }
    Graph g(next, edges, "tree(" + std::to_string(d) + "," + std::to_string(depth) + ")");
    std::vector<Vertex> interior;
    for (int v = 0; v < next; ++v)
        if (depth_of[v] <= depth - 2) interior.push_back(v);
    g.set_interior(interior);
    return g;
}

// ---------------------------------------------------------------------------
// Cayley graphs
// ---------------------------------------------------------------------------

void AbelianCayleySpec::symmetrize() {
    if (orders.empty()) throw InputError("abelian_cayley: empty order list");
    for (int m : orders)
        if (m < 2) throw InputError("abelian_cayley: cyclic orders must be >= 2");
    std::set<std::vector<int>> set;
    for (auto g : generators) {
        if (g.size() != orders.size())
            throw InputError("abelian_cayley: generator arity does not match orders");
        bool identity = true;
        for (std::size_t i = 0; i < g.size(); ++i) {
            g[i] = ((g[i] % orders[i]) + orders[i]) % orders[i];
            if (g[i] != 0) identity = false;
        }
        if (identity) throw InputError("abelian_cayley: identity is not a valid generator");
        std::vector<int> inv(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) inv[i] = (orders[i] - g[i]) % orders[i];
        set.insert(g);
        set.insert(inv);
    }
    if (set.empty()) throw InputError("abelian_cayley: empty generator set");
    generators.assign(set.begin(), set.end());
}

Graph abelian_cayley(const AbelianCayleySpec& input) {
    AbelianCayleySpec spec = input;
    spec.symmetrize();

    long long size = 1;
    for (int m : spec.orders) {
        size *= m;
        if (size > 5'000'000) throw InputError("abelian_cayley: group too large");
    }
    const int n = static_cast<int>(size);
    const std::size_t k = spec.orders.size();

    // mixed-radix index: first coordinate is the least significant digit
    auto encode = [&](const std::vector<int>& t) {
        long long idx = 0, base = 1;
        for (std::size_t i = 0; i < k; ++i) {
            idx += base * t[i];
            base *= spec.orders[i];
        }
        return static_cast<int>(idx);
    };
    auto decode = [&](int idx) {
        std::vector<int> t(k);
        for (std::size_t i = 0; i < k; ++i) {
            t[i] = idx % spec.orders[i];
            idx /= spec.orders[i];
        }
        return t;
    };

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int idx = 0; idx < n; ++idx) {
        auto t = decode(idx);
        for (const auto& g : spec.generators) {
            std::vector<int> s(k);
            for (std::size_t i = 0; i < k; ++i) s[i] = (t[i] + g[i]) % spec.orders[i];
            int j = encode(s);
            if (idx < j) edges.emplace_back(idx, j);
        }
    }
    edges = dedup(edges);

    // generation check: BFS from the identity must reach the whole group
    {
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        seen[0] = 1;
        q.push(0);
        int reached = 1;
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    q.push(v);
                }
        }
        if (reached != n)
            throw InputError("abelian_cayley: generators do not generate the group (reached " +
                             std::to_string(reached) + " of " + std::to_string(n) + " elements)");
    }

    std::string name = "abelian_cayley(";
    for (std::size_t i = 0; i < k; ++i)
        name += (i ? "x" : "") + std::to_string(spec.orders[i]);
    name += ")";
    return Graph(n, edges, name);
}

void PermCayleySpec::symmetrize() {
    if (symbols < 2) throw InputError("perm_cayley: need at least 2 symbols");
    std::set<std::vector<int>> set;
    std::vector<int> id(symbols);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != symbols)
            throw InputError("perm_cayley: generator length does not match symbol count");
        std::vector<char> seen(symbols, 0);
        for (int v : g) {
            if (v < 0 || v >= symbols || seen[v])
                throw InputError("perm_cayley: generator is not a permutation");
            seen[v] = 1;
        }
        if (g == id) throw InputError("perm_cayley: identity is not a valid generator");
        std::vector<int> inv(symbols);
        for (int i = 0; i < symbols; ++i) inv[g[i]] = i;
        set.insert(g);
        set.insert(inv);
    }
    if (set.empty()) throw InputError("perm_cayley: empty generator set");
    generators.assign(set.begin(), set.end());
}

namespace {

LabeledCayley perm_cayley_impl(PermCayleySpec spec, const std::string& name) {
    spec.symmetrize();
    const int n = spec.symbols;

    long long order = 1;
    for (int i = 2; i <= n; ++i) {
        order *= i;
        if (order > 5'000'000) throw InputError("perm_cayley: group too large");
    }

    // left action: (sigma . phi)(i) = sigma(phi(i))
    auto mul = [&](const std::vector<int>& sigma, const std::vector<int>& phi) {
        std::vector<int> out(n);
        for (int i = 0; i < n; ++i) out[i] = sigma[phi[i]];
        return out;
    };

    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    index[id] = 0;
    elems.push_back(id);
    std::queue<int> q;
    q.push(0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        auto phi = elems[u];
        for (const auto& g : spec.generators) {
            auto psi = mul(g, phi);
            auto it = index.find(psi);
            int v;
            if (it == index.end()) {
                v = static_cast<int>(elems.size());
                index[psi] = v;
                elems.push_back(psi);
                q.push(v);
            } else {
                v = it->second;
            }
            if (u < v) edges.emplace_back(u, v);
        }
    }
    if (static_cast<long long>(elems.size()) != order)
        throw InputError("perm_cayley: generators do not generate S_" + std::to_string(n) +
                         " (reached " + std::to_string(elems.size()) + " of " +
                         std::to_string(order) + " elements)");
    return {Graph(static_cast<int>(elems.size()), dedup(edges), name), std::move(elems)};
}

} // namespace

Graph perm_cayley(const PermCayleySpec& spec) {
    return perm_cayley_impl(spec, "perm_cayley(S_" + std::to_string(spec.symbols) + ")").graph;
}

LabeledCayley perm_cayley_labeled(const PermCayleySpec& spec) {
    return perm_cayley_impl(spec, "perm_cayley(S_" + std::to_string(spec.symbols) + ")");
}

namespace {

PermCayleySpec sn_special_spec(int n) {
    if (n < 2) throw InputError("sn_special: n must be >= 2");
    PermCayleySpec spec;
    spec.symbols = n;
    std::vector<int> swap01(n), cyc(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    spec.generators = {swap01, cyc};
    return spec;
}

} // namespace

Graph sn_special(int n) {
    return perm_cayley_impl(sn_special_spec(n), "sn_special(" + std::to_string(n) + ")").graph;
}

LabeledCayley sn_special_labeled(int n) {
    return perm_cayley_impl(sn_special_spec(n), "sn_special(" + std::to_string(n) + ")");
}

Graph sn_transpositions(int n) {
    if (n < 2) throw InputError("sn_transpositions: n must be >= 2");
    PermCayleySpec spec;
    spec.symbols = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> t(n);
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[i], t[j]);
            spec.generators.push_back(t);
        }
    return perm_cayley_impl(spec, "sn_transpositions(" + std::to_string(n) + ")").graph;
}

} // namespace g2
