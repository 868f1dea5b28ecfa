#include "planar.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace webfoam::detail {

int Graph::slot_of(int dart) const {
    const auto& r = rot[vertex_of(dart)];
    for (int i = 0; i < 3; ++i)
        if (r[i] == dart) return i;
    throw std::logic_error("dart missing from its vertex rotation");
}

int Graph::phi(int d) const {
    const int o = d ^ 1;
    return rot[vertex_of(o)][(slot_of(o) + 1) % 3];
}

bool Graph::is_merge(int v) const {
    for (int d : rot[v])
        if (e[d >> 1].label == 2) return (d & 1) == 0;
    throw std::logic_error("vertex without double edge");
}

Graph graph_of(const Web& w) {
    Graph g;
    std::map<int, int> index;
    for (int i = 0; i < static_cast<int>(w.edges.size()); ++i) index[w.edges[i].id] = i;
    for (int c : w.circles) (c == 2 ? g.circles2 : g.circles1)++;

    const int V = static_cast<int>(w.vertices.size());
    std::vector<bool> merge(V, false);
    for (const auto& e : w.edges)
        if (e.label == 1) merge[e.to] = true;

    for (const auto& e : w.edges) {
        Graph::E x{e.label, e.from, e.to};
        if (e.label == 2 && !merge[e.from]) std::swap(x.from, x.to);
        g.e.push_back(x);
    }
    g.rot.resize(V);
    for (int v = 0; v < V; ++v)
        for (int i = 0; i < 3; ++i) {
            const int k = index.at(w.vertices[v].halfedges[i]);
            g.rot[v][i] = 2 * k + (g.e[k].to == v ? 1 : 0);
        }
    return g;
}

std::vector<std::vector<int>> faces(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(2 * g.e.size(), false);
    for (int d = 0; d < static_cast<int>(seen.size()); ++d) {
        if (seen[d]) continue;
        std::vector<int> f;
        for (int x = d; !seen[x]; x = g.phi(x)) {
            seen[x] = true;
            f.push_back(x);
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int V = g.vertices();
    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.e) parent[find(e.from)] = find(e.to);
    std::vector<std::vector<int>> out;
    std::vector<int> slot(V, -1);
    for (int v = 0; v < V; ++v) {
        const int r = find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(v);
    }
    return out;
}

std::vector<int> nonplanar_components(const Graph& g) {
    const auto comps = components(g);
    std::vector<int> where(g.vertices());
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (int v : comps[c]) where[v] = c;
    std::vector<long> chi(comps.size(), 0);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) chi[c] = static_cast<long>(comps[c].size());
    for (const auto& e : g.e) --chi[where[e.from]];
    for (const auto& f : faces(g)) ++chi[where[g.vertex_of(f.front())]];
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        if (chi[c] != 2) out.push_back(comps[c].front());
    return out;
}

}  // namespace webfoam::detail
