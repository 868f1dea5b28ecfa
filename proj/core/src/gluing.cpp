#include "gluing.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace webfoam::detail {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

VertexFreeFoam glue(const BoundaryWeb& g, const HalfFoam& u, const HalfFoam& v, const std::vector<int>& vmap,
                    const std::vector<int>& emap) {
    const int E = static_cast<int>(g.edge_k.size());
    const int nu = static_cast<int>(u.pieces.size());
    const int n = nu + static_cast<int>(v.pieces.size());

    std::vector<int> owner_u(E, -1), owner_v(E, -1);
    auto claim = [&](std::vector<int>& owner, int e, int piece, int k) {
        if (e < 0 || e >= E) throw std::logic_error("glue: edge out of range");
        if (owner[e] != -1) throw std::logic_error("glue: boundary edge used twice");
        if (g.edge_k[e] != k) throw std::logic_error("glue: facet thickness does not match its edge");
        owner[e] = piece;
    };
    for (int i = 0; i < nu; ++i)
        for (int e : u.pieces[i].edges) claim(owner_u, e, i, u.pieces[i].k);
    for (int i = 0; i < static_cast<int>(v.pieces.size()); ++i)
        for (int e : v.pieces[i].edges) claim(owner_v, emap.at(e), nu + i, v.pieces[i].k);

    UnionFind uf(n);
    for (int e = 0; e < E; ++e) {
        if (owner_u[e] < 0 || owner_v[e] < 0) throw std::logic_error("glue: boundary edge not covered");
        uf.unite(owner_u[e], owner_v[e]);
    }

    // closed facets
    std::vector<int> facet_of(n, -1);
    VertexFreeFoam out;
    std::vector<int> rep;
    auto piece = [&](int i) -> const HalfFoam::Piece& { return i < nu ? u.pieces[i] : v.pieces[i - nu]; };
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (facet_of[r] == -1) {
            facet_of[r] = out.add_facet(piece(i).k);
            rep.push_back(r);
        }
        facet_of[i] = facet_of[r];
        out.decorate(facet_of[i], piece(i).dec);
    }
    auto comp = [&](int e) { return facet_of[owner_u[e]]; };

    // singular circles: alternate arcs of u and of v
    std::vector<int> pu(g.vertices, -1), pv(g.vertices, -1);
    auto link = [&](std::vector<int>& p, int a, int b) {
        if (p.at(a) != -1 || p.at(b) != -1) throw std::logic_error("glue: vertex on two arcs");
        p[a] = b;
        p[b] = a;
    };
    for (auto [a, b] : u.arcs) link(pu, a, b);
    for (auto [a, b] : v.arcs) link(pv, vmap.at(a), vmap.at(b));

    const int F = static_cast<int>(rep.size());
    std::vector<int> chi(F, 0), holes(F, 0);
    for (int i = 0; i < n; ++i) chi[facet_of[i]] += 1;
    for (int e = 0; e < E; ++e) chi[comp(e)] -= 1;

    std::vector<bool> seen(g.vertices, false);
    for (int s = 0; s < g.vertices; ++s) {
        if (seen[s]) continue;
        if (pu[s] < 0 || pv[s] < 0) throw std::logic_error("glue: vertex without a singular arc");
        std::array<int, 3> roles{comp(g.roles[s][0]), comp(g.roles[s][1]), comp(g.roles[s][2])};
        int x = s;
        bool use_u = true;
        do {
            seen[x] = true;
            std::array<int, 3> here{comp(g.roles[x][0]), comp(g.roles[x][1]), comp(g.roles[x][2])};
            if (here != roles) throw std::logic_error("glue: facet roles disagree along a singular circle");
            for (int f : here) chi[f] += 1;  // the vertex
            int y = use_u ? pu[x] : pv[x];
            for (int f : here) chi[f] -= 1;  // the arc from x to y
            use_u = !use_u;
            x = y;
        } while (x != s || !use_u);
        std::set<int> distinct(roles.begin(), roles.end());
        if (distinct.size() != 3) throw std::logic_error("glue: a facet meets itself along a circle");
        for (int f : roles) holes[f] += 1;
        out.add_circle112(roles[0], roles[1], roles[2]);
    }
    for (int f = 0; f < F; ++f) {
        int twice = 2 - holes[f] - chi[f];
        if (twice < 0 || twice % 2) throw std::logic_error("glue: inconsistent Euler characteristic");
        out.add_handles(f, twice / 2);
    }
    return out;
}

mpq_class pairing(const BoundaryWeb& g, const HalfSum& u, const HalfSum& v, const std::vector<int>& vmap,
                  const std::vector<int>& emap, int N) {
    mpq_class total = 0;
    for (const auto& [a, hu] : u)
        for (const auto& [b, hv] : v) total += a * b * evaluate(glue(g, hu, hv, vmap, emap), N);
    return total;
}

}  // namespace webfoam::detail
