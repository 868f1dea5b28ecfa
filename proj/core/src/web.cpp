#include "webfoam/web.hpp"

#include "planar.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace webfoam {

int Web::add_edge(int label, int from, int to) {
    const int id = static_cast<int>(edges.size());
    edges.push_back({id, label, from, to, label == 1});
    return id;
}

namespace {

std::string describe(const std::vector<WebViolation>& v) {
    std::ostringstream os;
    os << "invalid web:";
    for (const auto& x : v) {
        os << ' ' << x.what;
        if (x.vertex >= 0) os << " (vertex " << x.vertex << ')';
        if (x.edge >= 0) os << " (edge " << x.edge << ')';
        os << ';';
    }
    return os.str();
}

}  // namespace

InvalidWeb::InvalidWeb(const std::vector<WebViolation>& v) : std::domain_error(describe(v)), v_(v) {}

std::vector<WebViolation> validate(const Web& w) {
    std::vector<WebViolation> out;
    const int V = static_cast<int>(w.vertices.size());

    for (int c : w.circles)
        if (c != 1 && c != 2) out.push_back({"circle label must be 1 or 2"});

    std::map<int, int> index;
    for (int i = 0; i < static_cast<int>(w.edges.size()); ++i) {
        const auto& e = w.edges[i];
        if (!index.emplace(e.id, i).second) out.push_back({"duplicate edge id", -1, e.id});
        if (e.label != 1 && e.label != 2) out.push_back({"edge label must be 1 or 2", -1, e.id});
        if (e.label == 1 && !e.oriented) out.push_back({"simple edge without orientation", -1, e.id});
        if (e.from < 0 || e.from >= V || e.to < 0 || e.to >= V) {
            out.push_back({"edge endpoint out of range", -1, e.id});
        } else if (e.from == e.to) {
            out.push_back({"edge is a loop", e.from, e.id});
        }
    }
    if (!out.empty()) return out;

    // Incidence: every vertex lists exactly the edges ending at it.
    std::vector<std::vector<int>> expect(V);
    for (const auto& e : w.edges) {
        expect[e.from].push_back(e.id);
        expect[e.to].push_back(e.id);
    }
    for (int v = 0; v < V; ++v) {
        std::vector<int> listed(w.vertices[v].halfedges.begin(), w.vertices[v].halfedges.end());
        auto want = expect[v];
        std::sort(listed.begin(), listed.end());
        std::sort(want.begin(), want.end());
        if (listed != want) out.push_back({"vertex half-edges do not match edge endpoints", v});
    }
    if (!out.empty()) return out;

    // Vertex types and flow of double edges.
    std::vector<int> kind(V, 0);  // +1 merge, -1 split
    for (int v = 0; v < V; ++v) {
        int doubles = 0, in = 0, outs = 0;
        for (int id : w.vertices[v].halfedges) {
            const auto& e = w.edges[index[id]];
            if (e.label == 2) {
                ++doubles;
            } else if (e.to == v) {
                ++in;
            } else {
                ++outs;
            }
        }
        if (doubles != 1 || in + outs != 2) {
            out.push_back({"vertex needs one double and two simple edges", v});
        } else if (in == 1) {
            out.push_back({"simple edges at a vertex must both point in or both out", v});
        } else {
            kind[v] = in == 2 ? 1 : -1;
        }
    }
    for (const auto& e : w.edges)
        if (e.label == 2 && kind[e.from] != 0 && kind[e.to] != 0 && kind[e.from] == kind[e.to])
            out.push_back({"double edge must join a merge vertex to a split vertex", -1, e.id});
    if (!out.empty()) return out;

    for (int bad : detail::nonplanar_components(detail::graph_of(w)))
        out.push_back({"rotation system is not planar on this component", bad});
    return out;
}

Web web_from_json(const std::string& text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("web json: ") + e.what());
    }
    try {
        Web w;
        if (j.contains("circles"))
            for (const auto& c : j.at("circles")) w.circles.push_back(c.at("label").get<int>());
        if (j.contains("vertices"))
            for (const auto& v : j.at("vertices")) {
                const auto& h = v.at("halfedges");
                if (h.size() != 3) throw std::invalid_argument("web json: a vertex needs three half-edges");
                Web::Vertex x;
                for (int i = 0; i < 3; ++i) x.halfedges[i] = h[i].get<int>();
                w.vertices.push_back(x);
            }
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) {
                Web::Edge x;
                x.id = e.at("id").get<int>();
                x.label = e.at("label").get<int>();
                x.from = e.at("from").get<int>();
                x.to = e.at("to").get<int>();
                x.oriented = e.value("oriented", x.label == 1);
                w.edges.push_back(x);
            }
        return w;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("web json: ") + e.what());
    }
}

std::string web_to_json(const Web& w) {
    using nlohmann::json;
    json j;
    j["circles"] = json::array();
    for (int c : w.circles) j["circles"].push_back({{"label", c}});
    j["vertices"] = json::array();
    for (const auto& v : w.vertices) j["vertices"].push_back({{"halfedges", v.halfedges}});
    j["edges"] = json::array();
    for (const auto& e : w.edges)
        j["edges"].push_back(
            {{"id", e.id}, {"label", e.label}, {"from", e.from}, {"to", e.to}, {"oriented", e.oriented}});
    return j.dump(2);
}

namespace webs {

Web simple_circle() {
    Web w;
    w.circles = {1};
    return w;
}

Web double_circle() {
    Web w;
    w.circles = {2};
    return w;
}

Web theta() {
    Web w;
    const int m = w.add_vertex(), s = w.add_vertex();
    const int a = w.add_edge(1, s, m), b = w.add_edge(1, s, m), d = w.add_edge(2, m, s);
    w.vertices[m].halfedges = {d, a, b};
    w.vertices[s].halfedges = {d, b, a};
    return w;
}

Web double_digons() {
    // s1 => (two simples) => m1 == s2 => (two simples) => m2 == s1
    Web w;
    const int s1 = w.add_vertex(), m1 = w.add_vertex(), s2 = w.add_vertex(), m2 = w.add_vertex();
    const int a = w.add_edge(1, s1, m1), b = w.add_edge(1, s1, m1);
    const int c = w.add_edge(1, s2, m2), d = w.add_edge(1, s2, m2);
    const int x = w.add_edge(2, m1, s2), y = w.add_edge(2, m2, s1);
    w.vertices[s1].halfedges = {y, a, b};
    w.vertices[m1].halfedges = {x, b, a};
    w.vertices[s2].halfedges = {x, c, d};
    w.vertices[m2].halfedges = {y, d, c};
    return w;
}

Web simple_double_digons() {
    // strand: m1 => s1 -> m2 => s2 -> m1, plus returning simples s1 -> m1 and s2 -> m2
    Web w;
    const int m1 = w.add_vertex(), s1 = w.add_vertex(), m2 = w.add_vertex(), s2 = w.add_vertex();
    const int d1 = w.add_edge(2, m1, s1), d2 = w.add_edge(2, m2, s2);
    const int r1 = w.add_edge(1, s1, m1), r2 = w.add_edge(1, s2, m2);
    const int t1 = w.add_edge(1, s1, m2), t2 = w.add_edge(1, s2, m1);
    w.vertices[m1].halfedges = {d1, t2, r1};
    w.vertices[s1].halfedges = {d1, r1, t1};
    w.vertices[m2].halfedges = {d2, t1, r2};
    w.vertices[s2].halfedges = {d2, r2, t2};
    return w;
}

Web square_closure() {
    // Square 0 at the bottom, its reflection above; rotations are counterclockwise
    // in that picture. LL and LR run around the outside.
    Web w;
    const int tl0 = w.add_vertex(), tr0 = w.add_vertex(), br0 = w.add_vertex(), bl0 = w.add_vertex();
    const int tl1 = w.add_vertex(), tr1 = w.add_vertex(), br1 = w.add_vertex(), bl1 = w.add_vertex();
    const int top0 = w.add_edge(2, tl0, tr0), right0 = w.add_edge(1, tr0, br0);
    const int bot0 = w.add_edge(2, br0, bl0), left0 = w.add_edge(1, bl0, tl0);
    const int top1 = w.add_edge(2, tr1, tl1), left1 = w.add_edge(1, tl1, bl1);
    const int bot1 = w.add_edge(2, bl1, br1), right1 = w.add_edge(1, br1, tr1);
    const int ul = w.add_edge(1, tl1, tl0), ur = w.add_edge(1, tr0, tr1);
    const int lr = w.add_edge(1, br1, br0), ll = w.add_edge(1, bl0, bl1);
    w.vertices[tl0].halfedges = {top0, ul, left0};
    w.vertices[tr0].halfedges = {ur, top0, right0};
    w.vertices[br0].halfedges = {right0, bot0, lr};
    w.vertices[bl0].halfedges = {bot0, left0, ll};
    w.vertices[tl1].halfedges = {top1, left1, ul};
    w.vertices[tr1].halfedges = {right1, top1, ur};
    w.vertices[br1].halfedges = {lr, bot1, right1};
    w.vertices[bl1].halfedges = {bot1, ll, left1};
    return w;
}

}  // namespace webs

}  // namespace webfoam
