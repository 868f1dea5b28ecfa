#include "moy_engine.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace webfoam {

namespace detail {

namespace {

struct CycleDetected {};

// Port-level rewrite of a region: the removed vertices and edges are replaced
// by a small template whose boundary is the list of in-ports (edges entering the
// region) and out-ports (edges leaving it).
struct Template {
    enum Kind { In, Out, Tail, Head };
    struct Ref {
        Kind k;
        int i;
    };
    int vertices = 0;
    std::vector<std::array<int, 3>> edges;  // label, from, to (template vertices)
    std::vector<std::array<Ref, 3>> rot;
    std::vector<std::pair<int, int>> through;  // in-port continues as out-port
};

class Work {
public:
    explicit Work(const Graph& g)
        : g_(g), vdead_(g.rot.size(), 0), edead_(g.e.size(), 0), alias_(g.e.size(), -1) {}

    void kill_vertex(int v) { vdead_[v] = 1; }
    void kill_edge(int e) { edead_[e] = 1; }

    int resolve(int e) const {
        while (alias_[e] >= 0) e = alias_[e];
        return e;
    }

    void splice(int in, int out) {
        in = resolve(in);
        out = resolve(out);
        if (in == out) {
            (g_.e[in].label == 2 ? g_.circles2 : g_.circles1)++;
            edead_[in] = 1;
            return;
        }
        const int h = g_.e[out].to;
        if (!vdead_[h])
            for (int& d : g_.rot[h])
                if (d == 2 * out + 1) d = 2 * in + 1;
        g_.e[in].to = h;
        edead_[out] = 1;
        alias_[out] = in;
    }

    void apply(const Template& t, const std::vector<int>& ins, const std::vector<int>& outs) {
        for (auto [a, b] : t.through) splice(ins[a], outs[b]);
        const int v0 = static_cast<int>(g_.rot.size());
        const int e0 = static_cast<int>(g_.e.size());
        for (int v = 0; v < t.vertices; ++v) {
            g_.rot.push_back({});
            vdead_.push_back(0);
        }
        for (const auto& te : t.edges) {
            g_.e.push_back({te[0], v0 + te[1], v0 + te[2]});
            edead_.push_back(0);
            alias_.push_back(-1);
        }
        for (int v = 0; v < t.vertices; ++v)
            for (int s = 0; s < 3; ++s) {
                const auto r = t.rot[v][s];
                int dart = 0;
                switch (r.k) {
                    case Template::In: {
                        const int e = resolve(ins[r.i]);
                        g_.e[e].to = v0 + v;
                        dart = 2 * e + 1;
                        break;
                    }
                    case Template::Out: {
                        const int e = resolve(outs[r.i]);
                        g_.e[e].from = v0 + v;
                        dart = 2 * e;
                        break;
                    }
                    case Template::Tail: dart = 2 * (e0 + r.i); break;
                    case Template::Head: dart = 2 * (e0 + r.i) + 1; break;
                }
                g_.rot[v0 + v][s] = dart;
            }
    }

    Graph compact() const {
        Graph out;
        out.circles1 = g_.circles1;
        out.circles2 = g_.circles2;
        std::vector<int> vmap(g_.rot.size(), -1), emap(g_.e.size(), -1);
        for (std::size_t v = 0; v < g_.rot.size(); ++v)
            if (!vdead_[v]) vmap[v] = static_cast<int>(out.rot.size()), out.rot.push_back(g_.rot[v]);
        for (std::size_t e = 0; e < g_.e.size(); ++e)
            if (!edead_[e]) {
                emap[e] = static_cast<int>(out.e.size());
                out.e.push_back({g_.e[e].label, vmap[g_.e[e].from], vmap[g_.e[e].to]});
            }
        for (auto& r : out.rot)
            for (int& d : r) d = 2 * emap[d >> 1] + (d & 1);
        return out;
    }

private:
    Graph g_;
    std::vector<char> vdead_, edead_;
    std::vector<int> alias_;
};

using R = Template::Ref;

Template straight(std::vector<std::pair<int, int>> through) {
    Template t;
    t.through = std::move(through);
    return t;
}

// Three strands entering as ins 0,1,2 (left to right) and leaving as outs 0,1,2.
// Rotations list the double edge first, then the simples in the orientation the
// pattern was matched in.
Template h12() {
    Template t;
    t.vertices = 2;
    t.edges = {{2, 0, 1}};
    t.rot = {{R{Template::Tail, 0}, R{Template::In, 0}, R{Template::In, 1}},
             {R{Template::Head, 0}, R{Template::Out, 1}, R{Template::Out, 0}}};
    t.through = {{2, 2}};
    return t;
}

Template h23() {
    Template t;
    t.vertices = 2;
    t.edges = {{2, 0, 1}};
    t.rot = {{R{Template::Tail, 0}, R{Template::In, 1}, R{Template::In, 2}},
             {R{Template::Head, 0}, R{Template::Out, 2}, R{Template::Out, 1}}};
    t.through = {{0, 0}};
    return t;
}

// H23, then H12, then H23.
Template h23_h12_h23() {
    Template t;
    t.vertices = 6;
    // 0: A=>B, 1: B->C, 2: B->E, 3: C=>D, 4: D->E, 5: E=>F
    t.edges = {{2, 0, 1}, {1, 1, 2}, {1, 1, 4}, {2, 2, 3}, {1, 3, 4}, {2, 4, 5}};
    t.rot = {{R{Template::Tail, 0}, R{Template::In, 1}, R{Template::In, 2}},
             {R{Template::Head, 0}, R{Template::Tail, 2}, R{Template::Tail, 1}},
             {R{Template::Tail, 3}, R{Template::In, 0}, R{Template::Head, 1}},
             {R{Template::Head, 3}, R{Template::Tail, 4}, R{Template::Out, 0}},
             {R{Template::Tail, 5}, R{Template::Head, 4}, R{Template::Head, 2}},
             {R{Template::Head, 5}, R{Template::Out, 2}, R{Template::Out, 1}}};
    return t;
}

int double_dart(const Graph& g, int v) {
    for (int d : g.rot[v])
        if (g.e[d >> 1].label == 2) return d;
    return -1;
}

// The simple edge at v other than `not_this`.
int other_simple(const Graph& g, int v, int not_this) {
    for (int d : g.rot[v])
        if (g.e[d >> 1].label == 1 && (d >> 1) != not_this) return d >> 1;
    return -1;
}

// [n] with [0] = 0.
LaurentPoly qnum(int n) { return n <= 0 ? LaurentPoly() : qint(n); }

Graph mirrored(Graph g) {
    for (auto& r : g.rot) std::swap(r[1], r[2]);
    return g;
}

}  // namespace

struct MoyEngine::Rewrite {
    std::vector<int> kill_vertices, kill_edges, ins, outs;
    std::vector<std::pair<LaurentPoly, Template>> terms;
    bool five = false;
    bool mirror = false;  // pattern was found on the mirrored graph
};

MoyEngine::MoyEngine(int N, MoyOptions opt) : N_(N), opt_(opt), rng_(opt.seed) {
    if (N < 2) throw std::domain_error("moy_eval: N must be at least 2");
}

void MoyEngine::charge() {
    if (++steps_ > opt_.budget) throw IrreducibleWeb("moy_eval: step budget exhausted");
}

LaurentPoly MoyEngine::eval(const Web& w) {
    const auto v = validate(w);
    if (!v.empty()) throw InvalidWeb(v);
    return eval(graph_of(w));
}

LaurentPoly MoyEngine::eval(const Graph& g) {
    try {
        return eval_graph(g);
    } catch (const CycleDetected&) {
        throw IrreducibleWeb("moy_eval: every applicable move leads back to a web under evaluation");
    }
}

LaurentPoly MoyEngine::eval_graph(const Graph& g) {
    LaurentPoly out = 1;
    for (int i = 0; i < g.circles1; ++i) out *= qint(N_);
    if (g.circles2 > 0) {
        const LaurentPoly d = qbinom(N_, 2);
        for (int i = 0; i < g.circles2; ++i) out *= d;
    }
    if (g.rot.empty()) return out;

    const auto comps = components(g);
    if (comps.size() == 1) {
        Graph h = g;
        h.circles1 = h.circles2 = 0;
        return out * eval_connected(h);
    }
    for (const auto& c : comps) {
        Work w(g);
        std::vector<char> keep(g.rot.size(), 0);
        for (int v : c) keep[v] = 1;
        for (std::size_t v = 0; v < g.rot.size(); ++v)
            if (!keep[v]) w.kill_vertex(static_cast<int>(v));
        for (std::size_t e = 0; e < g.e.size(); ++e)
            if (!keep[g.e[e].from]) w.kill_edge(static_cast<int>(e));
        Graph h = w.compact();
        h.circles1 = h.circles2 = 0;
        out *= eval_connected(h);
    }
    return out;
}

std::vector<MoyEngine::Rewrite> MoyEngine::moves(const Graph& g) const {
    std::vector<Rewrite> digons, squares, fives;
    for (const auto& f : faces(g)) {
        if (f.size() == 2) {
            const int e0 = f[0] >> 1, e1 = f[1] >> 1;
            const auto& a = g.e[e0];
            const auto& b = g.e[e1];
            Rewrite r;
            if (a.label == 1 && b.label == 1) {
                const int s = a.from, m = a.to;
                r.kill_vertices = {s, m};
                r.kill_edges = {e0, e1};
                r.ins = {double_dart(g, s) >> 1};
                r.outs = {double_dart(g, m) >> 1};
                r.terms.emplace_back(qint(2), straight({{0, 0}}));
            } else {
                const int se = a.label == 1 ? e0 : e1, de = a.label == 1 ? e1 : e0;
                const int s = g.e[se].from, m = g.e[se].to;
                r.kill_vertices = {s, m};
                r.kill_edges = {se, de};
                r.ins = {other_simple(g, m, se)};
                r.outs = {other_simple(g, s, se)};
                r.terms.emplace_back(qnum(N_ - 1), straight({{0, 0}}));
            }
            digons.push_back(std::move(r));
        } else if (f.size() == 4) {
            int doubles = 0;
            for (int d : f) doubles += g.e[d >> 1].label == 2;
            std::vector<int> fe;
            for (int d : f) fe.push_back(d >> 1);
            auto in_face = [&](int e) { return std::find(fe.begin(), fe.end(), e) != fe.end(); };

            if (doubles == 2) {
                // a => b -> c => d -> a
                int d1 = -1;
                for (int e : fe)
                    if (g.e[e].label == 2) d1 = e;
                const int a = g.e[d1].from, b = g.e[d1].to;
                int bc = -1;
                for (int d : g.rot[b])
                    if (g.e[d >> 1].label == 1 && in_face(d >> 1)) bc = d >> 1;
                if (bc < 0) continue;
                const int c = g.e[bc].to;
                const int d2 = double_dart(g, c) >> 1;
                const int d = g.e[d2].to;
                int da = -1;
                for (int x : g.rot[d])
                    if (g.e[x >> 1].label == 1 && in_face(x >> 1)) da = x >> 1;
                if (da < 0 || g.e[da].to != a || !in_face(d2)) continue;
                std::array<int, 4> vs{a, b, c, d};
                std::sort(vs.begin(), vs.end());
                if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) continue;

                Rewrite r;
                r.kill_vertices = {a, b, c, d};
                r.kill_edges = {d1, bc, d2, da};
                r.ins = {other_simple(g, a, da), other_simple(g, c, bc)};
                r.outs = {other_simple(g, b, bc), other_simple(g, d, da)};
                r.terms.emplace_back(LaurentPoly(1), straight({{0, 1}, {1, 0}}));
                if (N_ > 2) r.terms.emplace_back(qnum(N_ - 2), straight({{0, 0}, {1, 1}}));
                squares.push_back(std::move(r));
            } else if (doubles == 1) {
                // a -> b => c -> d <- a
                int bcd = -1;
                for (int e : fe)
                    if (g.e[e].label == 2) bcd = e;
                const int b = g.e[bcd].from, c = g.e[bcd].to;
                int ab = -1, cd = -1, ad = -1;
                for (int x : g.rot[b])
                    if (g.e[x >> 1].label == 1 && in_face(x >> 1)) ab = x >> 1;
                for (int x : g.rot[c])
                    if (g.e[x >> 1].label == 1 && in_face(x >> 1)) cd = x >> 1;
                if (ab < 0 || cd < 0) continue;
                const int a = g.e[ab].from, d = g.e[cd].to;
                for (int e : fe)
                    if (e != ab && e != cd && e != bcd) ad = e;
                if (ad < 0 || g.e[ad].from != a || g.e[ad].to != d) continue;
                std::array<int, 4> vs{a, b, c, d};
                std::sort(vs.begin(), vs.end());
                if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) continue;

                const int da_dart = double_dart(g, a), dd_dart = double_dart(g, d);
                const int m1 = g.e[da_dart >> 1].from, s3 = g.e[dd_dart >> 1].to;
                if (std::find(vs.begin(), vs.end(), m1) != vs.end() || std::find(vs.begin(), vs.end(), s3) != vs.end())
                    continue;
                // Chirality: a's output before its double edge must be the one to d.
                const int sa = g.slot_of(da_dart);
                if ((g.rot[a][(sa + 2) % 3] >> 1) != ad) continue;
                const int sd = g.slot_of(dd_dart);
                if ((g.rot[d][(sd + 1) % 3] >> 1) != ad) continue;

                const int dm1 = double_dart(g, m1), ds3 = double_dart(g, s3);
                const int i1 = g.rot[m1][(g.slot_of(dm1) + 1) % 3] >> 1;
                const int i2 = g.rot[m1][(g.slot_of(dm1) + 2) % 3] >> 1;
                const int o1 = g.rot[s3][(g.slot_of(ds3) + 2) % 3] >> 1;
                const int o2 = g.rot[s3][(g.slot_of(ds3) + 1) % 3] >> 1;

                Rewrite r;
                r.kill_vertices = {m1, a, b, c, d, s3};
                r.kill_edges = {da_dart >> 1, ab, ad, bcd, cd, dd_dart >> 1};
                r.ins = {i1, i2, other_simple(g, b, ab)};
                r.outs = {o1, o2, other_simple(g, c, cd)};
                r.terms.emplace_back(LaurentPoly(1), h23_h12_h23());
                r.terms.emplace_back(LaurentPoly(1), h12());
                r.terms.emplace_back(LaurentPoly(-1), h23());
                r.five = true;
                fives.push_back(std::move(r));
            }
        }
    }
    std::vector<Rewrite> all;
    for (auto* v : {&digons, &squares, &fives})
        for (auto& r : *v) all.push_back(std::move(r));
    return all;
}

LaurentPoly MoyEngine::eval_connected(const Graph& g) {
    const auto key = canonical_code(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!active_.insert(key).second) throw CycleDetected{};
    struct Guard {
        std::set<std::vector<int>>& s;
        const std::vector<int>& k;
        ~Guard() { s.erase(k); }
    } guard{active_, key};

    auto candidates = [&](const Graph& h, bool mirror) {
        auto ms = moves(h);
        for (auto& m : ms) m.mirror = mirror;
        return ms;
    };
    const Graph gm = mirrored(g);
    auto ms = candidates(g, false);
    bool has_five = false;
    for (const auto& m : ms) has_five = has_five || m.five;
    if (!has_five) {
        // Five-edge faces of the other chirality are matched on the mirror image.
        for (auto& m : candidates(gm, true))
            if (m.five) ms.push_back(std::move(m));
    }
    if (ms.empty()) throw IrreducibleWeb("moy_eval: no move applies to a web component");
    if (opt_.seed != 0) std::shuffle(ms.begin(), ms.end(), rng_);

    for (const auto& m : ms) {
        charge();
        const Graph& base = m.mirror ? gm : g;
        try {
            LaurentPoly total;
            for (const auto& [c, t] : m.terms) {
                Work w(base);
                for (int v : m.kill_vertices) w.kill_vertex(v);
                for (int e : m.kill_edges) w.kill_edge(e);
                w.apply(t, m.ins, m.outs);
                total += c * eval_graph(w.compact());
            }
            memo_.emplace(key, total);
            return total;
        } catch (const CycleDetected&) {
            continue;
        }
    }
    throw CycleDetected{};
}

std::vector<int> canonical_code(const Graph& g) {
    const int V = g.vertices();
    std::vector<int> best;
    std::vector<int> num(V), entry(V), order;
    std::vector<int> code;
    for (int start = 0; start < 2 * static_cast<int>(g.e.size()); ++start) {
        std::fill(num.begin(), num.end(), -1);
        order.clear();
        code.clear();
        const int v0 = g.vertex_of(start);
        num[v0] = 0;
        entry[v0] = g.slot_of(start);
        order.push_back(v0);
        bool worse = false;
        for (std::size_t i = 0; i < order.size() && !worse; ++i) {
            const int v = order[i];
            for (int j = 0; j < 3; ++j) {
                const int d = g.rot[v][(entry[v] + j) % 3];
                const int o = d ^ 1;
                const int w = g.vertex_of(o);
                if (num[w] < 0) {
                    num[w] = static_cast<int>(order.size());
                    entry[w] = g.slot_of(o);
                    order.push_back(w);
                }
                code.push_back(2 * g.e[d >> 1].label + (d & 1));
                code.push_back(num[w]);
                code.push_back((g.slot_of(o) - entry[w] + 3) % 3);
            }
            // Prune once this prefix is already larger than the best code.
            if (!best.empty()) {
                const auto n = code.size();
                if (std::lexicographical_compare(best.begin(), best.begin() + static_cast<long>(n), code.begin(),
                                                 code.end()))
                    worse = true;
            }
        }
        if (!worse && (best.empty() || code < best)) best = code;
    }
    return best;
}

}  // namespace detail

LaurentPoly moy_eval(const Web& w, int N, const MoyOptions& opt) {
    detail::MoyEngine e(N, opt);
    return e.eval(w);
}

}  // namespace webfoam
