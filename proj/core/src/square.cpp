#include "square.hpp"

#include <numeric>
#include <stdexcept>

namespace webfoam::detail {

// Vertices: 4e + {TL, TR, BL, BR} for the two squares e = 0, 1.
// Edges: 4e + {top, bottom, left, right}; legs 8..11 = UL, UR, LL, LR join the squares.
namespace {

enum { TL, TR, BL, BR };
enum { TOP, BOT, LEFT, RIGHT };
enum { UL = 8, UR = 9, LL = 10, LR = 11 };

int vx(int end, int c) { return 4 * end + c; }
int ed(int end, int c) { return 4 * end + c; }

SchurSum dots(int n) { return SchurSum(Partition{n}); }
SchurSum plain(int k) { return SchurSum(zero_partition(k)); }

// Pieces at one end of a half foam; outer facets are added separately.
void add_end(HalfFoam& h, int end, SquareShape::End type, int square_dots) {
    if (type == SquareShape::End::Vertical) {
        h.pieces.push_back({2, plain(2), {ed(end, TOP), ed(end, BOT)}});
        h.pieces.push_back({1, plain(1), {ed(end, LEFT)}});
        h.pieces.push_back({1, plain(1), {ed(end, RIGHT)}});
        h.arcs.push_back({vx(end, TL), vx(end, BL)});
        h.arcs.push_back({vx(end, TR), vx(end, BR)});
    } else {
        h.pieces.push_back({2, plain(2), {ed(end, TOP)}});
        h.pieces.push_back({2, plain(2), {ed(end, BOT)}});
        h.pieces.push_back({1, dots(square_dots), {ed(end, LEFT), ed(end, RIGHT)}});
        h.arcs.push_back({vx(end, TL), vx(end, TR)});
        h.arcs.push_back({vx(end, BL), vx(end, BR)});
    }
}

}  // namespace

BoundaryWeb square_closure_web() {
    BoundaryWeb g;
    g.vertices = 8;
    g.edge_k.assign(12, 1);
    g.edge_ends.resize(12);
    g.roles.resize(8);
    for (int e = 0; e < 2; ++e) {
        g.edge_k[ed(e, TOP)] = g.edge_k[ed(e, BOT)] = 2;
        g.edge_ends[ed(e, TOP)] = {vx(e, TL), vx(e, TR)};
        g.edge_ends[ed(e, BOT)] = {vx(e, BR), vx(e, BL)};
        g.edge_ends[ed(e, LEFT)] = {vx(e, TL), vx(e, BL)};
        g.edge_ends[ed(e, RIGHT)] = {vx(e, TR), vx(e, BR)};
        // the facet through a vertical side of the square comes first
        g.roles[vx(e, TL)] = {ed(e, LEFT), UL, ed(e, TOP)};
        g.roles[vx(e, TR)] = {ed(e, RIGHT), UR, ed(e, TOP)};
        g.roles[vx(e, BL)] = {ed(e, LEFT), LL, ed(e, BOT)};
        g.roles[vx(e, BR)] = {ed(e, RIGHT), LR, ed(e, BOT)};
    }
    g.edge_ends[UL] = {vx(0, TL), vx(1, TL)};
    g.edge_ends[UR] = {vx(0, TR), vx(1, TR)};
    g.edge_ends[LL] = {vx(0, BL), vx(1, BL)};
    g.edge_ends[LR] = {vx(0, BR), vx(1, BR)};
    return g;
}

HalfFoam square_half(const SquareShape& s) {
    HalfFoam h;
    add_end(h, 0, s.ends[0], s.square_dots[0]);
    add_end(h, 1, s.ends[1], s.square_dots[1]);
    using E = SquareShape::End;
    // outer facets: vertical strands join a leg above and below, horizontal arcs join left and right
    auto vertical = [](E t) { return t == E::Vertical; };
    if (vertical(s.ends[0]) && vertical(s.ends[1])) {
        h.pieces.push_back({1, dots(s.outer[0]), {UL, LL}});
        h.pieces.push_back({1, dots(s.outer[1]), {UR, LR}});
    } else if (!vertical(s.ends[0]) && !vertical(s.ends[1])) {
        h.pieces.push_back({1, dots(s.outer[0]), {UL, UR}});
        h.pieces.push_back({1, dots(s.outer[1]), {LL, LR}});
    } else {
        h.pieces.push_back({1, dots(s.outer[0]), {UL, UR, LL, LR}});
    }
    return h;
}

HalfFoam square_identity() {
    HalfFoam h;
    h.pieces.push_back({2, plain(2), {ed(0, TOP), ed(1, TOP)}});
    h.pieces.push_back({2, plain(2), {ed(0, BOT), ed(1, BOT)}});
    h.pieces.push_back({1, plain(1), {ed(0, LEFT), ed(1, LEFT)}});
    h.pieces.push_back({1, plain(1), {ed(0, RIGHT), ed(1, RIGHT)}});
    for (int leg : {UL, UR, LL, LR}) h.pieces.push_back({1, plain(1), {leg}});
    for (int c : {TL, TR, BL, BR}) h.arcs.push_back({vx(0, c), vx(1, c)});
    return h;
}

SquareSymmetry square_symmetry(bool swap_ends, bool flip) {
    SquareSymmetry s;
    s.vmap.resize(8);
    s.emap.resize(12);
    const int hflip[4] = {TR, TL, BR, BL};
    const int eflip[4] = {TOP, BOT, RIGHT, LEFT};
    for (int e = 0; e < 2; ++e)
        for (int c = 0; c < 4; ++c) {
            int e2 = swap_ends ? 1 - e : e;
            s.vmap[vx(e, c)] = vx(e2, flip ? hflip[c] : c);
            s.emap[ed(e, c)] = ed(e2, flip ? eflip[c] : c);
        }
    s.emap[UL] = flip ? UR : UL;
    s.emap[UR] = flip ? UL : UR;
    s.emap[LL] = flip ? LR : LL;
    s.emap[LR] = flip ? LL : LR;
    return s;
}

namespace {

using E = SquareShape::End;

HalfFoam shape(E a, E b, int sq0, int sq1, int out0, int out1 = 0) {
    SquareShape s;
    s.ends = {a, b};
    s.square_dots = {sq0, sq1};
    s.outer = {out0, out1};
    return square_half(s);
}

// v'_{i,k}: square at the second end labelled i, the single outer facet k.
HalfFoam vprime(int i, int k) { return shape(E::Vertical, E::Horizontal, 0, i, k); }
HalfFoam wprime(int i, int k) { return shape(E::Horizontal, E::Vertical, i, 0, k); }
// s'_{i,j,k,m}: front i, back j, squares k and m.
HalfFoam sprime(int i, int j, int k, int m) { return shape(E::Horizontal, E::Horizontal, k, m, i, j); }

}  // namespace

std::vector<SquareBasisElement> square_basis(int N) {
    std::vector<SquareBasisElement> out;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            SquareBasisElement b;
            b.name = "u(" + std::to_string(i) + "," + std::to_string(j) + ")";
            b.element = {{1, shape(E::Vertical, E::Vertical, 0, 0, i, j)}};
            b.dual = {{1, shape(E::Vertical, E::Vertical, 0, 0, N - 1 - j, N - 1 - i)}};
            out.push_back(std::move(b));
        }
    for (int w = 0; w < 2; ++w)
        for (int i = 0; i < N; ++i)
            for (int k = 0; k <= N - 3; ++k) {
                SquareBasisElement b;
                b.name = std::string(w ? "w(" : "v(") + std::to_string(i) + "," + std::to_string(k) + ")";
                for (int a = 0; a <= N - 3 - k; ++a)
                    for (int bb = 0; a + bb <= N - 3 - k; ++bb) {
                        int c = N - 3 - k - a - bb;
                        b.element.push_back({1, w ? wprime(c, a + bb + i) : vprime(c, a + bb + i)});
                    }
                b.dual = {{1, w ? vprime(k, N - 1 - i) : wprime(k, N - 1 - i)}};
                out.push_back(std::move(b));
            }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k <= N - 3; ++k)
                for (int m = 0; m <= N - 3; ++m) {
                    SquareBasisElement b;
                    b.name = "s(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                             std::to_string(m) + ")";
                    for (int a = 0; a <= N - 3 - k; ++a)
                        for (int bb = 0; a + bb <= N - 3 - k; ++bb)
                            for (int d = 0; d <= N - 3 - m; ++d)
                                for (int e = 0; d + e <= N - 3 - m; ++e) {
                                    int c = N - 3 - k - a - bb, f = N - 3 - m - d - e;
                                    b.element.push_back({1, sprime(c, f, i + a + d, j + bb + e)});
                                }
                    b.dual = {{1, sprime(m, k, N - 1 - i, N - 1 - j)}};
                    out.push_back(std::move(b));
                }
    return out;
}

HalfSum square_relation_rhs(int N) {
    // minus the vertical resolution, plus the dotted horizontal one summed over a+b+c+d = N-3
    HalfSum rhs{{-1, shape(E::Vertical, E::Vertical, 0, 0, 0, 0)}};
    for (int a = 0; a <= N - 3; ++a)
        for (int b = 0; a + b <= N - 3; ++b)
            for (int c = 0; a + b + c <= N - 3; ++c) rhs.push_back({1, sprime(a, b, c, N - 3 - a - b - c)});
    return rhs;
}

}  // namespace webfoam::detail
