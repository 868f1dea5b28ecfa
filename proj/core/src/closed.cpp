#include "webfoam/closed.hpp"

#include <stdexcept>

namespace webfoam {

int VertexFreeFoam::add_facet(int k, const SchurSum& dec) {
    if (k < 1 || k > 3) throw std::domain_error("facet thickness must be 1..3");
    if (!dec.is_zero() && dec.k() != k) throw std::domain_error("facet decoration has the wrong length");
    facets_.push_back({k, dec.is_zero() ? SchurSum(k) : dec});
    return static_cast<int>(facets_.size()) - 1;
}

void VertexFreeFoam::decorate(int f, const SchurSum& d) {
    auto& F = facets_.at(f);
    if (d.k() != F.k) throw std::domain_error("decoration has the wrong length");
    F.dec = F.dec * d;
}

void VertexFreeFoam::add_handles(int f, int g) {
    if (g < 0) throw std::domain_error("negative number of handles");
    facets_.at(f).handles += g;
}

void VertexFreeFoam::add_circle112(int first, int second, int dbl) {
    if (facets_.at(first).k != 1 || facets_.at(second).k != 1 || facets_.at(dbl).k != 2)
        throw std::domain_error("a (1,1,2) circle needs two simple facets and a double one");
    circles_.push_back({112, first, second, dbl, 1});
}

void VertexFreeFoam::add_circle123(int simple, int dbl, int triple, int orient) {
    if (facets_.at(simple).k != 1 || facets_.at(dbl).k != 2 || facets_.at(triple).k != 3)
        throw std::domain_error("a (1,2,3) circle needs facets of thickness 1, 2 and 3");
    if (orient != 1 && orient != -1) throw std::domain_error("orientation must be +-1");
    circles_.push_back({123, simple, dbl, triple, orient});
}

namespace {

mpq_class theta_value(const VertexFreeFoam::Circle& c, const SchurSum& A, const SchurSum& B, const SchurSum& C,
                      int N) {
    mpq_class s = 0;
    for (const auto& [pa, ca] : A.terms())
        for (const auto& [pb, cb] : B.terms())
            for (const auto& [pc, cc] : C.terms()) {
                mpq_class v = c.kind == 112 ? theta112_closed(N, pa[0], pb[0], pc)
                                            : theta123_closed(N, pc, pb, pa[0], c.orient);
                if (v != 0) s += ca * cb * cc * v;
            }
    return s;
}

}  // namespace

mpq_class evaluate(const VertexFreeFoam& f, int N) {
    const auto& facets = f.facets();
    const auto& circles = f.circles();
    for (const auto& F : facets)
        if (F.k == 3 && N < 4) throw std::domain_error("triple facets need N >= 4");

    std::vector<GrassRing> rings;
    for (int k = 1; k <= 3; ++k) rings.emplace_back(std::max(N, k), k);
    auto ring = [&](int k) -> const GrassRing& { return rings[k - 1]; };

    // incidences[facet] = list of (circle, position 0..2)
    std::vector<std::vector<std::pair<int, int>>> inc(facets.size());
    for (std::size_t ci = 0; ci < circles.size(); ++ci) {
        const auto& c = circles[ci];
        inc[c.a].push_back({static_cast<int>(ci), 0});
        inc[c.b].push_back({static_cast<int>(ci), 1});
        inc[c.c].push_back({static_cast<int>(ci), 2});
    }

    // a handle is a neck cut: sum of basis class times dual class
    std::vector<SchurSum> handle;
    for (int k = 1; k <= 3; ++k) {
        const GrassRing& g = ring(k);
        SchurSum h(k);
        for (const auto& lam : g.basis()) h += g.mul(SchurSum(lam), g.dual(lam));
        handle.push_back(h);
    }
    std::vector<SchurSum> base(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const GrassRing& g = ring(facets[i].k);
        base[i] = g.reduce(facets[i].dec);
        for (int h = 0; h < facets[i].handles; ++h) base[i] = g.mul(base[i], handle[facets[i].k - 1]);
    }

    mpq_class spheres = 1;
    for (std::size_t i = 0; i < facets.size(); ++i)
        if (inc[i].empty()) spheres *= ring(facets[i].k).trace(base[i]);
    if (spheres == 0) return 0;

    // Each cut slot gets a basis class; its partner dual class lands on the first disk.
    struct Slot {
        int facet;
        int circle, pos;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 1; j < inc[i].size(); ++j) slots.push_back({static_cast<int>(i), inc[i][j].first, inc[i][j].second});

    std::vector<std::vector<SchurSum>> disk(circles.size(), std::vector<SchurSum>(3));
    std::vector<std::size_t> choice(slots.size(), 0);
    mpq_class total = 0;
    while (true) {
        std::vector<SchurSum> first = base;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const auto& sl = slots[s];
            const GrassRing& g = ring(facets[sl.facet].k);
            const Partition& lam = g.basis()[choice[s]];
            disk[sl.circle][sl.pos] = SchurSum(lam);
            first[sl.facet] = g.mul(first[sl.facet], g.dual(lam));
        }
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (!inc[i].empty()) disk[inc[i][0].first][inc[i][0].second] = first[i];

        mpq_class val = 1;
        for (std::size_t ci = 0; ci < circles.size() && val != 0; ++ci)
            val *= theta_value(circles[ci], disk[ci][0], disk[ci][1], disk[ci][2], N);
        total += val;

        std::size_t s = 0;
        for (; s < slots.size(); ++s) {
            if (++choice[s] < ring(facets[slots[s].facet].k).basis().size()) break;
            choice[s] = 0;
        }
        if (s == slots.size()) break;
    }
    return total * spheres;
}

}  // namespace webfoam
