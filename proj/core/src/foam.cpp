#include "webfoam/foam.hpp"

#include <sstream>
#include <stdexcept>

namespace webfoam {

std::string describe(const FoamAtom& a) {
    std::ostringstream os;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Sphere>)
                os << "Sphere(" << v.label << ", " << v.dec.str() << ")";
            else if constexpr (std::is_same_v<T, Theta112>)
                os << "Theta112(" << v.d1 << ", " << v.d2 << ", " << v.dec2.str() << ")";
            else
                os << "Theta123(" << v.dec3.str() << ", " << v.dec2.str() << ", " << v.d1
                   << (v.orient < 0 ? ", reversed" : "") << ")";
        },
        a);
    return os.str();
}

ClosedFoam ClosedFoam::atom(const FoamAtom& a, const mpq_class& c) {
    ClosedFoam f;
    if (c != 0) f.terms.push_back({c, {a}});
    return f;
}

ClosedFoam& ClosedFoam::operator+=(const ClosedFoam& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
}

ClosedFoam ClosedFoam::scale(const mpq_class& c) const {
    ClosedFoam f;
    if (c == 0) return f;
    for (const auto& [k, atoms] : terms) f.terms.push_back({k * c, atoms});
    return f;
}

ClosedFoam operator*(const ClosedFoam& a, const ClosedFoam& b) {
    ClosedFoam f;
    for (const auto& [c1, x] : a.terms) {
        for (const auto& [c2, y] : b.terms) {
            std::vector<FoamAtom> u = x;
            u.insert(u.end(), y.begin(), y.end());
            f.terms.push_back({c1 * c2, std::move(u)});
        }
    }
    return f;
}

static void need_triple(int N) {
    if (N < 4) throw std::domain_error("triple facets need N >= 4");
}

int q_grading(const FoamAtom& a, int N) {
    if (N < 2) throw std::domain_error("q_grading: N >= 2");
    // -sum i(N-i) chi(i-facets) - 2(N-2) chi(singular graph) + 2 * decoration degree;
    // every singular graph here is a circle, so its Euler characteristic vanishes.
    auto facet = [&](int i, int chi) { return -i * (N - i) * chi; };
    return std::visit(
        [&](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Sphere>) {
                if (v.label == 3) need_triple(N);
                if (v.label < 1 || v.label > 3) throw std::domain_error("sphere label must be 1..3");
                return facet(v.label, 2) + 2 * v.dec.size();
            } else if constexpr (std::is_same_v<T, Theta112>) {
                return facet(1, 2) + facet(2, 1) + 2 * (v.d1 + v.d2 + v.dec2.size());
            } else {
                need_triple(N);
                return facet(1, 1) + facet(2, 1) + facet(3, 1) + 2 * (v.d1 + v.dec2.size() + v.dec3.size());
            }
        },
        a);
}

mpq_class sphere_eval(int label, const Partition& dec, int N) {
    if (label < 1 || label > 3 || dec.length() != label) throw std::domain_error("sphere_eval: label/decoration mismatch");
    if (label == 3) need_triple(N);
    return GrassRing(N, label).trace(SchurSum(dec));
}

mpq_class sphere_eval(const SchurSum& dec, int N) {
    if (dec.is_zero()) return 0;
    if (dec.k() == 3) need_triple(N);
    return GrassRing(N, dec.k()).trace(dec);
}

mpq_class theta112_closed(int N, int d1, int d2, const Partition& dec2) {
    if (N < 2) throw std::domain_error("theta112: N >= 2");
    if (dec2.length() != 2 || !dec2.valid()) throw std::domain_error("theta112: bad double-facet decoration");
    const int j = dec2[0], k = dec2[1];
    if (d1 < 0 || d2 < 0 || d1 > N - 1 || d2 > N - 1 || j > N - 2) return 0;
    if (d1 + d2 + j + k != 2 * N - 3) return 0;
    if (d1 + k == N - 1) return 1;
    if (d1 + j == N - 2) return -1;
    return 0;
}

mpq_class theta123_closed(int N, const Partition& dec3, const Partition& dec2, int i, int orient) {
    need_triple(N);
    if (dec3.length() != 3 || !dec3.valid() || dec2.length() != 2 || !dec2.valid())
        throw std::domain_error("theta123: bad decoration");
    if (orient != 1 && orient != -1) throw std::domain_error("theta123: orientation must be +-1");
    const int p = dec3[0], q = dec3[1], r = dec3[2], j = dec2[0], k = dec2[1];
    if (i < 0 || i > N - 1 || p > N - 3 || j > N - 2) return 0;
    if (p + q + r + j + k + i != 3 * N - 7) return 0;
    int v = 0;
    if (p == N - 3 - i && q == N - 2 - k && r == N - 2 - j && N - 2 >= j && j >= k && k >= i + 1)
        v = -1;
    else if (p == N - 3 - k && q == N - 3 - j && r == N - 1 - i && N - 1 >= i && i >= j + 2 && j >= k)
        v = -1;
    else if (p == N - 3 - k && q == N - 2 - i && r == N - 2 - j && N - 2 >= j && j >= i && i >= k + 1)
        v = 1;
    return v * orient;
}

mpq_class eval(const FoamAtom& a, int N) {
    return std::visit(
        [&](const auto& v) -> mpq_class {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Sphere>)
                return sphere_eval(v.label, v.dec, N);
            else if constexpr (std::is_same_v<T, Theta112>)
                return theta112_closed(N, v.d1, v.d2, v.dec2);
            else
                return theta123_closed(N, v.dec3, v.dec2, v.d1, v.orient);
        },
        a);
}

mpq_class eval(const ClosedFoam& f, int N) {
    mpq_class total = 0;
    for (const auto& [c, atoms] : f.terms) {
        mpq_class prod = c;
        for (const auto& a : atoms) {
            if (prod == 0) break;
            prod *= eval(a, N);
        }
        total += prod;
    }
    return total;
}

// ---- dot migration ----

namespace {

// Atoms with dec replaced by each term of dec * e_m.
template <class F>
ClosedFoam times_elementary(const Partition& dec, int m, F make) {
    ClosedFoam out;
    const SchurSum prod = mult_elementary(dec, m);
    for (const auto& [p, c] : prod.terms()) out += ClosedFoam::atom(make(p), c);
    return out;
}

}  // namespace

Migration migrate(const FoamAtom& a, Facet where, int m, MigrationDir dir) {
    auto bad = [] { throw std::domain_error("migrate: not an elementary migration"); };
    ClosedFoam before, after;
    if (const auto* t = std::get_if<Theta112>(&a)) {
        auto with = [&](int d1, int d2, const Partition& p) { return FoamAtom(Theta112{d1, d2, p}); };
        if (dir == MigrationDir::Inward) {
            if (where != Facet::Double || m < 1 || m > 2) bad();
            if (m == 1) {  // s = x + y
                after += ClosedFoam::atom(with(t->d1 + 1, t->d2, t->dec2));
                after += ClosedFoam::atom(with(t->d1, t->d2 + 1, t->dec2));
            } else {  // t = xy
                after += ClosedFoam::atom(with(t->d1 + 1, t->d2 + 1, t->dec2));
            }
        } else {
            if ((where != Facet::Simple1 && where != Facet::Simple2) || m != 1) bad();
            // x = s - y
            after += times_elementary(t->dec2, 1, [&](const Partition& p) { return with(t->d1, t->d2, p); });
            if (where == Facet::Simple1)
                after += ClosedFoam::atom(with(t->d1, t->d2 + 1, t->dec2), -1);
            else
                after += ClosedFoam::atom(with(t->d1 + 1, t->d2, t->dec2), -1);
        }
        if (where == Facet::Double)
            before = times_elementary(t->dec2, m, [&](const Partition& p) { return with(t->d1, t->d2, p); });
        else if (where == Facet::Simple1)
            before = ClosedFoam::atom(with(t->d1 + 1, t->d2, t->dec2));
        else
            before = ClosedFoam::atom(with(t->d1, t->d2 + 1, t->dec2));
    } else if (const auto* t = std::get_if<Theta123>(&a)) {
        auto with = [&](const Partition& d3, const Partition& d2, int d1) {
            return FoamAtom(Theta123{d3, d2, d1, t->orient});
        };
        auto on3 = [&](int mm, const Partition& d2, int d1) {
            return times_elementary(t->dec3, mm, [&](const Partition& p) { return with(p, d2, d1); });
        };
        auto on2 = [&](int mm, const Partition& d3, int d1) {
            return times_elementary(t->dec2, mm, [&](const Partition& p) { return with(d3, p, d1); });
        };
        if (dir == MigrationDir::Inward) {
            if (where != Facet::Triple || m < 1 || m > 3) bad();
            before = on3(m, t->dec2, t->d1);
            if (m == 1) {  // p = x + s
                after += ClosedFoam::atom(with(t->dec3, t->dec2, t->d1 + 1));
                after += on2(1, t->dec3, t->d1);
            } else if (m == 2) {  // q = xs + t
                after += on2(1, t->dec3, t->d1 + 1);
                after += on2(2, t->dec3, t->d1);
            } else {  // r = xt
                after += on2(2, t->dec3, t->d1 + 1);
            }
        } else if (where == Facet::Double) {
            if (m < 1 || m > 2) bad();
            before = on2(m, t->dec3, t->d1);
            if (m == 1) {  // s = p - x
                after += on3(1, t->dec2, t->d1);
                after += ClosedFoam::atom(with(t->dec3, t->dec2, t->d1 + 1), -1);
            } else {  // t = q - xp + x^2
                after += on3(2, t->dec2, t->d1);
                after += on3(1, t->dec2, t->d1 + 1).scale(-1);
                after += ClosedFoam::atom(with(t->dec3, t->dec2, t->d1 + 2));
            }
        } else if (where == Facet::Simple1) {
            if (m != 1) bad();
            // x = p - s
            before = ClosedFoam::atom(with(t->dec3, t->dec2, t->d1 + 1));
            after += on3(1, t->dec2, t->d1);
            after += on2(1, t->dec3, t->d1).scale(-1);
        } else {
            bad();
        }
    } else {
        bad();
    }
    return {before, after};
}

// ---- bubbles: the decoration D with eps(D * pi_mu) = closed value for every mu ----

SchurSum bubble_double(int N, int i, int j) {
    GrassRing g2(N, 2);
    SchurSum out(2);
    for (const auto& lam : g2.basis()) out += g2.dual(lam).scale(theta112_closed(N, i, j, lam));
    return out;
}

SchurSum bubble_triple(int N, int kind, const std::vector<int>& idx) {
    need_triple(N);
    if (kind == 1) {
        if (idx.size() != 4) throw std::domain_error("bubble kind 1 takes (p,q,r,i)");
        Partition d3{idx[0], idx[1], idx[2]};
        GrassRing g2(N, 2);
        SchurSum out(2);
        for (const auto& lam : g2.basis()) out += g2.dual(lam).scale(theta123_closed(N, d3, lam, idx[3], -1));
        return out;
    }
    if (kind == 2) {
        if (idx.size() != 3) throw std::domain_error("bubble kind 2 takes (i,k,m)");
        Partition d2{idx[1], idx[2]};
        GrassRing g3(N, 3);
        SchurSum out(3);
        for (const auto& mu : g3.basis()) out += g3.dual(mu).scale(theta123_closed(N, mu, d2, idx[0], -1));
        return out;
    }
    if (kind == 3) {
        if (idx.size() != 5) throw std::domain_error("bubble kind 3 takes (p,q,r,k,m)");
        Partition d3{idx[0], idx[1], idx[2]}, d2{idx[3], idx[4]};
        SchurSum out(1);
        for (int a = 0; a < N; ++a) out.add(Partition{N - 1 - a}, theta123_closed(N, d3, d2, a, 1));
        return out;
    }
    throw std::domain_error("bubble kind must be 1, 2 or 3");
}

std::vector<std::tuple<int, int, Partition, mpq_class>> theta112_table(int N) {
    std::vector<std::tuple<int, int, Partition, mpq_class>> rows;
    GrassRing g2(N, 2);
    for (int d1 = 0; d1 < N; ++d1)
        for (int d2 = 0; d2 < N; ++d2)
            for (const auto& lam : g2.basis()) {
                mpq_class v = theta112_closed(N, d1, d2, lam);
                if (v != 0) rows.emplace_back(d1, d2, lam, v);
            }
    return rows;
}

std::vector<std::tuple<Partition, Partition, int, mpq_class>> theta123_table(int N) {
    std::vector<std::tuple<Partition, Partition, int, mpq_class>> rows;
    GrassRing g2(N, 2), g3(N, 3);
    for (const auto& mu : g3.basis())
        for (const auto& lam : g2.basis())
            for (int i = 0; i < N; ++i) {
                mpq_class v = theta123_closed(N, mu, lam, i);
                if (v != 0) rows.emplace_back(mu, lam, i, v);
            }
    return rows;
}

}  // namespace webfoam
