#include "webfoam/relations.hpp"

#include "webfoam/closed.hpp"
#include "webfoam/foam.hpp"
#include "square.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace webfoam {

bool RelationReport::matrix_is_identity() const {
    if (matrix.empty()) return false;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix[i].size(); ++j)
            if (matrix[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

long RelationReport::checked() const {
    long n = 0;
    for (const auto& c : checks) n += c.checked;
    return n;
}

long RelationReport::failures() const {
    long n = 0;
    for (const auto& c : checks) n += c.failures;
    return n;
}

std::string RelationReport::summary() const {
    std::ostringstream os;
    os << id << " N=" << N << ": " << (pass ? "pass" : "FAIL") << " (" << checked() << " entries, " << failures()
       << " mismatches)";
    for (const auto& c : checks) {
        os << "\n  " << c.name << ": " << c.checked << " checked, " << c.failures << " failed";
        if (!c.counterexample.empty()) os << "; first: " << c.counterexample;
    }
    if (has_matrix())
        os << "\n  pairing matrix " << matrix.size() << "x" << matrix.size()
           << (matrix_is_identity() ? " is the identity" : " is not the identity");
    if (!note.empty()) os << "\n  " << note;
    return os.str();
}

const std::vector<std::string>& relation_ids() {
    static const std::vector<std::string> ids{"CN1", "CN2", "CNstar", "S1", "S2", "Sstar", "Theta", "ThetaStar", "DR1",
                                              "DR2", "SqR1", "RD1", "RD2", "FC", "3C", "DotMigration", "DotConversion"};
    return ids;
}

namespace {

SchurSum dots(int a) { return SchurSum(Partition{a}); }
SchurSum pi2(int a, int b) { return SchurSum(Partition{a, b}); }
mpq_class s1(int a, int N) { return a == N - 1 ? 1 : 0; }

std::string str(const mpq_class& q) { return q.get_str(); }

void expect(RelationCheck& c, const mpq_class& got, const mpq_class& want, const std::function<std::string()>& where) {
    ++c.checked;
    if (got == want) return;
    if (c.failures++ == 0) c.counterexample = where() + ": got " + str(got) + ", expected " + str(want);
}

void merge(RelationCheck& into, const RelationCheck& part) {
    if (into.failures == 0 && part.failures > 0) into.counterexample = part.counterexample;
    into.checked += part.checked;
    into.failures += part.failures;
}

// Runs body(row, check) for every row on up to `jobs` threads; each row writes only
// to its own check, merged afterwards in row order.
void parallel_rows(int rows, int jobs, const std::function<void(int, RelationCheck&)>& body, RelationCheck& out) {
    std::vector<RelationCheck> parts(rows);
    jobs = std::max(1, std::min(jobs, rows));
    if (jobs == 1) {
        for (int r = 0; r < rows; ++r) body(r, parts[r]);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (int r = t; r < rows; r += jobs) body(r, parts[r]);
            });
        for (auto& th : pool) th.join();
    }
    for (const auto& p : parts) merge(out, p);
}

using Matrix = std::vector<std::vector<mpq_class>>;

Matrix parallel_matrix(int n, int jobs, const std::function<mpq_class(int, int)>& entry) {
    Matrix m(n, std::vector<mpq_class>(n));
    RelationCheck unused;
    parallel_rows(
        n, jobs,
        [&](int i, RelationCheck&) {
            for (int j = 0; j < n; ++j) m[i][j] = entry(i, j);
        },
        unused);
    return m;
}

RelationCheck identity_check(const Matrix& m, const std::vector<std::string>& labels) {
    RelationCheck c{"pairing matrix is the identity"};
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            expect(c, m[i][j], i == j ? 1 : 0, [&] { return "<" + labels[i] + ", " + labels[j] + "*>"; });
    return c;
}

void need(int N, int lo, const char* what) {
    if (N < lo) throw std::domain_error(std::string(what) + " needs N >= " + std::to_string(lo));
}

// ---- spheres and thetas ----

RelationReport sphere_rel(int N, int k) {
    RelationReport r;
    RelationCheck c{"sphere values against the top class"};
    const int top = N - k;
    const mpq_class sign = (k / 2) % 2 ? -1 : 1;
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& parts, int pos) {
        if (pos == k) {
            Partition p(parts);
            bool is_top = std::all_of(parts.begin(), parts.end(), [&](int v) { return v == top; });
            expect(c, sphere_eval(k, p, N), is_top ? sign : 0, [&] { return "sphere " + p.str(); });
            return;
        }
        int hi = pos == 0 ? 2 * N : parts[pos - 1];
        for (int v = 0; v <= hi; ++v) {
            parts[pos] = v;
            rec(parts, pos + 1);
        }
    };
    std::vector<int> parts(k, 0);
    rec(parts, 0);
    r.checks.push_back(c);
    return r;
}

RelationReport theta_rel(int N, int jobs) {
    RelationReport r;
    GrassRing g2(N, 2);
    RelationCheck c{"closed form against the residue formula"};
    parallel_rows(
        N, jobs,
        [&](int d1, RelationCheck& part) {
            for (int d2 = 0; d2 < N; ++d2)
                for (const auto& lam : g2.basis())
                    expect(part, theta112_closed(N, d1, d2, lam), theta112_direct(N, d1, d2, lam), [&] {
                        return "theta(" + std::to_string(d1) + "," + std::to_string(d2) + "," + lam.str() + ")";
                    });
        },
        c);
    r.checks.push_back(c);
    r.note =
        "binding: the first simple facet carries d1 dots and the double facet pi_{j,k}; the value is +1 when "
        "d1 + k = N-1 and -1 when d1 + j = N-2 (with d1 + d2 + j + k = 2N-3)";
    return r;
}

RelationReport theta_star_rel(int N, int jobs) {
    need(N, 4, "ThetaStar");
    RelationReport r;
    GrassRing g2(N, 2), g3(N, 3);
    RelationCheck c{"closed form against the residue formula"};
    const auto& b3 = g3.basis();
    parallel_rows(
        static_cast<int>(b3.size()), jobs,
        [&](int row, RelationCheck& part) {
            const auto& mu = b3[row];
            for (const auto& lam : g2.basis())
                for (int i = 0; i < N; ++i)
                    expect(part, theta123_closed(N, mu, lam, i), theta123_direct(N, mu, lam, i), [&] {
                        return "theta(" + mu.str() + "," + lam.str() + "," + std::to_string(i) + ")";
                    });
        },
        c);
    r.checks.push_back(c);
    return r;
}

// ---- neck cutting ----

RelationReport neck_rel(int N, int k, int jobs) {
    if (k == 3) need(N, 4, "CNstar");
    RelationReport r;
    GrassRing g(N, k);
    const auto& B = g.basis();
    auto cut_sum = [&](const SchurSum& alpha, const SchurSum& beta, const std::function<mpq_class(const SchurSum&)>& left) {
        mpq_class s = 0;
        for (const auto& lam : B) {
            mpq_class right = g.trace(g.mul(beta, g.dual(lam)));
            if (right != 0) s += left(g.mul(alpha, SchurSum(lam))) * right;
        }
        return s;
    };

    RelationCheck sph{"cut neck of a sphere"};
    for (const auto& a : B)
        for (const auto& b : B)
            expect(
                sph, cut_sum(SchurSum(a), SchurSum(b), [&](const SchurSum& d) { return g.trace(d); }),
                g.trace(g.mul(SchurSum(a), SchurSum(b))), [&] { return "sphere " + a.str() + " | " + b.str(); });
    r.checks.push_back(sph);

    // The neck sits on the facet of thickness k inside a theta foam.
    struct Other {
        std::string name;
        std::function<VertexFreeFoam(const SchurSum&)> make;
    };
    std::vector<Other> others;
    GrassRing g2(N, 2);
    if (k == 1) {
        for (int d = 0; d < N; ++d)
            for (const auto& mu : g2.basis())
                others.push_back({"x^" + std::to_string(d) + " " + mu.str(), [d, mu](const SchurSum& dec) {
                                      VertexFreeFoam f;
                                      int a = f.add_facet(1, dec), b = f.add_facet(1, dots(d)), c = f.add_facet(2, mu);
                                      f.add_circle112(a, b, c);
                                      return f;
                                  }});
    } else if (k == 2) {
        for (int d1 = 0; d1 < N; ++d1)
            for (int d2 = 0; d2 < N; ++d2)
                others.push_back({"x^" + std::to_string(d1) + " x^" + std::to_string(d2), [d1, d2](const SchurSum& dec) {
                                      VertexFreeFoam f;
                                      int a = f.add_facet(1, dots(d1)), b = f.add_facet(1, dots(d2)), c = f.add_facet(2, dec);
                                      f.add_circle112(a, b, c);
                                      return f;
                                  }});
    } else {
        for (int d = 0; d < N; ++d)
            for (const auto& mu : g2.basis())
                others.push_back({"x^" + std::to_string(d) + " " + mu.str(), [d, mu](const SchurSum& dec) {
                                      VertexFreeFoam f;
                                      int a = f.add_facet(1, dots(d)), b = f.add_facet(2, mu), c = f.add_facet(3, dec);
                                      f.add_circle123(a, b, c);
                                      return f;
                                  }});
    }
    RelationCheck th{"cut neck of a theta facet"};
    parallel_rows(
        static_cast<int>(others.size()), jobs,
        [&](int row, RelationCheck& part) {
            const auto& o = others[row];
            for (const auto& a : B)
                for (const auto& b : B) {
                    auto left = [&](const SchurSum& d) { return evaluate(o.make(d), N); };
                    expect(part, cut_sum(SchurSum(a), SchurSum(b), left), left(g.mul(SchurSum(a), SchurSum(b))),
                           [&] { return o.name + " with " + a.str() + " | " + b.str(); });
                }
        },
        th);
    r.checks.push_back(th);
    return r;
}

// ---- tubes ----

RelationReport rd1_rel(int N) {
    RelationReport r;
    RelationCheck c{"theta with undotted double disk"};
    for (int a = 0; a < 2 * N; ++a)
        for (int b = 0; b < 2 * N; ++b) {
            VertexFreeFoam f;
            int x = f.add_facet(1, dots(a)), y = f.add_facet(1, dots(b)), d = f.add_facet(2);
            f.add_circle112(x, y, d);
            expect(c, evaluate(f, N), s1(a, N) * s1(b + 1, N) - s1(a + 1, N) * s1(b, N),
                   [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b); });
        }
    r.checks.push_back(c);
    return r;
}

RelationReport rd2_rel(int N) {
    need(N, 4, "RD2");
    RelationReport r;
    RelationCheck c{"theta with undotted triple disk"};
    GrassRing g2(N, 2);
    auto s2 = [&](const SchurSum& d) { return sphere_eval(d, N); };
    for (int a = 0; a < N + 2; ++a)
        for (const auto& lam : g2.basis()) {
            SchurSum L(lam);
            mpq_class want = s1(a + 2, N) * s2(L) - s1(a + 1, N) * s2(L * pi2(1, 0)) + s1(a, N) * s2(L * pi2(1, 1));
            VertexFreeFoam f;
            int x = f.add_facet(1, dots(a)), d = f.add_facet(2, L), t = f.add_facet(3);
            f.add_circle123(x, d, t);
            expect(c, evaluate(f, N), want, [&] { return "a=" + std::to_string(a) + " " + lam.str(); });
        }
    r.checks.push_back(c);
    return r;
}

RelationReport fc_rel(int N) {
    RelationReport r;
    RelationCheck c{"double annulus between two membranes"};
    for (int a = 0; a < 2 * N; ++a)
        for (int b = 0; b < 2 * N; ++b) {
            VertexFreeFoam f;
            int t = f.add_facet(1, dots(a)), bt = f.add_facet(1, dots(b));
            int m1 = f.add_facet(1), m2 = f.add_facet(1), d = f.add_facet(2);
            f.add_circle112(t, m1, d);
            f.add_circle112(bt, m2, d);
            expect(c, evaluate(f, N), -s1(a, N) * s1(b, N),
                   [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b); });
        }
    r.checks.push_back(c);
    return r;
}

// A simple facet wrapped once around a digon tube, against the sum of its dotted cuts.
RelationReport c3_rel(int N) {
    RelationReport r;
    RelationCheck c{"digon tube against its dotted cuts"};
    GrassRing g2(N, 2);
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q)
            for (int e = 0; e < N; ++e)
                for (const auto& lam : g2.basis()) {
                    VertexFreeFoam f;
                    int mb = f.add_facet(1, dots(p)), mt = f.add_facet(1, dots(q));
                    int ef = f.add_facet(1, dots(e)), d = f.add_facet(2, lam);
                    f.add_circle112(mb, ef, d);
                    f.add_circle112(mt, ef, d);
                    mpq_class want = 0;
                    for (int a = 0; a <= N - 2; ++a)
                        for (int b = 0; a + b <= N - 2; ++b) {
                            int cc = N - 2 - a - b;
                            VertexFreeFoam g;
                            int m = g.add_facet(1, dots(p + q + b)), x = g.add_facet(1, dots(a + cc + e));
                            int dd = g.add_facet(2, lam);
                            g.add_circle112(m, x, dd);
                            want += evaluate(g, N);
                        }
                    expect(c, evaluate(f, N), want, [&] {
                        return "p=" + std::to_string(p) + " q=" + std::to_string(q) + " e=" + std::to_string(e) + " " +
                               lam.str();
                    });
                }
    r.checks.push_back(c);
    return r;
}

// ---- dots ----

RelationReport migration_rel(int N, int jobs) {
    RelationReport r;
    GrassRing g2(N, 2);
    const Facet f112[] = {Facet::Simple1, Facet::Simple2, Facet::Double};
    const Facet f123[] = {Facet::Simple1, Facet::Double, Facet::Triple};
    const MigrationDir dirs[] = {MigrationDir::Inward, MigrationDir::Outward};
    auto run = [&](const FoamAtom& a, const Facet* where, int nw, RelationCheck& c) {
        for (int w = 0; w < nw; ++w)
            for (auto dir : dirs)
                for (int m = 1; m <= 3; ++m) {
                    Migration mg;
                    try {
                        mg = migrate(a, where[w], m, dir);
                    } catch (const std::domain_error&) {
                        continue;
                    }
                    expect(c, eval(mg.after, N), eval(mg.before, N), [&] {
                        return describe(a) + " facet " + std::to_string(w) + " e_" + std::to_string(m) +
                               (dir == MigrationDir::Inward ? " inward" : " outward");
                    });
                }
    };
    RelationCheck c1{"(1,1,2) circle"};
    parallel_rows(
        N, jobs,
        [&](int d1, RelationCheck& part) {
            for (int d2 = 0; d2 < N; ++d2)
                for (const auto& lam : g2.basis()) run(Theta112{d1, d2, lam}, f112, 3, part);
        },
        c1);
    r.checks.push_back(c1);
    if (N >= 4) {
        GrassRing g3(N, 3);
        const auto& b3 = g3.basis();
        RelationCheck c2{"(1,2,3) circle"};
        parallel_rows(
            static_cast<int>(b3.size()), jobs,
            [&](int row, RelationCheck& part) {
                for (const auto& lam : g2.basis())
                    for (int i = 0; i < N; ++i) run(Theta123{b3[row], lam, i, 1}, f123, 3, part);
            },
            c2);
        r.checks.push_back(c2);
    }
    return r;
}

RelationReport conversion_rel(int N) {
    RelationReport r;
    // The Jacobian ideal of the potential is generated by h_N, ..., h_{N-k+1}, so the
    // local algebra of a k-facet is the truncated Schur ring.
    RelationCheck jac{"potential derivatives are multiples of h_{N+1-i}"};
    for (int k = 1; k <= 3 && k < N; ++k) {
        Potential W = potential(N, k);
        RingPtr xr = schur_ring(k);
        std::vector<MultiPoly> images;
        for (int i = 1; i <= k; ++i) {
            std::vector<int> e(k, 0);
            for (int j = 0; j < i; ++j) e[j] = 1;
            images.push_back(schur(Partition(e), k));
        }
        for (int i = 1; i <= k; ++i) {
            MultiPoly d = substitute(partial_derivative(W.poly, i - 1), images);
            std::vector<int> h(k, 0);
            h[0] = N + 1 - i;
            mpq_class sign = (i % 2) ? 1 : -1;
            MultiPoly want = schur(Partition(h), k).scale(sign * (N + 1));
            ++jac.checked;
            if (!(d == want) && jac.failures++ == 0)
                jac.counterexample = "k=" + std::to_string(k) + " i=" + std::to_string(i) + ": " + d.str();
        }
    }
    r.checks.push_back(jac);

    RelationCheck vanish{"classes outside the box vanish in closed foams"};
    GrassRing g2(N, 2);
    for (int a = N; a < N + 3; ++a)
        for (int d = 0; d < N; ++d)
            for (const auto& lam : g2.basis()) {
                VertexFreeFoam f;
                int x = f.add_facet(1, dots(a)), y = f.add_facet(1, dots(d)), z = f.add_facet(2, lam);
                f.add_circle112(x, y, z);
                expect(vanish, evaluate(f, N), 0, [&] { return "simple x^" + std::to_string(a); });
            }
    for (int i = N - 1; i < N + 2; ++i)
        for (int j = 0; j <= i && j < N; ++j)
            for (int d1 = 0; d1 < N; ++d1)
                for (int d2 = 0; d2 < N; ++d2) {
                    VertexFreeFoam f;
                    int x = f.add_facet(1, dots(d1)), y = f.add_facet(1, dots(d2)), z = f.add_facet(2, pi2(i, j));
                    f.add_circle112(x, y, z);
                    expect(vanish, evaluate(f, N), 0, [&] { return "double " + Partition{i, j}.str(); });
                }
    if (N >= 4) {
        for (int p = N - 2; p < N; ++p)
            for (int d = 0; d < N; ++d)
                for (const auto& lam : g2.basis()) {
                    VertexFreeFoam f;
                    int x = f.add_facet(1, dots(d)), y = f.add_facet(2, lam), z = f.add_facet(3, Partition{p, 0, 0});
                    f.add_circle123(x, y, z);
                    expect(vanish, evaluate(f, N), 0, [&] { return "triple (" + std::to_string(p) + ",0,0)"; });
                }
    }
    r.checks.push_back(vanish);
    return r;
}

// ---- digon removals ----

// Two (1,1,2) bubbles on a double facet: bubble b has simple sheets dot[b][0], dot[b][1].
struct Dr1Index {
    int i, j, k, m;
    std::string str() const {
        return "u(" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(k) + "," +
               std::to_string(m) + ")";
    }
};

std::vector<Dr1Index> dr1_indices(int N) {
    std::vector<Dr1Index> v;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k <= N - 2; ++k)
                for (int m = 0; m <= k; ++m) v.push_back({i, j, k, m});
    return v;
}

// Closure of u_I with the reflected dual u*_J: the dual's first digon lands on the
// second bubble and vice versa; the double facets merge into one.
struct Dr1Closure {
    int b0[2], b1[2];
    SchurSum dbl;
};

Dr1Closure dr1_close(const Dr1Index& I, const Dr1Index& J, int N) {
    int a = 1 - J.j, b = 1 - J.i, c = N - 2 - J.m, d = N - 2 - J.k;
    return {{I.i, b}, {a, I.j}, pi2(I.k, I.m) * pi2(c, d)};
}

mpq_class dr1_lhs(const Dr1Closure& z, int N) {
    VertexFreeFoam f;
    int D = f.add_facet(2, z.dbl);
    int x0 = f.add_facet(1, dots(z.b0[0])), x1 = f.add_facet(1, dots(z.b0[1]));
    int y0 = f.add_facet(1, dots(z.b1[0])), y1 = f.add_facet(1, dots(z.b1[1]));
    f.add_circle112(x0, x1, D);
    f.add_circle112(y1, y0, D);
    return evaluate(f, N);
}

// The first bubble is cut by the relation: each half is capped off, with one extra dot
// on the second sheet of the lower half minus one on the first sheet of the upper half.
mpq_class dr1_rhs(const Dr1Closure& z, int N) {
    mpq_class total = 0;
    const int where[2][2] = {{0, 1}, {1, 0}};
    for (int t = 0; t < 2; ++t) {
        int d[2][2] = {{z.b0[0], 0}, {0, z.b0[1]}};
        d[where[t][0]][where[t][1]] += 1;
        VertexFreeFoam f;
        int D = f.add_facet(2, z.dbl);
        int h00 = f.add_facet(1, dots(d[0][0])), h01 = f.add_facet(1, dots(d[0][1]));
        int h10 = f.add_facet(1, dots(d[1][0])), h11 = f.add_facet(1, dots(d[1][1]));
        int y0 = f.add_facet(1, dots(z.b1[0])), y1 = f.add_facet(1, dots(z.b1[1]));
        f.add_circle112(h00, h01, D);
        f.add_circle112(h10, h11, D);
        f.add_circle112(y1, y0, D);
        total += (t == 0 ? 1 : -1) * evaluate(f, N);
    }
    return total;
}

RelationReport dr1_rel(int N, int jobs) {
    need(N, 2, "DR1");
    RelationReport r;
    auto idx = dr1_indices(N);
    const int n = static_cast<int>(idx.size());
    for (const auto& I : idx) r.labels.push_back(I.str());
    r.matrix = parallel_matrix(n, jobs, [&](int a, int b) { return dr1_lhs(dr1_close(idx[a], idx[b], N), N); });
    RelationCheck rel{"relation paired with all basis and dual elements"};
    parallel_rows(
        n, jobs,
        [&](int a, RelationCheck& part) {
            for (int b = 0; b < n; ++b) {
                auto z = dr1_close(idx[a], idx[b], N);
                expect(part, dr1_rhs(z, N), dr1_lhs(z, N), [&] { return idx[a].str() + " | " + idx[b].str() + "*"; });
            }
        },
        rel);
    r.checks.push_back(rel);
    r.checks.push_back(identity_check(r.matrix, r.labels));
    return r;
}

struct Dr2Index {
    int i, k, m;
    std::string str() const {
        return "u(" + std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(m) + ")";
    }
};

std::vector<Dr2Index> dr2_indices(int N) {
    std::vector<Dr2Index> v;
    for (int i = 0; i <= N - 2; ++i)
        for (int k = 0; k < N; ++k)
            for (int m = 0; m <= N - 2; ++m) v.push_back({i, k, m});
    return v;
}

// u_{i,k,m}: the first digon carries i dots on its simple sheet, the main sheet k,
// the second digon pi_{m,0} on its double sheet. u* = -u_{N-2-m, N-1-k, N-2-i}.
mpq_class dr2_lhs(const Dr2Index& I, const Dr2Index& J, int N) {
    VertexFreeFoam f;
    int M = f.add_facet(1, dots(I.k + N - 1 - J.k));
    int e1 = f.add_facet(1, dots(I.i)), d1 = f.add_facet(2, pi2(N - 2 - J.i, 0));
    int e2 = f.add_facet(1, dots(N - 2 - J.m)), d2 = f.add_facet(2, pi2(I.m, 0));
    f.add_circle112(M, e1, d1);
    f.add_circle112(e2, M, d2);
    return -evaluate(f, N);
}

// The first digon is removed: sum over a+b+c = N-2 of dots on the lower cap, the
// main sheet and the upper cap.
mpq_class dr2_rhs(const Dr2Index& I, const Dr2Index& J, int N) {
    const int s0 = N - 2 - J.m, s1 = N - 1 - J.k, s2 = N - 2 - J.i;
    mpq_class total = 0;
    for (int a = 0; a <= N - 2; ++a)
        for (int b = 0; a + b <= N - 2; ++b) {
            int c = N - 2 - a - b;
            VertexFreeFoam f;
            int M = f.add_facet(1, dots(I.k + s1 + b));
            int lo = f.add_facet(1, dots(I.i + a)), lod = f.add_facet(2);
            int hi = f.add_facet(1, dots(c)), hid = f.add_facet(2, pi2(s2, 0));
            int oe = f.add_facet(1, dots(s0)), od = f.add_facet(2, pi2(I.m, 0));
            f.add_circle112(M, lo, lod);
            f.add_circle112(M, hi, hid);
            f.add_circle112(oe, M, od);
            total -= evaluate(f, N);
        }
    return total;
}

RelationReport dr2_rel(int N, int jobs) {
    need(N, 3, "DR2");
    RelationReport r;
    auto idx = dr2_indices(N);
    const int n = static_cast<int>(idx.size());
    for (const auto& I : idx) r.labels.push_back(I.str());
    r.matrix = parallel_matrix(n, jobs, [&](int a, int b) { return dr2_lhs(idx[a], idx[b], N); });
    RelationCheck rel{"relation paired with all basis and dual elements"};
    parallel_rows(
        n, jobs,
        [&](int a, RelationCheck& part) {
            for (int b = 0; b < n; ++b)
                expect(part, dr2_rhs(idx[a], idx[b], N), dr2_lhs(idx[a], idx[b], N),
                       [&] { return idx[a].str() + " | " + idx[b].str() + "*"; });
        },
        rel);
    r.checks.push_back(rel);
    r.checks.push_back(identity_check(r.matrix, r.labels));
    return r;
}

// ---- square removal ----

RelationReport sqr1_rel(int N, int jobs) {
    need(N, 3, "SqR1");
    using namespace detail;
    RelationReport r;
    const BoundaryWeb g = square_closure_web();
    // reflection through the plane of the web composed with the left-right mirror of each square
    const SquareSymmetry sym = square_symmetry(false, true);
    auto basis = square_basis(N);
    const int n = static_cast<int>(basis.size());
    for (const auto& b : basis) r.labels.push_back(b.name);
    r.matrix = parallel_matrix(n, jobs, [&](int a, int b) {
        return pairing(g, basis[a].element, basis[b].dual, sym.vmap, sym.emap, N);
    });

    // Every shape with every dot placement spans the closure space.
    using E = SquareShape::End;
    std::vector<HalfFoam> family;
    for (E a : {E::Vertical, E::Horizontal})
        for (E b : {E::Vertical, E::Horizontal}) {
            int n0 = a == E::Horizontal ? N : 1, n1 = b == E::Horizontal ? N : 1, no = a == b ? N : 1;
            for (int s0 = 0; s0 < n0; ++s0)
                for (int s1 = 0; s1 < n1; ++s1)
                    for (int o0 = 0; o0 < N; ++o0)
                        for (int o1 = 0; o1 < no; ++o1) {
                            SquareShape s;
                            s.ends = {a, b};
                            s.square_dots = {s0, s1};
                            s.outer = {o0, o1};
                            family.push_back(square_half(s));
                        }
        }
    const HalfSum lhs{{1, square_identity()}};
    const HalfSum rhs = square_relation_rhs(N);
    RelationCheck rel{"relation paired with every dotted closure"};
    parallel_rows(
        static_cast<int>(family.size()), jobs,
        [&](int row, RelationCheck& part) {
            const HalfSum h{{1, family[row]}};
            expect(part, pairing(g, rhs, h, sym.vmap, sym.emap, N), pairing(g, lhs, h, sym.vmap, sym.emap, N),
                   [&] { return "closure " + std::to_string(row); });
        },
        rel);
    r.checks.push_back(rel);
    r.checks.push_back(identity_check(r.matrix, r.labels));
    return r;
}

}  // namespace

RelationReport verify_relation(const std::string& id, int N, int jobs) {
    const auto& ids = relation_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw std::domain_error("unknown relation: " + id);
    need(N, 2, "every relation");
    RelationReport r;
    if (id == "S1")
        r = sphere_rel(N, 1);
    else if (id == "S2")
        r = sphere_rel(N, 2);
    else if (id == "Sstar") {
        need(N, 4, "Sstar");
        r = sphere_rel(N, 3);
    } else if (id == "Theta")
        r = theta_rel(N, jobs);
    else if (id == "ThetaStar")
        r = theta_star_rel(N, jobs);
    else if (id == "CN1")
        r = neck_rel(N, 1, jobs);
    else if (id == "CN2")
        r = neck_rel(N, 2, jobs);
    else if (id == "CNstar")
        r = neck_rel(N, 3, jobs);
    else if (id == "RD1")
        r = rd1_rel(N);
    else if (id == "RD2")
        r = rd2_rel(N);
    else if (id == "FC")
        r = fc_rel(N);
    else if (id == "3C")
        r = c3_rel(N);
    else if (id == "DotMigration")
        r = migration_rel(N, jobs);
    else if (id == "DotConversion")
        r = conversion_rel(N);
    else if (id == "DR1")
        r = dr1_rel(N, jobs);
    else if (id == "DR2")
        r = dr2_rel(N, jobs);
    else
        r = sqr1_rel(N, jobs);
    r.id = id;
    r.N = N;
    r.pass = r.failures() == 0;
    return r;
}

}  // namespace webfoam
