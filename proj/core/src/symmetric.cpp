#include "webfoam/symmetric.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace webfoam {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::valid() const {
    if (parts.empty() || parts.size() > 3) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

Partition zero_partition(int k) { return Partition(std::vector<int>(k, 0)); }

Partition parse_partition(const std::string& s) {
    std::string body;
    for (char c : s)
        if (c != '(' && c != ')' && c != ' ') body += c;
    std::vector<int> v;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::domain_error("bad partition: " + s);
        v.push_back(std::stoi(tok));
    }
    Partition p(v);
    if (!p.valid()) throw std::domain_error("bad partition: " + s);
    return p;
}

SchurSum::SchurSum(const Partition& p, const mpq_class& c) : k_(p.length()) { add(p, c); }

mpq_class SchurSum::coeff(const Partition& p) const {
    auto it = t_.find(p);
    return it == t_.end() ? mpq_class(0) : it->second;
}

void SchurSum::add(const Partition& p, const mpq_class& c) {
    if (k_ == 0) k_ = p.length();
    if (p.length() != k_) throw std::domain_error("SchurSum: partition length mismatch");
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(p, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

SchurSum& SchurSum::operator+=(const SchurSum& o) {
    for (const auto& [p, c] : o.t_) add(p, c);
    if (k_ == 0) k_ = o.k_;
    return *this;
}

SchurSum& SchurSum::operator-=(const SchurSum& o) {
    for (const auto& [p, c] : o.t_) add(p, -c);
    if (k_ == 0) k_ = o.k_;
    return *this;
}

SchurSum SchurSum::scale(const mpq_class& c) const {
    SchurSum r(k_);
    if (c == 0) return r;
    for (const auto& [p, v] : t_) r.add(p, v * c);
    return r;
}

std::string SchurSum::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : t_) {
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1) os << mag.get_str() << "*";
        os << "pi" << p.str();
    }
    return os.str();
}

SchurSum operator+(SchurSum a, const SchurSum& b) { return a += b; }
SchurSum operator-(SchurSum a, const SchurSum& b) { return a -= b; }

SchurSum operator*(const SchurSum& a, const SchurSum& b) {
    const int k = a.k() ? a.k() : b.k();
    if (a.k() && b.k() && a.k() != b.k()) throw std::domain_error("SchurSum product: k mismatch");
    SchurSum out(k);
    for (const auto& [p, c] : a.terms()) {
        for (const auto& [r, d] : b.terms()) {
            SchurSum prod(k);
            if (k == 1)
                prod.add(Partition{p[0] + r[0]}, 1);
            else if (k == 2)
                prod = mult2(p, r);
            else
                prod = mult3(p, r);
            for (const auto& [s, e] : prod.terms()) out.add(s, c * d * e);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SchurSum& s) { return os << s.str(); }

RingPtr schur_ring(int k) {
    static const RingPtr rings[3] = {
        make_ring({"x1"}), make_ring({"x1", "x2"}), make_ring({"x1", "x2", "x3"})};
    if (k < 1 || k > 3) throw std::domain_error("schur_ring: k must be 1..3");
    return rings[k - 1];
}

namespace {

std::mutex schur_mu;
std::map<Partition, MultiPoly> schur_cache;
std::mutex mult3_mu;
std::map<std::pair<Partition, Partition>, SchurSum> mult3_cache;

MultiPoly bialternant(const Partition& lambda, int k) {
    RingPtr r = schur_ring(k);
    std::vector<std::vector<MultiPoly>> num(k), van(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            Exponents e(k, 0), f(k, 0);
            e[i] = lambda[j] + k - 1 - j;
            f[i] = k - 1 - j;
            num[i].push_back(MultiPoly::monomial(r, e));
            van[i].push_back(MultiPoly::monomial(r, f));
        }
    }
    return exact_divide(determinant(num), determinant(van));
}

}  // namespace

MultiPoly schur(const Partition& lambda, int k) {
    if (lambda.length() != k || !lambda.valid()) throw std::domain_error("schur: partition/arity mismatch");
    {
        std::lock_guard lk(schur_mu);
        auto it = schur_cache.find(lambda);
        if (it != schur_cache.end()) return it->second;
    }
    MultiPoly p = bialternant(lambda, k);
    std::lock_guard lk(schur_mu);
    return schur_cache.emplace(lambda, std::move(p)).first->second;
}

MultiPoly to_poly(const SchurSum& s) {
    MultiPoly out(schur_ring(s.k() ? s.k() : 1));
    for (const auto& [p, c] : s.terms()) out += schur(p, s.k()).scale(c);
    return out;
}

SchurSum to_schur_basis(const MultiPoly& f, int k) {
    if (f.ring() && static_cast<int>(f.ring()->size()) != k)
        throw std::domain_error("to_schur_basis: variable count mismatch");
    SchurSum out(k);
    MultiPoly rem = f;
    while (!rem.is_zero()) {
        auto [lead, c] = *rem.terms().rbegin();
        Partition p(lead);
        // the lex-leading monomial of a symmetric polynomial is weakly decreasing
        if (!p.valid()) throw std::domain_error("to_schur_basis: input not symmetric");
        out.add(p, c);
        rem -= schur(p, k).scale(c);
    }
    return out;
}

SchurSum mult2(const Partition& a, const Partition& b) {
    if (a.length() != 2 || b.length() != 2) throw std::domain_error("mult2: length-2 partitions required");
    // pi_{i,j} pi_{a,b}: x + y = i+j+a+b, a+i >= x >= max(a+j, b+i)
    const int i = a[0], j = a[1], A = b[0], B = b[1];
    SchurSum out(2);
    const int total = i + j + A + B;
    for (int x = std::max(A + j, B + i); x <= A + i; ++x) out.add(Partition{x, total - x}, 1);
    return out;
}

SchurSum mult3(const Partition& a, const Partition& b) {
    if (a.length() != 3 || b.length() != 3) throw std::domain_error("mult3: length-3 partitions required");
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    {
        std::lock_guard lk(mult3_mu);
        auto it = mult3_cache.find(key);
        if (it != mult3_cache.end()) return it->second;
    }
    SchurSum r = to_schur_basis(schur(a, 3) * schur(b, 3), 3);
    std::lock_guard lk(mult3_mu);
    return mult3_cache.emplace(key, std::move(r)).first->second;
}

SchurSum mult_elementary(const Partition& lambda, int m) {
    const int k = lambda.length();
    if (m < 0 || m > k) throw std::domain_error("mult_elementary: 0 <= m <= k");
    SchurSum out(k);
    for (int mask = 0; mask < (1 << k); ++mask) {
        if (__builtin_popcount(mask) != m) continue;
        std::vector<int> v = lambda.parts;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) ++v[i];
        Partition p(v);
        if (p.valid()) out.add(p, 1);
    }
    return out;
}

std::vector<std::pair<Partition, int>> decompose3(const Partition& lambda) {
    if (lambda.length() != 3 || !lambda.valid()) throw std::domain_error("decompose3: length-3 partition required");
    const int i = lambda[0], j = lambda[1], k = lambda[2];
    std::vector<std::pair<Partition, int>> out;
    for (int a = j; a <= i; ++a)
        for (int b = k; b <= j; ++b) out.push_back({Partition{a, b}, i + j + k - a - b});
    return out;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::vector<std::string> elementary_names(int k) {
    switch (k) {
        case 1: return {"x"};
        case 2: return {"s", "t"};
        case 3: return {"p", "q", "r"};
        default: throw std::domain_error("facet thickness must be 1..3");
    }
}

Potential potential(int N, int k) {
    if (N < 2) throw std::domain_error("potential: N >= 2");
    std::vector<std::string> names = elementary_names(k);
    std::vector<int> w;
    for (int j = 1; j <= k; ++j) w.push_back(2 * j);
    RingPtr r = make_ring(names, w);

    auto e = [&](int i) { return i <= k ? MultiPoly::var(r, i - 1) : MultiPoly(r); };
    // Newton: p_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
    std::vector<MultiPoly> p(N + 2, MultiPoly(r));
    for (int m = 1; m <= N + 1; ++m) {
        MultiPoly acc(r);
        for (int i = 1; i < m && i <= k; ++i) {
            MultiPoly t = e(i) * p[m - i];
            acc += (i % 2 == 1) ? t : -t;
        }
        if (m <= k) acc += e(m).scale(mpq_class((m % 2 == 1) ? m : -m));
        p[m] = acc;
    }

    Potential W;
    W.N = N;
    W.k = k;
    W.poly = p[N + 1];
    if (k == 2) {
        for (const auto& [ex, c] : W.poly.terms()) W.coeffs[{ex[0], ex[1]}] = c;
        for (int j = 1; 2 * j <= N + 1; ++j) {
            mpq_class expect(binomial(N - j, j - 1) * (N + 1), mpz_class(j));
            expect.canonicalize();
            if (j % 2) expect = -expect;
            mpq_class got = W.coeffs.count({N + 1 - 2 * j, j}) ? W.coeffs[{N + 1 - 2 * j, j}] : mpq_class(0);
            if (got != expect) throw std::logic_error("potential: coefficient formula violated");
        }
    }
    return W;
}

}  // namespace webfoam
