#include "asqf/fqpoly.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace asqf::fqp {

int deg(const Poly& a) { return int(a.size()) - 1; }

void normalize(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_zero(const Poly& a) { return a.empty(); }

uint16_t lead(const Poly& a) { return a.empty() ? uint16_t(0) : a.back(); }

Poly add(const SmallField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint16_t x = i < a.size() ? a[i] : 0;
        uint16_t y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    normalize(r);
    return r;
}

Poly neg(const SmallField& F, const Poly& a) {
    Poly r(a);
    for (auto& c : r) c = F.neg(c);
    return r;
}

Poly sub(const SmallField& F, const Poly& a, const Poly& b) { return add(F, a, neg(F, b)); }

Poly scale(const SmallField& F, const Poly& a, uint16_t c) {
    if (c == 0) return {};
    Poly r(a);
    for (auto& x : r) x = F.mul(x, c);
    return r;
}

Poly mul(const SmallField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
    }
    normalize(r);
    return r;
}

std::pair<Poly, Poly> divmod(const SmallField& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.size() < b.size()) return {Poly{}, a};
    Poly rem(a);
    Poly quo(a.size() - b.size() + 1, 0);
    uint16_t lb_inv = F.inv(b.back());
    for (int i = int(rem.size()) - 1; i >= int(b.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        uint16_t c = F.mul(rem[i], lb_inv);
        size_t shift = i - (b.size() - 1);
        quo[shift] = c;
        for (size_t j = 0; j < b.size(); ++j)
            rem[shift + j] = F.sub(rem[shift + j], F.mul(c, b[j]));
    }
    normalize(quo);
    normalize(rem);
    return {quo, rem};
}

Poly mod(const SmallField& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly divexact(const SmallField& F, const Poly& a, const Poly& b) {
    auto [q, r] = divmod(F, a, b);
    if (!r.empty())
        throw Error(ErrorKind::InternalCheckFailed, "divexact: division left a remainder");
    return q;
}

Poly make_monic(const SmallField& F, const Poly& a) {
    if (a.empty()) return a;
    return scale(F, a, F.inv(a.back()));
}

Poly gcd(const SmallField& F, const Poly& a, const Poly& b) {
    Poly x(a), y(b);
    normalize(x);
    normalize(y);
    if (x.empty() && y.empty()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
    while (!y.empty()) {
        Poly r = mod(F, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(F, x);
}

uint16_t eval(const SmallField& F, const Poly& a, uint16_t x) {
    uint16_t r = 0;
    for (int i = int(a.size()) - 1; i >= 0; --i) r = F.add(F.mul(r, x), a[i]);
    return r;
}

Poly derivative(const SmallField& F, const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1, 0);
    for (size_t i = 1; i < a.size(); ++i) {
        uint16_t k = uint16_t(i % F.p);
        uint16_t c = 0;
        for (uint16_t t = 0; t < k; ++t) c = F.add(c, a[i]);
        r[i - 1] = c;
    }
    normalize(r);
    return r;
}

Poly mulmod(const SmallField& F, const Poly& a, const Poly& b, const Poly& m) {
    return mod(F, mul(F, a, b), m);
}

Poly powmod(const SmallField& F, const Poly& base, uint64_t e, const Poly& m) {
    Poly r{1};
    Poly b = mod(F, base, m);
    while (e > 0) {
        if (e & 1) r = mulmod(F, r, b, m);
        b = mulmod(F, b, b, m);
        e >>= 1;
    }
    return r;
}

Poly invmod(const SmallField& F, const Poly& a, const Poly& m) {
    // Extended Euclid: maintain r = s * a (mod m) on the first track.
    Poly r0 = mod(F, a, m), r1 = m;
    Poly s0{1}, s1{};
    while (!r1.empty()) {
        auto [q, r2] = divmod(F, r0, r1);
        Poly s2 = sub(F, s0, mul(F, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (deg(r0) != 0)
        throw Error(ErrorKind::DivisionByZero, "invmod: element not invertible modulo m");
    return mod(F, scale(F, s0, F.inv(r0[0])), m);
}

Poly xn_minus_1(const SmallField& F, uint32_t n) {
    Poly r(n + 1, 0);
    r[0] = F.neg(1);
    r[n] = 1;
    return r;
}

namespace {

// x^(q^k) mod m, by iterating the q-power map k times.
Poly frob_power_x(const SmallField& F, uint32_t k, const Poly& m) {
    Poly r{0, 1};
    r = mod(F, r, m);
    for (uint32_t i = 0; i < k; ++i) r = powmod(F, r, F.q, m);
    return r;
}

std::vector<uint32_t> prime_divisors(uint32_t n) {
    std::vector<uint32_t> ps;
    for (uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

bool is_irreducible(const SmallField& F, const Poly& a) {
    int d = deg(a);
    if (d < 1) return false;
    if (d == 1) return true;
    Poly f = make_monic(F, a);
    Poly x{0, 1};
    if (frob_power_x(F, uint32_t(d), f) != mod(F, x, f)) return false;
    for (uint32_t t : prime_divisors(uint32_t(d))) {
        Poly h = sub(F, frob_power_x(F, uint32_t(d) / t, f), x);
        if (deg(gcd(F, h, f)) != 0) return false;
    }
    return true;
}

Poly lex_smallest_irreducible(const SmallField& F, uint32_t d) {
    if (d == 0) throw Error(ErrorKind::DegreeMismatch, "irreducible of degree zero requested");
    // Odometer over (c_0, ..., c_{d-1}) in lexicographic order, c_0 most
    // significant: the rightmost digit is incremented first.
    std::vector<uint16_t> c(d, 0);
    for (;;) {
        Poly f(c.begin(), c.end());
        f.resize(d + 1, 0);
        f[d] = 1;
        normalize(f);
        if (is_irreducible(F, f)) return f;
        int pos = int(d) - 1;
        while (pos >= 0) {
            if (++c[pos] < F.q) break;
            c[pos] = 0;
            --pos;
        }
        if (pos < 0)
            throw Error(ErrorKind::InternalCheckFailed, "no irreducible of requested degree found");
    }
}

namespace {

// Squarefree decomposition in characteristic p: returns (b_i, i) pairs with
// a = prod b_i^i, each b_i squarefree (b_i may be 1, those are dropped).
std::vector<std::pair<Poly, int>> squarefree_parts(const SmallField& F, const Poly& a) {
    std::vector<std::pair<Poly, int>> out;
    Poly f = make_monic(F, a);
    if (deg(f) <= 0) return out;

    Poly d = derivative(F, f);
    if (is_zero(d)) {
        // f = g(x^p): take the p-th root coefficientwise and recurse.
        Poly g((deg(f) / F.p) + 1, 0);
        for (size_t i = 0; i < g.size(); ++i) {
            uint16_t ci = f[i * F.p];
            // p-th root in F_q: c^(q/p), since c^q = c.
            g[i] = F.pow(ci, F.q / F.p);
        }
        normalize(g);
        for (auto& [b, m] : squarefree_parts(F, g)) out.emplace_back(b, m * int(F.p));
        return out;
    }

    Poly c = gcd(F, f, d);
    Poly w = divexact(F, f, c);
    int i = 1;
    while (deg(w) > 0) {
        Poly y = gcd(F, w, c);
        Poly b = divexact(F, w, y);
        if (deg(b) > 0) out.emplace_back(make_monic(F, b), i);
        w = std::move(y);
        c = divexact(F, c, w);
        ++i;
    }
    if (deg(c) > 0) {
        // The leftover c is a p-th power; its zero-derivative recursion
        // already multiplies the multiplicities by p.
        for (auto& pr : squarefree_parts(F, c)) out.push_back(pr);
    }
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus, q odd) of a squarefree monic f
// whose irreducible factors all have degree d.
void edf(const SmallField& F, const Poly& f, uint32_t d, std::mt19937_64& rng,
         std::vector<Poly>& out) {
    if (deg(f) == int(d)) {
        out.push_back(f);
        return;
    }
    // Random poly of degree < deg f; w = r^((q^d - 1)/2) - 1 splits f.
    if (double(d) * std::log2(double(F.q)) >= 63.0)
        throw Error(ErrorKind::BudgetExceeded, "edf: factor degree too large for exact splitting");
    uint64_t qd = 1;
    for (uint32_t i = 0; i < d; ++i) qd *= F.q;
    for (;;) {
        Poly r(size_t(deg(f)), 0);
        for (auto& c : r) c = uint16_t(rng() % F.q);
        normalize(r);
        if (deg(r) < 1) continue;
        Poly g = gcd(F, r, f);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            edf(F, g, d, rng, out);
            edf(F, divexact(F, f, g), d, rng, out);
            return;
        }
        Poly w = powmod(F, r, (qd - 1) / 2, f);
        w = sub(F, w, Poly{1});
        g = gcd(F, w, f);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            edf(F, g, d, rng, out);
            edf(F, divexact(F, f, g), d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<Poly, int>> factorize(const SmallField& F, const Poly& a, uint64_t seed) {
    if (deg(a) < 1)
        throw Error(ErrorKind::DegreeMismatch, "factorize: polynomial must have degree >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, int>> factors;

    for (auto& [part, mult] : squarefree_parts(F, a)) {
        // Distinct-degree split of the squarefree part.
        Poly f = part;
        Poly xq = frob_power_x(F, 1, f);
        Poly h = xq;
        uint32_t d = 1;
        while (deg(f) >= int(2 * d)) {
            Poly diff = sub(F, h, Poly{0, 1});
            Poly g = gcd(F, diff, f);
            if (deg(g) > 0) {
                std::vector<Poly> irr;
                edf(F, g, d, rng, irr);
                for (auto& pfac : irr) factors.emplace_back(pfac, mult);
                f = divexact(F, f, g);
            }
            ++d;
            if (deg(f) == 0) break;
            h = powmod(F, h, F.q, f);
        }
        if (deg(f) > 0) factors.emplace_back(make_monic(F, f), mult);
    }

    std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) {
        if (deg(x.first) != deg(y.first)) return deg(x.first) < deg(y.first);
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    });

    // The factorization must reproduce the input up to the leading unit.
    Poly check{1};
    for (auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) check = mul(F, check, f);
    if (check != make_monic(F, a))
        throw Error(ErrorKind::InternalCheckFailed, "factorize: product of factors != input");
    return factors;
}

uint16_t resultant(const SmallField& F, const Poly& a, const Poly& b) {
    Poly x(a), y(b);
    normalize(x);
    normalize(y);
    if (x.empty() || y.empty()) return 0;
    uint16_t res = 1;
    int sign = 1;
    while (deg(y) > 0) {
        Poly r = mod(F, x, y);
        if (r.empty()) return 0;
        // res(x, y) = lc(y)^(deg x - deg r) * (-1)^(deg x * deg y) * res(y, r)
        res = F.mul(res, F.pow(lead(y), uint64_t(deg(x) - deg(r))));
        if ((deg(x) & 1) && (deg(y) & 1)) sign = -sign;
        x = std::move(y);
        y = std::move(r);
    }
    // y is a nonzero constant: res(x, c) = c^(deg x)
    res = F.mul(res, F.pow(y[0], uint64_t(deg(x))));
    return sign == 1 ? res : F.neg(res);
}

uint16_t norm_mod(const SmallField& F, const Poly& a, const Poly& m) {
    int d = deg(m);
    if (d < 1) throw Error(ErrorKind::DegreeMismatch, "norm_mod: modulus must have degree >= 1");
    Poly u = mod(F, a, m);
    if (u.empty()) return 0;
    Poly acc = u;
    Poly v = u;
    for (int i = 1; i < d; ++i) {
        v = powmod(F, v, F.q, m);
        acc = mulmod(F, acc, v, m);
    }
    if (deg(acc) > 0)
        throw Error(ErrorKind::InternalCheckFailed, "norm_mod: norm did not land in the base field");
    return acc.empty() ? uint16_t(0) : acc[0];
}

} // namespace asqf::fqp
