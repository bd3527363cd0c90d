#ifndef WDR_FP_POLY_HPP
#define WDR_FP_POLY_HPP

/* Dense univariate polynomials over F_p, coefficients low degree first,
   generic over a word-sized and a multiprecision field. */

#include <algorithm>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "wdr/arith.hpp"
#include "wdr/error.hpp"

namespace wdr::fp {

struct SmallField {
    using T = uint64_t;
    uint64_t p;

    T zero() const { return 0; }
    T one() const { return 1; }
    T add(T a, T b) const { return addmod(a, b, p); }
    T sub(T a, T b) const { return submod(a, b, p); }
    T neg(T a) const { return a ? p - a : 0; }
    T mul(T a, T b) const { return mulmod(a, b, p); }
    T inv(T a) const { return invmod(a, p); }
    T from(const Integer &a) const { return reduce_mod(a, p); }
    T from_u(uint64_t a) const { return a % p; }
    Integer to_integer(T a) const { return Integer(static_cast<unsigned long>(a)); }
    Integer order() const { return Integer(static_cast<unsigned long>(p)); }
    T random(std::mt19937_64 &rng) const { return rng() % p; }
    bool is_two() const { return p == 2; }
};

struct BigField {
    using T = Integer;
    Integer p;

    T zero() const { return 0; }
    T one() const { return 1; }
    T add(const T &a, const T &b) const
    {
        T s = a + b;
        if (s >= p)
            s -= p;
        return s;
    }
    T sub(const T &a, const T &b) const
    {
        T s = a - b;
        if (s < 0)
            s += p;
        return s;
    }
    T neg(const T &a) const { return a == 0 ? T(0) : T(p - a); }
    T mul(const T &a, const T &b) const
    {
        T r = a * b;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    T inv(const T &a) const { return inverse_mod(a, p); }
    T from(const Integer &a) const { return mod_floor(a, p); }
    T from_u(uint64_t a) const { return mod_floor(Integer(static_cast<unsigned long>(a)), p); }
    Integer to_integer(const T &a) const { return a; }
    Integer order() const { return p; }
    T random(std::mt19937_64 &rng) const
    {
        Integer r = 0;
        size_t words = mpz_sizeinbase(p.get_mpz_t(), 2) / 64 + 2;
        for (size_t i = 0; i < words; i++)
            r = (r << 64) + Integer(static_cast<unsigned long>(rng()));
        return mod_floor(r, p);
    }
    bool is_two() const { return p == 2; }
};

template <class F>
using Poly = std::vector<typename F::T>;

template <class F>
void trim(const F &fld, Poly<F> &a)
{
    while (!a.empty() && a.back() == fld.zero())
        a.pop_back();
}

template <class F>
int deg(const Poly<F> &a)
{
    return static_cast<int>(a.size()) - 1;
}

template <class F>
Poly<F> sub(const F &fld, Poly<F> a, const Poly<F> &b)
{
    if (a.size() < b.size())
        a.resize(b.size(), fld.zero());
    for (size_t i = 0; i < b.size(); i++)
        a[i] = fld.sub(a[i], b[i]);
    trim(fld, a);
    return a;
}

template <class F>
Poly<F> add(const F &fld, Poly<F> a, const Poly<F> &b)
{
    if (a.size() < b.size())
        a.resize(b.size(), fld.zero());
    for (size_t i = 0; i < b.size(); i++)
        a[i] = fld.add(a[i], b[i]);
    trim(fld, a);
    return a;
}

template <class F>
Poly<F> mul(const F &fld, const Poly<F> &a, const Poly<F> &b)
{
    if (a.empty() || b.empty())
        return {};
    Poly<F> c(a.size() + b.size() - 1, fld.zero());
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == fld.zero())
            continue;
        for (size_t j = 0; j < b.size(); j++)
            c[i + j] = fld.add(c[i + j], fld.mul(a[i], b[j]));
    }
    trim(fld, c);
    return c;
}

/* a = q b + r; b nonzero. */
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F &fld, Poly<F> a, const Poly<F> &b)
{
    if (b.empty())
        throw DomainError("fp::divmod: division by zero polynomial");
    if (a.size() < b.size())
        return {{}, a};
    auto lcinv = fld.inv(b.back());
    const size_t db = b.size() - 1;
    Poly<F> q(a.size() - db, fld.zero());
    for (size_t k = a.size(); k-- > db;) {
        auto c = fld.mul(a[k], lcinv);
        q[k - db] = c;
        if (c != fld.zero())
            for (size_t j = 0; j <= db; j++)
                a[k - db + j] = fld.sub(a[k - db + j], fld.mul(c, b[j]));
    }
    a.resize(b.size() - 1);
    trim(fld, a);
    trim(fld, q);
    return {q, a};
}

template <class F>
Poly<F> mod(const F &fld, const Poly<F> &a, const Poly<F> &b)
{
    return divmod(fld, a, b).second;
}

template <class F>
Poly<F> monic(const F &fld, Poly<F> a)
{
    if (a.empty())
        return a;
    auto inv = fld.inv(a.back());
    for (auto &c : a)
        c = fld.mul(c, inv);
    return a;
}

template <class F>
Poly<F> gcd(const F &fld, Poly<F> a, Poly<F> b)
{
    while (!b.empty()) {
        Poly<F> r = mod(fld, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(fld, a);
}

/* Extended gcd: returns (g, s, t) with s a + t b = g monic. */
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const F &fld, Poly<F> a, Poly<F> b)
{
    Poly<F> s0{fld.one()}, s1{}, t0{}, t1{fld.one()};
    while (!b.empty()) {
        auto [q, r] = divmod(fld, a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<F> s2 = sub(fld, s0, mul(fld, q, s1));
        Poly<F> t2 = sub(fld, t0, mul(fld, q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.empty())
        return {a, s0, t0};
    auto inv = fld.inv(a.back());
    for (auto *v : {&a, &s0, &t0})
        for (auto &c : *v)
            c = fld.mul(c, inv);
    return {a, s0, t0};
}

template <class F>
Poly<F> derivative(const F &fld, const Poly<F> &a)
{
    Poly<F> d;
    for (size_t i = 1; i < a.size(); i++)
        d.push_back(fld.mul(a[i], fld.from_u(i)));
    trim(fld, d);
    return d;
}

template <class F>
typename F::T evaluate(const F &fld, const Poly<F> &a, const typename F::T &x)
{
    typename F::T acc = fld.zero();
    for (size_t i = a.size(); i-- > 0;)
        acc = fld.add(fld.mul(acc, x), a[i]);
    return acc;
}

/* base^e mod m */
template <class F>
Poly<F> powmod(const F &fld, Poly<F> base, Integer e, const Poly<F> &m)
{
    Poly<F> r{fld.one()};
    r = mod(fld, r, m);
    base = mod(fld, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = mod(fld, mul(fld, r, base), m);
        e >>= 1;
        if (e > 0)
            base = mod(fld, mul(fld, base, base), m);
    }
    return r;
}

/* Squarefree decomposition of monic a: pairs (S_i, i) with S_i monic,
   squarefree, pairwise coprime and a = prod S_i^i. */
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> squarefree(const F &fld, const Poly<F> &a, unsigned mult = 1)
{
    std::vector<std::pair<Poly<F>, unsigned>> out;
    if (deg<F>(a) <= 0)
        return out;
    Poly<F> c = gcd(fld, a, derivative(fld, a));
    Poly<F> w = divmod(fld, a, c).first;
    unsigned i = 1;
    while (deg<F>(w) > 0) {
        Poly<F> y = gcd(fld, w, c);
        Poly<F> z = divmod(fld, w, y).first;
        if (deg<F>(z) > 0)
            out.emplace_back(monic(fld, z), i * mult);
        i++;
        w = std::move(y);
        c = divmod(fld, c, w).first;
    }
    if (deg<F>(c) > 0) {
        /* c is a p-th power; p is small here since deg c >= p */
        uint64_t p = mpz_get_ui(fld.order().get_mpz_t());
        Poly<F> root;
        for (size_t j = 0; j < c.size(); j += p)
            root.push_back(c[j]);
        for (auto &pr : squarefree(fld, monic(fld, root), mult * static_cast<unsigned>(p)))
            out.push_back(std::move(pr));
    }
    return out;
}

template <class F>
bool poly_less(const F &fld, const Poly<F> &a, const Poly<F> &b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;) {
        Integer x = fld.to_integer(a[i]), y = fld.to_integer(b[i]);
        if (x != y)
            return x < y;
    }
    return false;
}

/* Distinct-degree split of monic squarefree a: (product of degree-d factors, d). */
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> distinct_degree(const F &fld, Poly<F> a)
{
    std::vector<std::pair<Poly<F>, unsigned>> out;
    Poly<F> x{fld.zero(), fld.one()};
    Poly<F> h = mod(fld, x, a);
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(deg<F>(a)); d++) {
        h = powmod(fld, h, fld.order(), a);
        Poly<F> g = gcd(fld, sub(fld, h, x), a);
        if (deg<F>(g) > 0) {
            out.emplace_back(g, d);
            a = divmod(fld, a, g).first;
            h = mod(fld, h, a);
        }
    }
    if (deg<F>(a) > 0)
        out.emplace_back(a, static_cast<unsigned>(deg<F>(a)));
    return out;
}

/* Cantor-Zassenhaus split of a monic squarefree a whose factors all have degree d. */
template <class F>
void equal_degree(const F &fld, const Poly<F> &a, unsigned d, std::mt19937_64 &rng, std::vector<Poly<F>> &out)
{
    const int n = deg<F>(a);
    if (n <= 0)
        return;
    if (n == static_cast<int>(d)) {
        out.push_back(a);
        return;
    }
    if (d == 1 && fld.order() < 65536) {
        /* exhaustive root scan */
        uint64_t p = mpz_get_ui(fld.order().get_mpz_t());
        for (uint64_t r = 0; r < p; r++) {
            auto v = fld.from_u(r);
            if (evaluate(fld, a, v) == fld.zero())
                out.push_back(Poly<F>{fld.neg(v), fld.one()});
        }
        return;
    }
    for (;;) {
        Poly<F> t;
        for (int i = 0; i < n; i++)
            t.push_back(fld.random(rng));
        trim(fld, t);
        if (deg<F>(t) <= 0)
            continue;
        Poly<F> b;
        if (fld.is_two()) {
            /* trace map t + t^2 + ... + t^{2^{d-1}} */
            Poly<F> s = t, acc = t;
            for (unsigned i = 1; i < d; i++) {
                s = mod(fld, mul(fld, s, s), a);
                acc = add(fld, acc, s);
            }
            b = acc;
        } else {
            Integer e = (ipow(fld.order(), d) - 1) / 2;
            b = sub(fld, powmod(fld, t, e, a), Poly<F>{fld.one()});
        }
        Poly<F> g = gcd(fld, a, b);
        if (deg<F>(g) > 0 && deg<F>(g) < n) {
            equal_degree(fld, g, d, rng, out);
            equal_degree(fld, divmod(fld, a, g).first, d, rng, out);
            return;
        }
    }
}

} // namespace wdr::fp

#endif
