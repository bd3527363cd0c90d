#include "wdr/arith.hpp"

#include <algorithm>
#include <map>

#include "wdr/error.hpp"

namespace wdr {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p)
{
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p)
{
    /* extended Euclid on signed 128-bit to avoid overflow near 2^63 */
    __int128 r0 = p, r1 = a % p, s0 = 0, s1 = 1;
    while (r1) {
        __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1)
        throw DomainError("invmod: not a unit");
    if (s0 < 0)
        s0 += p;
    return static_cast<uint64_t>(s0);
}

uint64_t reduce_mod(const Integer &a, uint64_t p)
{
    return mpz_fdiv_ui(a.get_mpz_t(), p);
}

Integer floor_div(const Integer &a, const Integer &b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer mod_floor(const Integer &a, const Integer &b)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r < 0)
        r += abs(b);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer ipow(const Integer &b, unsigned e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

unsigned valuation(Integer a, const Integer &p)
{
    if (a == 0)
        throw DomainError("valuation of zero");
    return static_cast<unsigned>(mpz_remove(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime(const Integer &n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(uint64_t n)
{
    if (n < 2)
        return false;
    for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0)
            return n == q;
    }
    /* deterministic Miller-Rabin for 64-bit inputs */
    uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        s++;
    }
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; i++) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<uint64_t> primes_below(uint64_t bound)
{
    std::vector<uint64_t> out;
    if (bound <= 2)
        return out;
    std::vector<bool> composite(bound, false);
    for (uint64_t i = 2; i < bound; i++) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (uint64_t j = i * i; j < bound; j += i)
            composite[j] = true;
    }
    return out;
}

const Integer &default_factor_budget()
{
    static const Integer budget("1000000000000000000000000000000");
    return budget;
}

namespace {

/* Pollard-Brent; returns a nontrivial factor of composite n. */
Integer brent_factor(const Integer &n)
{
    for (unsigned long c = 1;; c++) {
        Integer y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        const unsigned long block = 128;
        auto step = [&](Integer &v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; i++)
                step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(block, r - k); i++) {
                    step(y);
                    q = q * abs(Integer(x - y));
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += block;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                step(ys);
                Integer diff = abs(Integer(x - ys));
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_rec(const Integer &n, std::map<Integer, unsigned> &out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    Integer root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        factor_rec(root, out);
        factor_rec(root, out);
        return;
    }
    Integer d = brent_factor(n);
    factor_rec(d, out);
    factor_rec(Integer(n / d), out);
}

} // namespace

Factorization factor_integer(const Integer &n, const Integer &max_abs)
{
    if (n == 0)
        throw DomainError("factor_integer: zero");
    Integer m = abs(n);
    if (m > max_abs)
        throw BudgetError("factor_integer: |n| exceeds factoring budget " + max_abs.get_str());
    std::map<Integer, unsigned> acc;
    for (unsigned long q = 2; q < 10000 && q * q <= m; q += (q == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
                e++;
            }
            acc[Integer(q)] = e;
        }
    }
    factor_rec(m, acc);
    Factorization out;
    for (auto &[p, e] : acc)
        out.push_back({p, e});
    return out;
}

Factorization factor_integer(const Integer &n)
{
    return factor_integer(n, default_factor_budget());
}

Integer factorization_value(const Factorization &fac)
{
    Integer v = 1;
    for (auto &pe : fac)
        v *= ipow(pe.p, pe.e);
    return v;
}

bool is_squarefree(const Factorization &fac)
{
    return std::all_of(fac.begin(), fac.end(), [](const PrimePower &pe) { return pe.e <= 1; });
}

int mobius(uint64_t n)
{
    if (n == 0)
        throw DomainError("mobius(0)");
    int mu = 1;
    for (uint64_t q = 2; q * q <= n; q++) {
        if (n % q == 0) {
            n /= q;
            if (n % q == 0)
                return 0;
            mu = -mu;
        }
    }
    if (n > 1)
        mu = -mu;
    return mu;
}

Integer inverse_mod(const Integer &a, const Integer &m)
{
    Integer r;
    if (m == 1)
        return 0;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw DomainError("inverse_mod: not a unit");
    return mod_floor(r, m);
}

Integer crt(const std::vector<Integer> &residues, const std::vector<Integer> &moduli)
{
    if (residues.size() != moduli.size())
        throw DomainError("crt: size mismatch");
    Integer x = 0, mod = 1;
    for (size_t i = 0; i < residues.size(); i++) {
        const Integer &m = moduli[i];
        Integer g;
        mpz_gcd(g.get_mpz_t(), mod.get_mpz_t(), m.get_mpz_t());
        if (g != 1)
            throw DomainError("crt: moduli not coprime");
        /* x + mod*k = r_i (mod m) */
        Integer k = mod_floor(Integer((residues[i] - x) * inverse_mod(mod, m)), m);
        x += mod * k;
        mod *= m;
    }
    return mod_floor(x, mod);
}

std::string to_string(const Integer &a) { return a.get_str(); }
std::string to_string(const Rational &a) { return a.get_str(); }

} // namespace wdr
