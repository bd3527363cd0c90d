#ifndef WDR_ARITH_HPP
#define WDR_ARITH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wdr {

using Integer = mpz_class;
using Rational = mpq_class;

struct PrimePower {
    Integer p;
    unsigned e;
    bool operator==(const PrimePower &) const = default;
};

/* Complete factorization of |N| as ascending prime powers. */
using Factorization = std::vector<PrimePower>;

/* Word-sized modular arithmetic, p < 2^63. */
inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p)
{
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p)
{
    uint64_t s = a + b;
    return (s >= p || s < a) ? s - p : s;
}
inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p)
{
    return a >= b ? a - b : a + (p - b);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
/* Inverse of a modulo p; a must be a unit. */
uint64_t invmod(uint64_t a, uint64_t p);
/* Representative of a in [0, p). */
uint64_t reduce_mod(const Integer &a, uint64_t p);

/* Floor division and the matching nonnegative remainder. */
Integer floor_div(const Integer &a, const Integer &b);
Integer mod_floor(const Integer &a, const Integer &b);

Integer binomial(unsigned n, unsigned k);
Integer ipow(const Integer &b, unsigned e);

/* p-adic valuation; a must be nonzero. */
unsigned valuation(Integer a, const Integer &p);

bool is_prime(const Integer &n);
bool is_prime(uint64_t n);
std::vector<uint64_t> primes_below(uint64_t bound);

/* Factor |n| (n != 0) with trial division then Pollard-Brent rho.
   Throws BudgetError if |n| exceeds max_abs. */
Factorization factor_integer(const Integer &n, const Integer &max_abs);
Factorization factor_integer(const Integer &n);
/* Default size bound on factoring input: 10^30. */
const Integer &default_factor_budget();

Integer factorization_value(const Factorization &fac);
bool is_squarefree(const Factorization &fac);

int mobius(uint64_t n);

/* x = r_i mod m_i with pairwise coprime moduli; result in [0, prod m_i). */
Integer crt(const std::vector<Integer> &residues, const std::vector<Integer> &moduli);

/* Inverse of a modulo m as an Integer in [0, m); a must be a unit. */
Integer inverse_mod(const Integer &a, const Integer &m);

std::string to_string(const Integer &a);
std::string to_string(const Rational &a);

} // namespace wdr

#endif
