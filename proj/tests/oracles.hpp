#ifndef WDR_TESTS_ORACLES_HPP
#define WDR_TESTS_ORACLES_HPP

/* Independent reference computations used by the unit tests and the
   acceptance binary. None of them calls the routine it is checking. */

#include <vector>

#include "wdr/binring.hpp"
#include "wdr/forms.hpp"

namespace wdr::oracle {

/* v_p of the index of R in its normalization, by Round 2: repeatedly
   replace the order by the multiplier ring of its p-radical. The multiplier
   ring is found by scanning T/pT, so keep p^n small. */
unsigned index_exponent(const RingPresentation &R, uint64_t p);

/* Monic Dedekind criterion: for some irreducible factor g of f mod p with
   multiplicity >= 2, f lies in (p^2, p g, g^2). f must be monic. */
bool monic_nonmaximal(const BinaryForm &f, uint64_t p);

/* Orders of index p^r (1 <= r <= rmax) in the maximal order R_g of a monic
   quadratic g, found by scanning all index-p^r sublattices containing 1,
   with the exponents of their conductors at the primes above p. */
struct QuadraticOrder {
    unsigned r;
    std::vector<unsigned> conductor; /* one exponent per prime above p */
};
std::vector<QuadraticOrder> quadratic_orders(const BinaryForm &g, uint64_t p, unsigned rmax);

/* Gram lengths t_k in double precision: companion eigenvalues from Eigen,
   the basis B_0..B_{n-2}, B_{n-1}/m evaluated at them, Cholesky of the
   Gram matrix. */
std::vector<double> eigen_profile(const BinaryForm &f, long m);

/* The cubic sieve written straight from the definitions: every integer
   point of the box, weak divisibility by evaluation, triple roots by
   comparison with a_0 (x - r y)^3, UWD by trial division of the classical
   discriminant, irreducibility by the rational root test, reduction from
   eigen_profile, and classes by solving for the translating multiple of m
   under both orientations and signs. */
struct NaiveClass {
    BinaryForm form;
    long l;
    Integer disc;
};
struct NaiveSieve {
    uint64_t candidates = 0, gcd_filtered = 0, presieved = 0, uwd = 0, reduced = 0;
    std::vector<NaiveClass> classes;
    Integer weighted_num; /* sum of floor(10^30 / sqrt(|disc| / m^2)) */
};
NaiveSieve naive_cubic_sieve(long s, long t, long m, uint64_t M);

/* translate(f, l) equals +-sigma(translate(g, l')) moved by some multiple
   of m, sigma the identity or the reflection. */
bool same_class(const BinaryForm &f, long l, const BinaryForm &g, long lg, long m);

} // namespace wdr::oracle

#endif
