#ifndef WDR_REDUCE_HPP
#define WDR_REDUCE_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "wdr/binring.hpp"
#include "wdr/forms.hpp"
#include "wdr/matrix.hpp"

namespace wdr {

using ProfileReal = boost::multiprecision::cpp_bin_float_50;

/* Gram-Schmidt lengths t_1..t_n of <B_0, ..., B_{n-2}, B_{n-1}/m> embedded
   in R^r + C^s, each complex place contributing |z|^2 once. */
struct GramProfile {
    std::vector<ProfileReal> t;
    unsigned real_places = 0;
    unsigned complex_places = 0;
    unsigned bits = 0;     /* working precision; 0 for a hand-built profile */
    ProfileReal guard = 0; /* relative band below which a ratio counts as failing */
};

constexpr unsigned kDefaultBits = 128;
constexpr unsigned kMaxBits = 512;
constexpr double kDefaultGuard = 1e-9;

/* Roots at `bits`, retried at 256 and 512 bits when they cannot be
   separated or orthogonalization loses too much; PrecisionError past 512.
   Needs a_0 != 0 and disc(f) != 0. */
GramProfile gram_profile(const BinaryForm &f, const Integer &m, unsigned bits = kDefaultBits,
                         double guard = kDefaultGuard);

/* t_2 / t_1 >= 2 and t_i / t_2 >= 2 for i >= 3, each ratio tested as
   ratio >= 2 (1 + guard). */
bool is_normally_minkowski_reduced(const GramProfile &profile);

/* max(2 t_1 / t_2, max_{i >= 3} (2 t_2 / t_i)^{1/(i-2)}) of an m = 1 profile. */
ProfileReal rho_f(const GramProfile &profile);
ProfileReal rho_f(const BinaryForm &f, unsigned bits = kDefaultBits);

/* M with <C'> = <C> M (columns) for the shifted bases C_k = B_k + a_k of R_f
   and C'_k of R_{translate(f, l)}. */
IntMatrix translation_matrix(const BinaryForm &f, const Integer &l);

/* Unimodular S with <C> = <B> S, C_0 = B_0 and C_k = B_k + a_k B_0. */
IntMatrix shift_matrix(const BinaryForm &f);

struct CanonicalKey {
    Integer m;
    std::vector<Integer> coeffs;
    bool reflected = false;      /* representative taken from (-1)^n f(-x) */
    bool small_degree = false;   /* n <= 3: uniqueness not guaranteed */
    /* "m|a_0,...,a_n|sigma" */
    std::string str() const;
    /* identity used for deduplication: m and coefficients */
    std::string id() const;
    bool operator==(const CanonicalKey &o) const { return m == o.m && coeffs == o.coeffs; }
};

/* Normalizes sign (a_0 > 0), moves to the witness point, translates by a
   multiple of m so that the X^{n-1} Y coefficient lies in [0, n a_0 m), and
   keeps the lexicographically smaller of the two orientations. Throws
   DomainError when w is not a witness or the m-basis is not reduced. */
CanonicalKey canonical_representative(const BinaryForm &f, const WeakDivWitness &w, unsigned bits = kDefaultBits,
                                      double guard = kDefaultGuard);

} // namespace wdr

#endif
