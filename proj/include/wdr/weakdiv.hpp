#ifndef WDR_WEAKDIV_HPP
#define WDR_WEAKDIV_HPP

#include <optional>
#include <string>
#include <vector>

#include "wdr/arith.hpp"
#include "wdr/binring.hpp"
#include "wdr/forms.hpp"
#include "wdr/modp.hpp"

namespace wdr {

bool is_witness(const BinaryForm &f, const WeakDivWitness &w);

/* Least l in [0, m) with m^2 | f(l, 1) and m | f_X(l, 1). Prime powers of m
   up to 10^4 are scanned; larger ones are lifted digit by digit from the
   double roots mod p. */
std::optional<WeakDivWitness> find_witness(const BinaryForm &f, const Integer &m);
/* All l in [0, p^e) satisfying the witness congruences for p^e. */
std::vector<Integer> witness_residues(const BinaryForm &f, const Integer &p, unsigned e);

/* Basis B_0, ..., B_{n-2}, B_{n-1}/m on translate(f, l); throws DomainError
   when w is not a witness for f. */
RingPresentation weakly_divisible_ring(const BinaryForm &f, const WeakDivWitness &w);

/* p^2 | disc(f + p g) for every integral g. Tested through the first-order
   expansion disc(f + p g) = disc(f) + p <grad disc(f), g> mod p^2, i.e.
   p^2 | disc(f) and p^2 | disc(f + p e_i) for each coefficient i. */
bool strongly_divisible_lifted(const BinaryForm &f, const Integer &p);
/* reverse(f) has a witness for p, i.e. p^2 | a_0 and p | a_1 or an affine
   witness of the reversed form. */
bool reverse_weakly_divisible(const BinaryForm &f, const Integer &p);

enum class UwdVerdict { weakly_divisible, reverse_weakly_divisible, strongly_divisible, unexplained };
std::string to_string(UwdVerdict v);

struct UwdPrime {
    Integer p;
    unsigned disc_valuation;
    DoubleRootProfile profile;
    UwdVerdict verdict;
};

struct UwdReport {
    bool is_uwd;
    std::vector<UwdPrime> per_prime;
};

/* One entry per p with p^2 | disc(f). The verdict follows the double root
   profile; an affine double root counts as weakly divisible only when
   p^2 | f(l) actually holds at that root (it can fail at p = 2), and a double
   root at infinity as reverse weakly divisible only when p^2 | a_0, p | a_1.
   Throws DomainError when disc_factors does not multiply to |disc(f)|. */
UwdReport is_uwd(const BinaryForm &f, const Factorization &disc_factors);
UwdReport is_uwd(const BinaryForm &f);

struct MaxWitness {
    Integer m_f;
    Integer l_f;
    Integer s; /* disc(f) = s m_f^2 */
};
/* Requires is_uwd(f). Throws InternalError when no witness exists modulo the
   prime power m_f needs (at p = 2 it can be missing). */
MaxWitness max_witness(const BinaryForm &f, const Factorization &disc_factors);
MaxWitness max_witness(const BinaryForm &f);

} // namespace wdr

#endif
