#ifndef WDR_BINRING_HPP
#define WDR_BINRING_HPP

#include <optional>
#include <string>
#include <vector>

#include "wdr/arith.hpp"
#include "wdr/forms.hpp"
#include "wdr/matrix.hpp"

namespace wdr {

/* m^2 | f(l, 1) and m | f_X(l, 1), with 0 <= l < m. */
struct WeakDivWitness {
    Integer m;
    Integer l;
    bool operator==(const WeakDivWitness &) const = default;
};

/* Rank-n ring given by structure constants: B_i B_j = sum_k table[i][j][k] B_k. */
struct RingPresentation {
    unsigned n;
    std::vector<std::string> basis_names;
    std::vector<std::vector<IntVector>> table;
    Integer disc;
    BinaryForm origin;
    std::optional<WeakDivWitness> witness;

    const IntVector &product(size_t i, size_t j) const { return table[i][j]; }
    /* The form whose root the basis is written in: origin, translated by the
       witness offset when there is one. */
    BinaryForm basis_form() const;
    Integer witness_modulus() const { return witness ? witness->m : Integer(1); }
    /* Product of two elements given in basis coordinates. */
    IntVector multiply(const IntVector &u, const IntVector &v) const;
};

/* Rational irreducibility of f over Q (f as a binary form, so a Y or X
   factor counts). Degree patterns modulo primes below 100 certify most
   irreducible inputs; the rest go through numeric-root recombination with
   exact trial division. */
bool is_irreducible(const BinaryForm &f);

/* R_f on the basis B_0 = 1, B_k = a_0 d^k + ... + a_{k-1} d (d a root of
   f(x, 1)). Throws DomainError for reducible f. */
RingPresentation canonical_basis_ring(const BinaryForm &f);
/* Same construction without the irreducibility gate; needs a_0 != 0 and
   disc(f) != 0 so that Q[x]/f(x,1) is reduced. */
RingPresentation canonical_basis_ring_unchecked(const BinaryForm &f);

/* Element of Q[x]/(f(x,1)) as low-first power-basis coordinates. */
using PowerElement = std::vector<Rational>;
PowerElement power_mul(const BinaryForm &f, const PowerElement &u, const PowerElement &v);
/* B_k of f in the power basis. */
PowerElement canonical_basis_element(const BinaryForm &f, unsigned k);
/* Table of the lattice spanned by basis (basis[k] of degree exactly k);
   throws InternalError if a structure constant is not integral. */
RingPresentation ring_on_basis(const BinaryForm &f, const std::vector<PowerElement> &basis,
                               std::vector<std::string> names);
/* Basis coordinates of a power-basis element (rational in general). */
std::vector<Rational> basis_coordinates(const std::vector<PowerElement> &basis, PowerElement c);

/* Tr(B_i B_j) */
IntMatrix trace_form(const RingPresentation &R);
Integer ring_disc(const RingPresentation &R);

/* Empty string when B_0 is the identity and the table is commutative and
   associative; otherwise a description of the first failure. */
std::string ring_axiom_violation(const RingPresentation &R);

/* Index of the ideal p R in R, computed from the multiplication table. */
Integer quotient_size(const RingPresentation &R, const Integer &p);

/* Coordinates of the shifted basis C_0 = 1, C_k = B_k + a_k (k < n-1) and
   C_{n-1} = B_{n-1}/m + a_{n-1}/m for weakly divisible rings, as the B_0
   offsets of each shifted vector. */
IntVector shift_offsets(const RingPresentation &R);
/* Re-express a table in the shifted basis. */
std::vector<std::vector<IntVector>> shifted_table(const RingPresentation &R);
/* Closed-form rows of the shifted table: with P_0 = a_0 and P_k = C_k,
     C' C_k = -(a_n/m) P_{k-1} + a_k C'                 (1 <= k <= n-2)
     C'^2   = -(a_n/m^2) P_{n-2} + (a_{n-1}/m) C'
   for C' = C_{n-1}/m and a_i the coefficients of basis_form(). Returns the
   first row that disagrees with the table, or an empty string. */
std::string shifted_row_mismatch(const RingPresentation &R);

/* A fractional R_f-module: the lattice spanned by rows / denominator, in the
   coordinates of the canonical basis. */
struct IdealPresentation {
    std::string role;
    IntMatrix generators; /* Hermite normal form rows */
    Integer denominator;
};

struct IdealBases {
    IdealPresentation sum;          /* R_f + R_f d */
    IdealPresentation intersection; /* R_f cap R_f d^{-1} */
    IdealPresentation product;
};

/* Requires primitive f; throws DomainError otherwise. */
IdealBases ideal_bases(const BinaryForm &f);
IdealBases ideal_bases(const RingPresentation &R);

/* Hermite-normalized module with the denominator reduced. */
IdealPresentation normalize_module(std::string role, IntMatrix rows, Integer denominator);
IdealPresentation module_product(const RingPresentation &R, const IdealPresentation &a,
                                 const IdealPresentation &b);
/* Closed under multiplication by every basis element of R. */
bool is_module(const RingPresentation &R, const IdealPresentation &M);
bool same_module(const IdealPresentation &a, const IdealPresentation &b);

} // namespace wdr

#endif
