#ifndef WDR_MODP_HPP
#define WDR_MODP_HPP

#include <optional>
#include <string>
#include <vector>

#include "wdr/arith.hpp"
#include "wdr/forms.hpp"

namespace wdr {

/* Irreducible factor of a reduction: monic in X, leading-first coefficients
   in [0, p), so degree = coeffs.size() - 1. */
struct ModFactor {
    std::vector<Integer> coeffs;
    unsigned e;
    unsigned degree() const { return static_cast<unsigned>(coeffs.size() - 1); }
    bool operator==(const ModFactor &) const = default;
};

/* f = unit * Y^k * prod f_i^{e_i} over F_p */
struct FactorModP {
    Integer p;
    unsigned n;
    Integer unit;
    std::vector<ModFactor> factors;
    unsigned infinity_multiplicity;
};

/* Leading-first reduction of f modulo p. */
std::vector<Integer> reduce_coeffs(const BinaryForm &f, const Integer &p);

/* Throws DomainError("vanishing reduction") when p divides every coefficient. */
FactorModP factor_modp(const BinaryForm &f, const Integer &p);
FactorModP factor_modp(const std::vector<Integer> &reduced, const Integer &p);
/* unit * Y^k * prod f_i^{e_i}, leading-first, in [0, p). */
std::vector<Integer> expand(const FactorModP &fac);

enum class ProfileKind { smooth, affine_double, infinity_double, strongly_divisible };
enum class StrongReason { none, rational_triple, two_double_points };

struct DoubleRootProfile {
    Integer p;
    ProfileKind kind;
    /* the double root l in [0, p) for affine_double */
    std::optional<Integer> root;
    StrongReason reason;
};

std::string to_string(ProfileKind k);
std::string to_string(StrongReason r);

/* Multiple points of f mod p on P^1. A point of multiplicity >= 3 that is
   the only multiple point is reported as rational_triple; two or more
   multiple points (over the algebraic closure) as two_double_points. */
DoubleRootProfile double_root_profile(const BinaryForm &f, const Integer &p);
DoubleRootProfile double_root_profile(const std::vector<Integer> &reduced, const Integer &p);

/* Fast path on word-sized residues (leading-first, in [0, p)). The zero
   vector counts as strongly divisible. */
bool strongly_divisible_mod_p(const std::vector<uint64_t> &reduced, uint64_t p);

/* Number of monic irreducible polynomials of degree f over F_p. */
Integer count_H(const Integer &p, unsigned f);

struct SingularDensity {
    unsigned n;
    uint64_t p;
    Integer V, W;
    Rational c_p;
};

constexpr uint64_t kDensityBudget = 100000000;

/* Exhaustive count over F_p^{n+1}; throws BudgetError when p^{n+1} > budget. */
SingularDensity singular_density(unsigned n, uint64_t p, uint64_t budget = kDensityBudget);

} // namespace wdr

#endif
