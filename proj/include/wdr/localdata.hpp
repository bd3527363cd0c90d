#ifndef WDR_LOCALDATA_HPP
#define WDR_LOCALDATA_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wdr/arith.hpp"
#include "wdr/binring.hpp"
#include "wdr/forms.hpp"
#include "wdr/modp.hpp"

namespace wdr {

/* One prime of R_f above p. e and f come from the factor multiplicity and
   degree; for a part that is not locally maximal e is nominal only. */
struct LocalPart {
    unsigned e;
    unsigned f;
    bool locally_maximal = true;
    /* index into FactorModP::factors, or -1 for the Y factor */
    int source_factor = -1;
    bool operator==(const LocalPart &) const = default;
};

struct SplittingProfile {
    Integer p;
    std::vector<LocalPart> parts;
    bool maximal() const;
    unsigned degree_sum() const;
};

/* Requires f primitive with nonzero discriminant; p must not divide every
   coefficient. */
SplittingProfile dedekind_kummer(const BinaryForm &f, const Integer &p);

/* Local field data attached to the unique double point of f mod p: the
   quadratic factor Q of f over Z_p with Q = (x - l0)^2 mod p. */
enum class QuadCase { A, B, C };
std::string to_string(QuadCase c);

struct QuadraticFactor {
    QuadCase kase;
    unsigned disc_valuation;   /* v_p(disc Q) */
    unsigned maximal_disc_valuation; /* v_p of the discriminant of its maximal order */
};
/* Throws DomainError unless f mod p has a unique multiple point and it is a
   double point (profile affine_double or infinity_double). */
QuadraticFactor quadratic_factor(const BinaryForm &f, const Integer &p);

enum class LocalKind { maximal, pseudo_maximal, several_pseudo_maximal, other };
std::string to_string(LocalKind k);

struct PseudoMaxDescriptor {
    QuadCase kase;
    /* exponents of the conductor on the primes above p: {a, b} in case A,
       {a} in cases B and C */
    std::vector<unsigned> conductor;
    unsigned r; /* index p^r */
    Integer index;
    bool operator==(const PseudoMaxDescriptor &) const = default;
};

struct PrimeClass {
    Integer p;
    LocalKind kind;
    unsigned disc_valuation; /* v_p(disc R) */
    std::optional<PseudoMaxDescriptor> descriptor;
    /* non-maximal parts found by the Dedekind criterion, when used */
    unsigned nonmaximal_parts = 0;
};

struct OrderClass {
    std::vector<PrimeClass> primes; /* every p with p^2 | disc R */
    bool sudo_maximal;
    bool restricted_sudo_maximal;
};

/* Classification of R'_{(f, w)} at each p with p^2 | disc(f)/m^2. At a
   unique double point the p-adic quadratic factor gives the case and the
   index exponent r = (v_p(disc R') - v_p(d_max)) / 2. Elsewhere the Dedekind
   criterion decides (p not dividing m) or the prime is reported as other. */
OrderClass classify_order(const BinaryForm &f, const WeakDivWitness &w, const Factorization &disc_factors);
OrderClass classify_order(const BinaryForm &f, const WeakDivWitness &w);

struct Feasibility {
    bool ok;
    std::string violated; /* empty when ok */
};
/* |T(p,1)| <= H(p,1) + 1 and |T(p,f)| <= H(p,f) for f >= 2, with T(p,f) the
   parts of residue degree f. */
Feasibility small_prime_feasibility(const SplittingProfile &profile);

/* Irreducible orders in a rank-2 local algebra given its splitting
   (two (1,1) parts, one (1,2) part or one (2,1) part) and a conductor
   exponent vector. Throws DomainError when sum e f != 2. */
std::optional<PseudoMaxDescriptor> enumerate_pseudo_maximal(const std::vector<LocalPart> &split,
                                                             const std::vector<unsigned> &conductor,
                                                             const Integer &p);
/* The unique one of index p^r, r >= 1. */
PseudoMaxDescriptor pseudo_maximal_of_index(const std::vector<LocalPart> &split, unsigned r, const Integer &p);

/* Splitting of the maximal order of Q[x]/f(x,1) at p, for forms whose only
   multiple point mod p (if any) is a double point; throws DomainError
   otherwise. */
SplittingProfile field_profile(const BinaryForm &f, const Integer &p);

/* Per-prime local data for order counting. */
class ProfileSource {
  public:
    virtual ~ProfileSource() = default;
    virtual unsigned degree() const = 0;
    /* throws DomainError when no profile is known for p */
    virtual SplittingProfile profile(uint64_t p) const = 0;
};

class FormProfileSource : public ProfileSource {
  public:
    explicit FormProfileSource(BinaryForm f);
    unsigned degree() const override { return f_.degree(); }
    SplittingProfile profile(uint64_t p) const override;

  private:
    BinaryForm f_;
};

/* Lines "p: (e,f,max);(e,f,max);..." where max is 1/0 or y/n; "*" as p
   gives the profile of every unlisted prime. Blank lines and '#' comments
   are skipped. */
class FileProfileSource : public ProfileSource {
  public:
    static FileProfileSource parse(std::istream &in);
    static FileProfileSource parse_text(const std::string &text);
    unsigned degree() const override { return degree_; }
    SplittingProfile profile(uint64_t p) const override;

  private:
    unsigned degree_ = 0;
    std::map<uint64_t, std::vector<LocalPart>> by_prime_;
    std::optional<std::vector<LocalPart>> fallback_;
};

/* Number of restricted sudo-maximal orders of index p^k, k >= 1: unordered
   pairs of distinct (1,1) parts plus (1,2) parts plus (2,1) parts. */
unsigned local_order_count(const SplittingProfile &profile);

struct OrderCount {
    uint64_t X;
    /* coeff[N] for 1 <= N <= X, index 0 unused */
    std::vector<Integer> coeff;
    std::vector<Integer> partial;
    std::vector<Integer> zeta_coeff;
    std::vector<Integer> zeta_partial;
    unsigned zeta_power;
    /* first N with coeff[N] > zeta_coeff[N], 0 if none */
    uint64_t first_termwise_violation = 0;
    uint64_t first_partial_violation = 0;
};

/* Coefficients of prod_p (1 + sum_k C_p p^{-ks}) up to X, compared with
   zeta(s)^{C(n,2)}. */
OrderCount count_restricted_sudo_maximal(const ProfileSource &src, uint64_t X);

} // namespace wdr

#endif
