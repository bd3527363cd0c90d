#ifndef WDR_FORMS_HPP
#define WDR_FORMS_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wdr/arith.hpp"
#include "wdr/multipoly.hpp"

namespace wdr {

/* a_0 X^n + a_1 X^{n-1} Y + ... + a_n Y^n, stored leading-first. */
class BinaryForm {
  public:
    explicit BinaryForm(std::vector<Integer> coeffs);
    BinaryForm(std::initializer_list<long> coeffs);

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<Integer> &coeffs() const { return coeffs_; }
    const Integer &operator[](size_t i) const { return coeffs_[i]; }

    Integer eval(const Integer &x, const Integer &y) const;
    /* f(x, 1) */
    Integer eval(const Integer &x) const { return eval(x, 1); }
    /* (d/dX) f at (x, 1) */
    Integer derivative_at(const Integer &x) const;

    /* "n;a_0,...,a_n" */
    static BinaryForm parse(std::string_view text);
    std::string str() const;

    bool operator==(const BinaryForm &) const = default;

  private:
    std::vector<Integer> coeffs_;
};

/* f(x + l y, y) */
BinaryForm translate(const BinaryForm &f, const Integer &l);
/* f(y, x) */
BinaryForm reverse(const BinaryForm &f);
/* (-1)^n f(-x, y), i.e. a_i -> (-1)^i a_i. */
BinaryForm reflect(const BinaryForm &f);
BinaryForm negate(const BinaryForm &f);
/* lambda rho^n f(x / rho, y), i.e. a_i -> lambda rho^i a_i. */
BinaryForm scale_roots(const BinaryForm &f, const Integer &lambda, const Integer &rho);

Integer content(const BinaryForm &f);
BinaryForm primitive_part(const BinaryForm &f);

/* Resultant of homogeneous forms given leading-first with formal degrees
   size()-1, from the Sylvester matrix. */
Integer resultant(const std::vector<Integer> &f, const std::vector<Integer> &g);
Integer resultant(const BinaryForm &f, const BinaryForm &g);

/* ((-1)^{n(n-1)/2} / a_0) Res(f, f_X); degree 1 forms have discriminant 1. */
Integer discriminant(const BinaryForm &f);

/* Discriminant of the generic form split by degree in a_n, a_{n-1}:
   G = a_n D1 + a_n a_{n-1} D2 + a_{n-1}^2 D3 + a_n^2 D4. */
struct DiscStructure {
    unsigned n;
    MultiPoly G;
    MultiPoly Delta1, Delta2, Delta3, Delta4;
    std::optional<MultiPoly> F;
    /* Observed constants: Delta1 = delta1_constant * a_{n-2}^3 * disc(a_0..a_{n-2})
       and Delta3 = delta3_sign * disc(a_0..a_{n-1}); zero when the relation
       fails to hold. */
    Integer delta1_constant;
    int delta3_sign;
};

constexpr unsigned kSymbolicDiscMaxDegree = 6;

/* Generic discriminant G_n as a polynomial in a_0..a_n, 2 <= n <= max_degree. */
MultiPoly generic_discriminant(unsigned n);
DiscStructure symbolic_disc(unsigned n, bool with_F = false,
                            unsigned max_degree = kSymbolicDiscMaxDegree);

} // namespace wdr

#endif
