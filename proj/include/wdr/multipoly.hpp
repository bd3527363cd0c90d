#ifndef WDR_MULTIPOLY_HPP
#define WDR_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wdr/arith.hpp"

namespace wdr {

constexpr size_t kMaxVars = 8;
using Monomial = std::array<uint8_t, kMaxVars>;

/* Graded lexicographic: total degree first, then exponents of earlier
   variables dominate. */
struct GradedLex {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

unsigned total_degree(const Monomial &m);

/* Sparse multivariate integer polynomial. */
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Integer, GradedLex>;

    explicit MultiPoly(size_t nvars = 0);
    static MultiPoly constant(size_t nvars, const Integer &c);
    static MultiPoly variable(size_t nvars, size_t i);

    size_t nvars() const { return nvars_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial &m, const Integer &c);

    MultiPoly operator+(const MultiPoly &o) const;
    MultiPoly operator-(const MultiPoly &o) const;
    MultiPoly operator*(const MultiPoly &o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Integer &c) const;
    MultiPoly &operator+=(const MultiPoly &o);
    bool operator==(const MultiPoly &o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Integer evaluate(std::span<const Integer> point) const;
    unsigned degree_in(size_t var) const;
    /* Coefficient of var^k, as a polynomial not involving var. */
    MultiPoly coefficient_in(size_t var, unsigned k) const;
    /* Terms whose exponent of var satisfies pred, with var^shift removed. */
    template <class Pred>
    MultiPoly select(size_t var, Pred pred, unsigned shift) const
    {
        MultiPoly out(nvars_);
        for (const auto &[m, c] : terms_)
            if (pred(m[var])) {
                Monomial mm = m;
                mm[var] = static_cast<uint8_t>(mm[var] - shift);
                out.terms_.emplace(mm, c);
            }
        return out;
    }
    /* Exact division by c * x^mono; throws InternalError if inexact. */
    MultiPoly divexact(const Monomial &mono, const Integer &c) const;
    bool involves(size_t var) const { return degree_in(var) > 0; }

    std::string to_string() const;

  private:
    size_t nvars_;
    TermMap terms_;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/* Division-free determinant by Laplace expansion memoized over column
   subsets; fine for the Sylvester sizes used here (<= 11). */
MultiPoly symbolic_determinant(const PolyMatrix &m);

} // namespace wdr

#endif
