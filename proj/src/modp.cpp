#include "wdr/modp.hpp"

#include <algorithm>

#include "fp_poly.hpp"
#include "wdr/error.hpp"

namespace wdr {

namespace {

const Integer kWordLimit = Integer(1) << 63;

bool fits_word(const Integer &p) { return p < kWordLimit; }

/* Affine chart y = 1 as a low-first polynomial, after dropping k leading zeros. */
template <class F>
fp::Poly<F> affine_part(const F &fld, const std::vector<Integer> &red, unsigned &k)
{
    const unsigned n = static_cast<unsigned>(red.size() - 1);
    k = 0;
    while (k <= n && fld.from(red[k]) == fld.zero())
        k++;
    if (k > n)
        throw DomainError("vanishing reduction");
    fp::Poly<F> g;
    for (unsigned j = 0; j + k <= n; j++)
        g.push_back(fld.from(red[n - j]));
    return g;
}

template <class F>
std::vector<Integer> leading_first(const F &fld, const fp::Poly<F> &g)
{
    std::vector<Integer> c;
    for (size_t i = g.size(); i-- > 0;)
        c.push_back(fld.to_integer(g[i]));
    return c;
}

template <class F>
FactorModP factor_impl(const F &fld, const std::vector<Integer> &red)
{
    FactorModP out;
    out.p = fld.order();
    out.n = static_cast<unsigned>(red.size() - 1);
    unsigned k;
    fp::Poly<F> g = affine_part(fld, red, k);
    out.infinity_multiplicity = k;
    out.unit = fld.to_integer(g.back());
    g = fp::monic(fld, g);
    std::mt19937_64 rng(0x5eed + out.n);
    for (auto &[s, mult] : fp::squarefree(fld, g)) {
        for (auto &[part, d] : fp::distinct_degree(fld, s)) {
            std::vector<fp::Poly<F>> irr;
            fp::equal_degree(fld, part, d, rng, irr);
            for (auto &q : irr)
                out.factors.push_back({leading_first(fld, q), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const ModFactor &a, const ModFactor &b) {
        if (a.coeffs.size() != b.coeffs.size())
            return a.coeffs.size() < b.coeffs.size();
        if (a.coeffs != b.coeffs)
            return a.coeffs < b.coeffs;
        return a.e < b.e;
    });
    return out;
}

template <class F>
DoubleRootProfile profile_impl(const F &fld, const std::vector<Integer> &red)
{
    unsigned k;
    fp::Poly<F> g = fp::monic(fld, affine_part(fld, red, k));
    auto sqf = fp::squarefree(fld, g);
    unsigned points = k >= 2 ? 1 : 0;
    for (auto &[s, mult] : sqf)
        if (mult >= 2)
            points += static_cast<unsigned>(fp::deg<F>(s));
    DoubleRootProfile prof{fld.order(), ProfileKind::smooth, std::nullopt, StrongReason::none};
    if (points == 0)
        return prof;
    if (points >= 2) {
        prof.kind = ProfileKind::strongly_divisible;
        prof.reason = StrongReason::two_double_points;
        return prof;
    }
    /* exactly one multiple point, necessarily rational */
    unsigned mult = k >= 2 ? k : 0;
    typename F::T root{};
    for (auto &[s, m] : sqf)
        if (m >= 2) {
            mult = m;
            root = fld.neg(s[0]);
        }
    if (mult >= 3) {
        prof.kind = ProfileKind::strongly_divisible;
        prof.reason = StrongReason::rational_triple;
    } else if (k >= 2) {
        prof.kind = ProfileKind::infinity_double;
    } else {
        prof.kind = ProfileKind::affine_double;
        prof.root = fld.to_integer(root);
    }
    return prof;
}

} // namespace

std::vector<Integer> reduce_coeffs(const BinaryForm &f, const Integer &p)
{
    std::vector<Integer> r;
    for (const auto &c : f.coeffs())
        r.push_back(mod_floor(c, p));
    return r;
}

FactorModP factor_modp(const std::vector<Integer> &reduced, const Integer &p)
{
    if (reduced.size() < 2)
        throw DomainError("factor_modp: degree must be at least 1");
    if (fits_word(p))
        return factor_impl(fp::SmallField{mpz_get_ui(p.get_mpz_t())}, reduced);
    return factor_impl(fp::BigField{p}, reduced);
}

FactorModP factor_modp(const BinaryForm &f, const Integer &p)
{
    return factor_modp(reduce_coeffs(f, p), p);
}

std::vector<Integer> expand(const FactorModP &fac)
{
    auto run = [&](const auto &fld) {
        using F = std::decay_t<decltype(fld)>;
        fp::Poly<F> acc{fld.from(fac.unit)};
        for (const auto &mf : fac.factors) {
            fp::Poly<F> q;
            for (size_t i = mf.coeffs.size(); i-- > 0;)
                q.push_back(fld.from(mf.coeffs[i]));
            for (unsigned j = 0; j < mf.e; j++)
                acc = fp::mul(fld, acc, q);
        }
        /* homogenize: degree n with Y^k absorbing the missing top */
        std::vector<Integer> out(fac.n + 1, Integer(0));
        for (size_t j = 0; j < acc.size(); j++)
            out[fac.n - j] = fld.to_integer(acc[j]);
        return out;
    };
    if (fits_word(fac.p))
        return run(fp::SmallField{mpz_get_ui(fac.p.get_mpz_t())});
    return run(fp::BigField{fac.p});
}

std::string to_string(ProfileKind k)
{
    switch (k) {
    case ProfileKind::smooth:
        return "smooth";
    case ProfileKind::affine_double:
        return "unique-affine-rational-double";
    case ProfileKind::infinity_double:
        return "double-at-infinity";
    case ProfileKind::strongly_divisible:
        return "strongly-divisible";
    }
    return "?";
}

std::string to_string(StrongReason r)
{
    switch (r) {
    case StrongReason::none:
        return "none";
    case StrongReason::rational_triple:
        return "rational-triple";
    case StrongReason::two_double_points:
        return "two-double-points";
    }
    return "?";
}

DoubleRootProfile double_root_profile(const std::vector<Integer> &reduced, const Integer &p)
{
    if (fits_word(p))
        return profile_impl(fp::SmallField{mpz_get_ui(p.get_mpz_t())}, reduced);
    return profile_impl(fp::BigField{p}, reduced);
}

DoubleRootProfile double_root_profile(const BinaryForm &f, const Integer &p)
{
    return double_root_profile(reduce_coeffs(f, p), p);
}

bool strongly_divisible_mod_p(const std::vector<uint64_t> &reduced, uint64_t p)
{
    fp::SmallField fld{p};
    const unsigned n = static_cast<unsigned>(reduced.size() - 1);
    unsigned k = 0;
    while (k <= n && reduced[k] == 0)
        k++;
    if (k > n)
        return true;
    if (k >= 3)
        return true;
    fp::Poly<fp::SmallField> g;
    for (unsigned j = 0; j + k <= n; j++)
        g.push_back(reduced[n - j]);
    g = fp::monic(fld, g);
    unsigned points = k >= 2 ? 1 : 0, worst = k >= 2 ? k : 0;
    for (auto &[s, mult] : fp::squarefree(fld, g))
        if (mult >= 2) {
            points += static_cast<unsigned>(fp::deg<fp::SmallField>(s));
            worst = std::max(worst, mult);
        }
    return points >= 2 || worst >= 3;
}

Integer count_H(const Integer &p, unsigned f)
{
    if (f == 0)
        throw DomainError("count_H: degree must be positive");
    Integer sum = 0;
    for (unsigned d = 1; d <= f; d++)
        if (f % d == 0)
            sum += mobius(f / d) * ipow(p, d);
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), f))
        throw InternalError("count_H: Mobius sum not divisible by degree");
    return sum / f;
}

SingularDensity singular_density(unsigned n, uint64_t p, uint64_t budget)
{
    if (n < 1)
        throw DomainError("singular_density: degree must be at least 1");
    if (!is_prime(p))
        throw DomainError("singular_density: p must be prime");
    Integer total = ipow(Integer(static_cast<unsigned long>(p)), n + 1);
    if (total > Integer(static_cast<unsigned long>(budget)))
        throw BudgetError("singular_density: p^(n+1) = " + total.get_str() + " exceeds budget " +
                          std::to_string(budget));
    /* Strong divisibility is invariant under F_p^* scaling: enumerate
       vectors whose first nonzero entry is 1 and weight by p - 1. */
    uint64_t v_proj = 0, w_proj = 0;
    std::vector<uint64_t> c(n + 1);
    for (unsigned lead = 0; lead <= n; lead++) {
        uint64_t tails = 1;
        for (unsigned i = lead + 1; i <= n; i++)
            tails *= p;
        for (uint64_t idx = 0; idx < tails; idx++) {
            std::fill(c.begin(), c.end(), 0);
            c[lead] = 1;
            uint64_t t = idx;
            for (unsigned i = n; i > lead; i--) {
                c[i] = t % p;
                t /= p;
            }
            bool in_v = strongly_divisible_mod_p(c, p);
            bool in_w = in_v || (c[0] == 0 && c[1] == 0);
            v_proj += in_v;
            w_proj += in_w;
        }
    }
    SingularDensity out;
    out.n = n;
    out.p = p;
    /* the zero vector lies in both loci */
    out.V = Integer(static_cast<unsigned long>(v_proj)) * (p - 1) + 1;
    out.W = Integer(static_cast<unsigned long>(w_proj)) * (p - 1) + 1;
    out.c_p = Rational(total - out.W, total);
    out.c_p.canonicalize();
    return out;
}

} // namespace wdr
