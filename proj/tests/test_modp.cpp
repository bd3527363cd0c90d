#include <gtest/gtest.h>

#include <random>

#include "wdr/error.hpp"
#include "wdr/forms.hpp"
#include "wdr/modp.hpp"

using namespace wdr;

namespace {

using IPoly = std::vector<long>; /* low-first, small p */

IPoly pmod(IPoly a, const IPoly &b, long p)
{
    while (a.size() >= b.size() && !a.empty()) {
        long c = a.back() % p; /* b monic */
        for (size_t j = 0; j < b.size(); j++) {
            size_t idx = a.size() - b.size() + j;
            a[idx] = ((a[idx] - c * b[j]) % p + p) % p;
        }
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
    return a;
}

std::vector<IPoly> monic_polys(unsigned d, long p)
{
    std::vector<IPoly> out;
    long count = 1;
    for (unsigned i = 0; i < d; i++)
        count *= p;
    for (long idx = 0; idx < count; idx++) {
        IPoly q(d + 1);
        long t = idx;
        for (unsigned i = 0; i < d; i++) {
            q[i] = t % p;
            t /= p;
        }
        q[d] = 1;
        out.push_back(q);
    }
    return out;
}

bool irreducible_bruteforce(const IPoly &q, long p)
{
    unsigned d = static_cast<unsigned>(q.size() - 1);
    for (unsigned k = 1; 2 * k <= d; k++)
        for (const auto &g : monic_polys(k, p))
            if (pmod(q, g, p).empty())
                return false;
    return true;
}

BinaryForm form_from(const std::vector<long> &c) { return BinaryForm(std::vector<Integer>(c.begin(), c.end())); }

} // namespace

TEST(ModP, FactorExamples)
{
    FactorModP a = factor_modp(BinaryForm{1, 0, 1}, 2);
    ASSERT_EQ(a.factors.size(), 1u);
    EXPECT_EQ(a.factors[0].coeffs, (std::vector<Integer>{1, 1}));
    EXPECT_EQ(a.factors[0].e, 2u);
    FactorModP b = factor_modp(BinaryForm{1, 1, 1}, 2);
    ASSERT_EQ(b.factors.size(), 1u);
    EXPECT_EQ(b.factors[0].degree(), 2u);
    FactorModP c = factor_modp(BinaryForm{2, 1, 1}, 2);
    EXPECT_EQ(c.infinity_multiplicity, 1u);
    ASSERT_EQ(c.factors.size(), 1u);
    EXPECT_EQ(c.factors[0].coeffs, (std::vector<Integer>{1, 1}));
    EXPECT_THROW(factor_modp(BinaryForm{3, 6, 9}, 3), DomainError);
}

TEST(ModP, FactorizationIsCompleteAndIrreducible)
{
    std::mt19937_64 rng(21);
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int t = 0; t < 150; t++) {
            unsigned n = 1 + rng() % 6;
            std::vector<long> c(n + 1);
            for (auto &x : c)
                x = static_cast<long>(rng() % 41) - 20;
            if (std::all_of(c.begin(), c.end(), [&](long x) { return x % p == 0; }))
                continue;
            BinaryForm f = form_from(c);
            FactorModP fac = factor_modp(f, p);
            EXPECT_EQ(expand(fac), reduce_coeffs(f, p)) << f.str() << " p=" << p;
            unsigned total = fac.infinity_multiplicity;
            for (size_t i = 0; i < fac.factors.size(); i++) {
                const auto &mf = fac.factors[i];
                total += mf.e * mf.degree();
                EXPECT_EQ(mf.coeffs[0], 1);
                IPoly low;
                for (size_t j = mf.coeffs.size(); j-- > 0;)
                    low.push_back(mpz_get_si(mf.coeffs[j].get_mpz_t()));
                EXPECT_TRUE(irreducible_bruteforce(low, p));
                for (size_t j = 0; j < i; j++)
                    EXPECT_NE(fac.factors[j].coeffs, mf.coeffs);
            }
            EXPECT_EQ(total, n);
        }
    }
}

TEST(ModP, LargePrimeField)
{
    Integer p;
    Integer start = Integer(1) << 64;
    mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
    /* (x - 5)^2 (x + 1) (x^2 + 1) (x^2 - 3) over Z */
    BinaryForm f{1, -9, 13, 43, -33, -23, -45, -75};
    FactorModP fac = factor_modp(f, p);
    EXPECT_EQ(expand(fac), reduce_coeffs(f, p));
    unsigned total = 0;
    for (auto &mf : fac.factors)
        total += mf.e * mf.degree();
    EXPECT_EQ(total, 7u);
    DoubleRootProfile prof = double_root_profile(f, p);
    EXPECT_EQ(prof.kind, ProfileKind::affine_double);
    EXPECT_EQ(*prof.root, 5);
}

TEST(ModP, ProfileExamples)
{
    DoubleRootProfile a = double_root_profile(BinaryForm{1, 1, 0, 0}, 5);
    EXPECT_EQ(a.kind, ProfileKind::affine_double);
    EXPECT_EQ(*a.root, 0);
    DoubleRootProfile b = double_root_profile(BinaryForm{0, 0, 1, 0, 0}, 3);
    EXPECT_EQ(b.kind, ProfileKind::strongly_divisible);
    EXPECT_EQ(b.reason, StrongReason::two_double_points);
    /* (X^2 + XY + Y^2)^2 */
    DoubleRootProfile c = double_root_profile(BinaryForm{1, 2, 3, 2, 1}, 2);
    EXPECT_EQ(c.kind, ProfileKind::strongly_divisible);
    EXPECT_EQ(c.reason, StrongReason::two_double_points);
    DoubleRootProfile d = double_root_profile(BinaryForm{1, 3, 3, 1}, 7);
    EXPECT_EQ(d.reason, StrongReason::rational_triple);
    DoubleRootProfile e = double_root_profile(BinaryForm{3, 1, 0}, 3);
    EXPECT_EQ(e.kind, ProfileKind::smooth);
    DoubleRootProfile g = double_root_profile(BinaryForm{3, 0, 1}, 3);
    EXPECT_EQ(g.kind, ProfileKind::infinity_double);
    DoubleRootProfile h = double_root_profile(BinaryForm{1, 0, 1}, 2);
    EXPECT_EQ(h.kind, ProfileKind::affine_double);
    EXPECT_EQ(*h.root, 1);
}

TEST(ModP, CountHMatchesEnumeration)
{
    EXPECT_EQ(count_H(2, 1), 2);
    EXPECT_EQ(count_H(2, 2), 1);
    EXPECT_EQ(count_H(3, 3), 8);
    for (long p : {2L, 3L, 5L})
        for (unsigned f = 1; f <= 4; f++) {
            long count = 0;
            for (const auto &q : monic_polys(f, p))
                count += irreducible_bruteforce(q, p);
            EXPECT_EQ(count_H(p, f), count) << "p=" << p << " f=" << f;
        }
}

namespace {

/* p^2 | disc(f + p g) for every g with coefficients in [0, p) */
bool lifted_strongly_divisible(const std::vector<long> &c, long p)
{
    const long p2 = p * p;
    long lifts = 1;
    for (size_t i = 0; i < c.size(); i++)
        lifts *= p;
    for (long g = 0; g < lifts; g++) {
        std::vector<long> lift = c;
        long u = g;
        for (auto &x : lift) {
            x += p * (u % p);
            u /= p;
        }
        if (std::all_of(lift.begin(), lift.end(), [](long x) { return x == 0; }))
            continue;
        Integer d = discriminant(form_from(lift));
        if (!mpz_divisible_ui_p(d.get_mpz_t(), p2))
            return false;
    }
    return true;
}

} // namespace

TEST(ModP, StrongDivisibilityMatchesLiftedDiscriminantsAtThree)
{
    const long p = 3;
    for (long idx = 0; idx < 81; idx++) {
        std::vector<long> c = {idx % 3, idx / 3 % 3, idx / 9 % 3, idx / 27};
        std::vector<uint64_t> red(c.begin(), c.end());
        EXPECT_EQ(strongly_divisible_mod_p(red, p), lifted_strongly_divisible(c, p))
            << c[0] << c[1] << c[2] << c[3];
    }
}

TEST(ModP, LiftedDefinitionAtTwoSeesEveryMultiplePoint)
{
    /* disc = 0 or 1 mod 4, so a single double point mod 2 already forces
       4 | disc; the lifted definition degenerates to "has a multiple point". */
    for (long idx = 0; idx < 16; idx++) {
        std::vector<long> c = {idx & 1, idx >> 1 & 1, idx >> 2 & 1, idx >> 3 & 1};
        bool zero = idx == 0;
        bool multiple = zero || double_root_profile(form_from(c), 2).kind != ProfileKind::smooth;
        EXPECT_EQ(lifted_strongly_divisible(c, 2), multiple) << idx;
    }
}

TEST(ModP, SingularDensityCounts)
{
    SingularDensity a = singular_density(2, 3);
    EXPECT_EQ(a.V, 1);
    EXPECT_EQ(a.W, 3);
    EXPECT_EQ(a.c_p, Rational(8, 9));
    for (uint64_t p : {3u, 5u, 7u}) {
        SingularDensity s = singular_density(2, p);
        EXPECT_EQ(s.W, p);
        EXPECT_EQ(s.c_p, 1 - Rational(1, p * p));
    }
    /* n = 3, p = 2 against a direct scan of all 16 points */
    uint64_t v = 0, w = 0;
    for (uint64_t idx = 0; idx < 16; idx++) {
        std::vector<uint64_t> c = {idx & 1, idx >> 1 & 1, idx >> 2 & 1, idx >> 3 & 1};
        bool in_v = strongly_divisible_mod_p(c, 2);
        v += in_v;
        w += in_v || (c[0] == 0 && c[1] == 0);
    }
    SingularDensity s = singular_density(3, 2);
    EXPECT_EQ(s.V, v);
    EXPECT_EQ(s.W, w);
    EXPECT_THROW(singular_density(6, 13, 1000), BudgetError);
}

TEST(ModP, SingularLocusHasCodimensionTwo)
{
    /* p^2 (1 - c_p) stays bounded as p grows */
    for (unsigned n = 3; n <= 4; n++) {
        Rational worst = 0;
        for (uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
            if (n == 4 && p > 7)
                continue;
            SingularDensity s = singular_density(n, p);
            Rational scaled = (1 - s.c_p) * Rational(p * p);
            worst = std::max(worst, scaled);
        }
        EXPECT_LT(worst, Rational(8)) << "n=" << n;
    }
}
