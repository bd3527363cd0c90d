#include "wdr/binring.hpp"

#include <bitset>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "roots.hpp"
#include "wdr/error.hpp"
#include "wdr/modp.hpp"

namespace wdr {

/* Forms are stored a_0-leading throughout; the appendix-style indexing with
   the leading coefficient last maps to ours by i -> n - i. */

BinaryForm RingPresentation::basis_form() const
{
    return witness ? translate(origin, witness->l) : origin;
}

IntVector RingPresentation::multiply(const IntVector &u, const IntVector &v) const
{
    IntVector out(n, Integer(0));
    for (unsigned i = 0; i < n; i++) {
        if (u[i] == 0)
            continue;
        for (unsigned j = 0; j < n; j++) {
            if (v[j] == 0)
                continue;
            Integer c = u[i] * v[j];
            for (unsigned k = 0; k < n; k++)
                out[k] += c * table[i][j][k];
        }
    }
    return out;
}

PowerElement power_mul(const BinaryForm &f, const PowerElement &u, const PowerElement &v)
{
    const unsigned n = f.degree();
    PowerElement w(2 * n - 1, Rational(0));
    for (unsigned i = 0; i < n; i++)
        for (unsigned j = 0; j < n; j++)
            w[i + j] += u[i] * v[j];
    /* x^n = -(a_1 x^{n-1} + ... + a_n) / a_0 */
    for (unsigned d = 2 * n - 1; d-- > n;) {
        if (w[d] == 0)
            continue;
        Rational c = w[d] / Rational(f[0]);
        w[d] = 0;
        for (unsigned i = 1; i <= n; i++)
            w[d - i] -= c * f[i];
    }
    w.resize(n);
    return w;
}

PowerElement canonical_basis_element(const BinaryForm &f, unsigned k)
{
    PowerElement b(f.degree(), Rational(0));
    if (k == 0)
        b[0] = 1;
    for (unsigned d = 1; d <= k; d++)
        b[d] = f[k - d];
    return b;
}

std::vector<Rational> basis_coordinates(const std::vector<PowerElement> &basis, PowerElement c)
{
    const size_t n = basis.size();
    std::vector<Rational> y(n);
    for (size_t k = n; k-- > 0;) {
        y[k] = c[k] / basis[k][k];
        if (y[k] != 0)
            for (size_t d = 0; d <= k; d++)
                c[d] -= y[k] * basis[k][d];
    }
    return y;
}

RingPresentation ring_on_basis(const BinaryForm &f, const std::vector<PowerElement> &basis,
                               std::vector<std::string> names)
{
    const unsigned n = f.degree();
    if (f[0] == 0)
        throw DomainError("ring_on_basis: leading coefficient must be nonzero");
    RingPresentation R{n, std::move(names), {}, 0, f, std::nullopt};
    R.table.assign(n, std::vector<IntVector>(n));
    for (unsigned i = 0; i < n; i++)
        for (unsigned j = i; j < n; j++) {
            auto y = basis_coordinates(basis, power_mul(f, basis[i], basis[j]));
            IntVector c(n);
            for (unsigned k = 0; k < n; k++) {
                if (y[k].get_den() != 1)
                    throw InternalError("non-integral structure constant in B_" + std::to_string(i) +
                                        " B_" + std::to_string(j) + ": " + to_string(y[k]) + " for " +
                                        f.str());
                c[k] = y[k].get_num();
            }
            R.table[i][j] = c;
            R.table[j][i] = std::move(c);
        }
    R.disc = ring_disc(R);
    return R;
}

namespace {

/* Subset sums of the factor degrees of f mod p, as a bitmask. */
std::bitset<64> degree_pattern(const BinaryForm &f, uint64_t p)
{
    std::bitset<64> sums;
    sums[0] = true;
    for (const auto &mf : factor_modp(f, Integer(static_cast<unsigned long>(p))).factors)
        for (unsigned e = 0; e < mf.e; e++)
            sums |= sums << mf.degree();
    return sums;
}

/* Remainder of dividing a by b over Q is zero (both leading-first). */
bool divides_over_q(const std::vector<Integer> &b, const std::vector<Integer> &a)
{
    std::vector<Rational> r(a.begin(), a.end());
    const size_t db = b.size() - 1;
    for (size_t i = 0; i + db < r.size(); i++) {
        if (r[i] == 0)
            continue;
        Rational q = r[i] / Rational(b[0]);
        for (size_t j = 0; j <= db; j++)
            r[i + j] -= q * b[j];
    }
    for (const auto &x : r)
        if (x != 0)
            return false;
    return true;
}

enum class Recombination { irreducible, reducible, retry };

template <unsigned Bits>
Recombination recombine(const BinaryForm &f, const std::bitset<64> &allowed)
{
    using C = roots::Complex<Bits>;
    using R = roots::Real<Bits>;
    const unsigned n = f.degree();
    roots::RootSet<Bits> rs;
    try {
        rs = roots::find_roots<Bits>(f.coeffs());
    } catch (const PrecisionError &) {
        return Recombination::retry;
    }
    /* conjugation-closed units: a real root or a conjugate pair */
    struct Unit {
        std::vector<C> z;
    };
    std::vector<Unit> units;
    for (unsigned k = 0; k < rs.z.size(); k++) {
        if (k < rs.real_count)
            units.push_back({{rs.z[k]}});
        else
            units.push_back({{rs.z[k], conj(rs.z[k])}});
    }
    const R lead = roots::to_real<Bits>(f[0]);
    const R quarter = R(0.25);
    const R limit = ldexp(R(1), static_cast<int>(Bits) - 64);
    const size_t u = units.size();
    if (u >= 63)
        throw BudgetError("is_irreducible: too many root units for recombination");
    for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << u); mask++) {
        std::vector<C> zs;
        for (size_t i = 0; i < u; i++)
            if (mask >> i & 1)
                zs.insert(zs.end(), units[i].z.begin(), units[i].z.end());
        const size_t d = zs.size();
        if (2 * d > n || !allowed[d])
            continue;
        /* lead * prod (x - z), leading-first */
        std::vector<C> poly{C(lead)};
        for (const auto &z : zs) {
            poly.push_back(C(0));
            for (size_t j = poly.size() - 1; j > 0; j--)
                poly[j] -= z * poly[j - 1];
        }
        std::vector<Integer> g;
        bool integral = true;
        for (const auto &c : poly) {
            if (abs(real(c)) > limit)
                return Recombination::retry;
            R rr = round(real(c));
            if (abs(imag(c)) > quarter || abs(real(c) - rr) > quarter) {
                integral = false;
                break;
            }
            g.emplace_back(rr.template convert_to<boost::multiprecision::cpp_int>().str());
        }
        if (!integral)
            continue;
        Integer cont = 0;
        for (const auto &c : g)
            mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
        if (cont == 0)
            continue;
        for (auto &c : g)
            c /= cont;
        if (divides_over_q(g, f.coeffs()))
            return Recombination::reducible;
    }
    return Recombination::irreducible;
}

} // namespace

bool is_irreducible(const BinaryForm &f)
{
    const unsigned n = f.degree();
    if (n == 1)
        return true;
    if (n >= 64)
        throw DomainError("is_irreducible: degree too large");
    if (f[0] == 0 || f[n] == 0)
        return false;
    Integer d = discriminant(f);
    if (d == 0)
        return false;
    std::bitset<64> allowed;
    for (unsigned k = 0; k <= n; k++)
        allowed[k] = true;
    std::bitset<64> trivial;
    trivial[0] = trivial[n] = true;
    Integer bad = f[0] * d;
    for (uint64_t p : primes_below(100)) {
        if (mpz_divisible_ui_p(bad.get_mpz_t(), p))
            continue;
        allowed &= degree_pattern(f, p);
        if (allowed == trivial)
            return true;
    }
    Recombination r = recombine<256>(f, allowed);
    if (r == Recombination::retry)
        r = recombine<1024>(f, allowed);
    if (r == Recombination::retry)
        r = recombine<4096>(f, allowed);
    if (r == Recombination::retry)
        throw PrecisionError("is_irreducible: recombination inconclusive at 4096 bits");
    return r == Recombination::irreducible;
}

RingPresentation canonical_basis_ring_unchecked(const BinaryForm &f)
{
    const unsigned n = f.degree();
    if (f[0] == 0)
        throw DomainError("canonical_basis_ring: leading coefficient is zero; reverse or translate first");
    if (n >= 2 && discriminant(f) == 0)
        throw DomainError("canonical_basis_ring: form has a repeated factor");
    std::vector<PowerElement> basis;
    std::vector<std::string> names;
    for (unsigned k = 0; k < n; k++) {
        basis.push_back(canonical_basis_element(f, k));
        names.push_back("B_" + std::to_string(k));
    }
    RingPresentation R = ring_on_basis(f, basis, std::move(names));
    if (auto bad = shifted_row_mismatch(R); !bad.empty())
        throw InternalError("canonical_basis_ring: " + bad);
    return R;
}

RingPresentation canonical_basis_ring(const BinaryForm &f)
{
    if (!is_irreducible(f))
        throw DomainError("canonical_basis_ring: " + f.str() + " is reducible over Q");
    return canonical_basis_ring_unchecked(f);
}

IntMatrix trace_form(const RingPresentation &R)
{
    const unsigned n = R.n;
    IntVector tr(n, Integer(0));
    for (unsigned k = 0; k < n; k++)
        for (unsigned l = 0; l < n; l++)
            tr[k] += R.table[k][l][l];
    IntMatrix T(n, IntVector(n));
    for (unsigned i = 0; i < n; i++)
        for (unsigned j = 0; j < n; j++) {
            Integer s = 0;
            for (unsigned k = 0; k < n; k++)
                s += R.table[i][j][k] * tr[k];
            T[i][j] = s;
        }
    return T;
}

Integer ring_disc(const RingPresentation &R)
{
    return bareiss_det(trace_form(R));
}

std::string ring_axiom_violation(const RingPresentation &R)
{
    const unsigned n = R.n;
    auto e = [&](unsigned j) {
        IntVector v(n, Integer(0));
        v[j] = 1;
        return v;
    };
    for (unsigned j = 0; j < n; j++)
        if (R.table[0][j] != e(j))
            return "B_0 B_" + std::to_string(j) + " != B_" + std::to_string(j);
    for (unsigned i = 0; i < n; i++)
        for (unsigned j = 0; j < n; j++)
            if (R.table[i][j] != R.table[j][i])
                return "not commutative at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    for (unsigned i = 0; i < n; i++)
        for (unsigned j = 0; j < n; j++)
            for (unsigned k = 0; k < n; k++)
                if (R.multiply(R.table[i][j], e(k)) != R.multiply(e(i), R.table[j][k]))
                    return "not associative at (" + std::to_string(i) + "," + std::to_string(j) +
                           "," + std::to_string(k) + ")";
    return {};
}

Integer quotient_size(const RingPresentation &R, const Integer &p)
{
    /* the ideal generated by p: all p B_i B_j */
    IntMatrix gens;
    for (unsigned i = 0; i < R.n; i++)
        for (unsigned j = 0; j < R.n; j++) {
            IntVector v = R.table[i][j];
            for (auto &x : v)
                x *= p;
            gens.push_back(std::move(v));
        }
    IntMatrix h = hermite_normal_form(gens);
    if (h.size() != R.n)
        throw InternalError("quotient_size: ideal pR is not of full rank");
    return hnf_index(h);
}

IntVector shift_offsets(const RingPresentation &R)
{
    const BinaryForm g = R.basis_form();
    const Integer m = R.witness_modulus();
    IntVector s(R.n, Integer(0));
    for (unsigned k = 1; k < R.n; k++)
        s[k] = g[k];
    if (R.n >= 2) {
        if (!mpz_divisible_p(g[R.n - 1].get_mpz_t(), m.get_mpz_t()))
            throw InternalError("shift_offsets: m does not divide a_{n-1} of the translated form");
        s[R.n - 1] = g[R.n - 1] / m;
    }
    return s;
}

std::vector<std::vector<IntVector>> shifted_table(const RingPresentation &R)
{
    const unsigned n = R.n;
    const IntVector s = shift_offsets(R);
    /* C_k = B_k + s_k B_0 in B-coordinates */
    auto c_vec = [&](unsigned k) {
        IntVector v(n, Integer(0));
        v[k] = 1;
        v[0] += s[k];
        return v;
    };
    /* B-coordinates x to C-coordinates: y_0 = x_0 - sum s_k x_k */
    auto to_c = [&](IntVector x) {
        for (unsigned k = 1; k < n; k++)
            x[0] -= s[k] * x[k];
        return x;
    };
    std::vector<std::vector<IntVector>> t(n, std::vector<IntVector>(n));
    for (unsigned i = 0; i < n; i++)
        for (unsigned j = 0; j < n; j++)
            t[i][j] = to_c(R.multiply(c_vec(i), c_vec(j)));
    return t;
}

std::string shifted_row_mismatch(const RingPresentation &R)
{
    const unsigned n = R.n;
    if (n < 2)
        return {};
    const auto t = shifted_table(R);
    const BinaryForm g = R.basis_form();
    const Integer m = R.witness_modulus();
    const unsigned last = n - 1;
    /* P_0 = a_0 C_0, P_k = C_k */
    auto P = [&](unsigned k) {
        IntVector v(n, Integer(0));
        v[k] = k == 0 ? g[0] : Integer(1);
        return v;
    };
    for (unsigned k = 1; k <= last; k++) {
        Integer num = g[n], den = k == last ? Integer(m * m) : m;
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            return "a_n not divisible by " + to_string(den);
        Integer coef_last = k == last ? Integer(g[last] / m) : g[k];
        IntVector want = P(k - 1);
        for (auto &x : want)
            x *= -(num / den);
        want[last] += coef_last;
        if (t[last][k] != want)
            return "shifted row C_" + std::to_string(last) + " C_" + std::to_string(k) + " of " +
                   g.str() + " disagrees with the closed form";
    }
    return {};
}

/* ---- fractional modules ---- */

IdealPresentation normalize_module(std::string role, IntMatrix rows, Integer denominator)
{
    if (denominator < 0) {
        denominator = -denominator;
        for (auto &r : rows)
            for (auto &x : r)
                x = -x;
    }
    IntMatrix h = hermite_normal_form(std::move(rows));
    Integer g = denominator;
    for (const auto &r : h)
        for (const auto &x : r)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
        for (auto &r : h)
            for (auto &x : r)
                x /= g;
        denominator /= g;
    }
    return {std::move(role), std::move(h), std::move(denominator)};
}

IdealPresentation module_product(const RingPresentation &R, const IdealPresentation &a,
                                 const IdealPresentation &b)
{
    IntMatrix rows;
    for (const auto &u : a.generators)
        for (const auto &v : b.generators)
            rows.push_back(R.multiply(u, v));
    return normalize_module("product", std::move(rows), a.denominator * b.denominator);
}

bool is_module(const RingPresentation &R, const IdealPresentation &M)
{
    for (unsigned i = 0; i < R.n; i++) {
        IntVector e(R.n, Integer(0));
        e[i] = 1;
        for (const auto &g : M.generators)
            if (!hnf_contains(M.generators, R.multiply(e, g)))
                return false;
    }
    return true;
}

bool same_module(const IdealPresentation &a, const IdealPresentation &b)
{
    return a.denominator == b.denominator && a.generators == b.generators;
}

IdealBases ideal_bases(const RingPresentation &R)
{
    const BinaryForm &f = R.origin;
    const unsigned n = R.n;
    if (R.witness)
        throw DomainError("ideal_bases: needs the canonical ring R_f");
    if (content(f) != 1)
        throw DomainError("ideal_bases: " + f.str() + " is not primitive; pass primitive_part(f)");
    const Integer &a0 = f[0];
    std::vector<PowerElement> basis;
    for (unsigned k = 0; k < n; k++)
        basis.push_back(canonical_basis_element(f, k));
    PowerElement delta(n, Rational(0));
    if (n == 1) {
        delta[0] = Rational(-f[1], f[0]);
        delta[0].canonicalize();
    } else {
        delta[1] = 1;
    }
    /* a_0 delta B_j, integral in B-coordinates */
    IntMatrix mult(n);
    for (unsigned j = 0; j < n; j++) {
        auto y = basis_coordinates(basis, power_mul(f, delta, basis[j]));
        for (auto &x : y) {
            Rational t = x * a0;
            if (t.get_den() != 1)
                throw InternalError("ideal_bases: a_0 delta is not in R_f");
            mult[j].push_back(t.get_num());
        }
    }
    IntMatrix sum_rows;
    for (unsigned j = 0; j < n; j++) {
        IntVector e(n, Integer(0));
        e[j] = a0;
        sum_rows.push_back(std::move(e));
        sum_rows.push_back(mult[j]);
    }
    IdealBases out;
    out.sum = normalize_module("R_f+R_f*delta", std::move(sum_rows), a0);
    /* R_f cap R_f delta^{-1} = { y in Z^n : sum y_j mult[j] = 0 mod a_0 };
       HNF of [y-image | y] with the a_0-multiples in front, kernel rows last */
    const Integer a0abs = abs(a0);
    IntMatrix aug;
    for (unsigned j = 0; j < n; j++) {
        IntVector row(2 * n, Integer(0));
        for (unsigned k = 0; k < n; k++)
            row[k] = mult[j][k];
        row[n + j] = 1;
        aug.push_back(std::move(row));
    }
    for (unsigned k = 0; k < n; k++) {
        IntVector row(2 * n, Integer(0));
        row[k] = a0abs;
        aug.push_back(std::move(row));
    }
    IntMatrix inter;
    for (auto &row : hermite_normal_form(std::move(aug))) {
        bool kernel = true;
        for (unsigned k = 0; k < n; k++)
            kernel = kernel && row[k] == 0;
        if (kernel)
            inter.emplace_back(row.begin() + n, row.end());
    }
    out.intersection = normalize_module("R_f cap R_f*delta^-1", std::move(inter), 1);
    out.product = module_product(R, out.sum, out.intersection);
    return out;
}

IdealBases ideal_bases(const BinaryForm &f)
{
    if (content(f) != 1)
        throw DomainError("ideal_bases: " + f.str() + " is not primitive; pass primitive_part(f)");
    return ideal_bases(canonical_basis_ring(f));
}

} // namespace wdr
