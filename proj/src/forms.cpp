#include "wdr/forms.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

#include "wdr/error.hpp"
#include "wdr/matrix.hpp"

namespace wdr {

BinaryForm::BinaryForm(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() < 2)
        throw DomainError("BinaryForm: degree must be at least 1");
    bool zero = true;
    for (const auto &c : coeffs_)
        zero = zero && c == 0;
    if (zero)
        throw DomainError("BinaryForm: zero form");
}

BinaryForm::BinaryForm(std::initializer_list<long> coeffs)
    : BinaryForm(std::vector<Integer>(coeffs.begin(), coeffs.end()))
{
}

Integer BinaryForm::eval(const Integer &x, const Integer &y) const
{
    /* Horner in x with y-powers accumulated */
    Integer acc = 0, ypow = 1;
    const unsigned n = degree();
    std::vector<Integer> yp(n + 1);
    for (unsigned i = 0; i <= n; i++) {
        yp[i] = ypow;
        ypow *= y;
    }
    for (unsigned i = 0; i <= n; i++)
        acc = acc * x + coeffs_[i] * yp[i];
    return acc;
}

Integer BinaryForm::derivative_at(const Integer &x) const
{
    Integer acc = 0;
    const unsigned n = degree();
    for (unsigned i = 0; i < n; i++)
        acc = acc * x + coeffs_[i] * (n - i);
    return acc;
}

BinaryForm BinaryForm::parse(std::string_view text)
{
    auto semi = text.find(';');
    if (semi == std::string_view::npos)
        throw DomainError("form: expected \"n;a_0,...,a_n\"");
    std::string head(text.substr(0, semi));
    unsigned long n;
    try {
        size_t used;
        n = std::stoul(head, &used);
        while (used < head.size() && isspace(static_cast<unsigned char>(head[used])))
            used++;
        if (used != head.size())
            throw DomainError("form: bad degree \"" + head + "\"");
    } catch (const std::logic_error &) {
        throw DomainError("form: bad degree \"" + head + "\"");
    }
    std::vector<Integer> coeffs;
    std::string rest(text.substr(semi + 1));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t\r\n");
        auto e = item.find_last_not_of(" \t\r\n");
        if (b == std::string::npos)
            throw DomainError("form: empty coefficient");
        Integer c;
        if (c.set_str(item.substr(b, e - b + 1), 10) != 0)
            throw DomainError("form: bad coefficient \"" + item + "\"");
        coeffs.push_back(c);
    }
    if (coeffs.size() != n + 1)
        throw DomainError("form: degree " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                          " coefficients, got " + std::to_string(coeffs.size()));
    return BinaryForm(std::move(coeffs));
}

std::string BinaryForm::str() const
{
    std::string out = std::to_string(degree()) + ";";
    for (size_t i = 0; i < coeffs_.size(); i++) {
        if (i)
            out += ",";
        out += coeffs_[i].get_str();
    }
    return out;
}

BinaryForm translate(const BinaryForm &f, const Integer &l)
{
    const unsigned n = f.degree();
    std::vector<Integer> lp(n + 1);
    lp[0] = 1;
    for (unsigned i = 1; i <= n; i++)
        lp[i] = lp[i - 1] * l;
    std::vector<Integer> b(n + 1, 0);
    for (unsigned k = 0; k <= n; k++)
        for (unsigned i = 0; i <= k; i++)
            b[k] += binomial(n - i, k - i) * f[i] * lp[k - i];
    return BinaryForm(std::move(b));
}

BinaryForm reverse(const BinaryForm &f)
{
    std::vector<Integer> c(f.coeffs().rbegin(), f.coeffs().rend());
    return BinaryForm(std::move(c));
}

BinaryForm reflect(const BinaryForm &f)
{
    std::vector<Integer> c = f.coeffs();
    for (size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return BinaryForm(std::move(c));
}

BinaryForm negate(const BinaryForm &f)
{
    std::vector<Integer> c = f.coeffs();
    for (auto &x : c)
        x = -x;
    return BinaryForm(std::move(c));
}

BinaryForm scale_roots(const BinaryForm &f, const Integer &lambda, const Integer &rho)
{
    std::vector<Integer> c = f.coeffs();
    Integer r = lambda;
    for (auto &x : c) {
        x *= r;
        r *= rho;
    }
    return BinaryForm(std::move(c));
}

Integer content(const BinaryForm &f)
{
    Integer g = 0;
    for (const auto &c : f.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0)
        throw DomainError("content: zero form");
    return g;
}

BinaryForm primitive_part(const BinaryForm &f)
{
    Integer g = content(f);
    std::vector<Integer> c = f.coeffs();
    for (auto &x : c)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return BinaryForm(std::move(c));
}

Integer resultant(const std::vector<Integer> &f, const std::vector<Integer> &g)
{
    if (f.empty() || g.empty())
        throw DomainError("resultant: empty coefficient list");
    const size_t n = f.size() - 1, m = g.size() - 1, N = n + m;
    if (N == 0)
        return 1;
    IntMatrix s(N, IntVector(N, 0));
    for (size_t r = 0; r < m; r++)
        for (size_t j = 0; j <= n; j++)
            s[r][r + j] = f[j];
    for (size_t r = 0; r < n; r++)
        for (size_t j = 0; j <= m; j++)
            s[m + r][r + j] = g[j];
    return bareiss_det(std::move(s));
}

Integer resultant(const BinaryForm &f, const BinaryForm &g)
{
    return resultant(f.coeffs(), g.coeffs());
}

namespace {

Integer discriminant_leading_nonzero(const BinaryForm &f)
{
    const unsigned n = f.degree();
    std::vector<Integer> fx(n);
    for (unsigned i = 0; i < n; i++)
        fx[i] = f[i] * (n - i);
    Integer res = resultant(f.coeffs(), fx);
    if (!mpz_divisible_p(res.get_mpz_t(), f[0].get_mpz_t()))
        throw InternalError("discriminant: resultant not divisible by leading coefficient");
    Integer d = res / f[0];
    if ((n * (n - 1) / 2) % 2)
        d = -d;
    return d;
}

} // namespace

Integer discriminant(const BinaryForm &f)
{
    if (f[0] != 0)
        return discriminant_leading_nonzero(f);
    if (f[f.degree()] != 0)
        return discriminant_leading_nonzero(reverse(f));
    /* both X and Y divide f: move a non-root of f(x,1) to the origin */
    for (long l = 1;; l++) {
        BinaryForm g = translate(f, l);
        if (g[g.degree()] != 0)
            return discriminant_leading_nonzero(reverse(g));
    }
}

namespace {

MultiPoly generic_discriminant_uncached(unsigned n)
{
    const size_t nv = n + 1, N = 2 * n - 1;
    std::vector<MultiPoly> a, da;
    for (unsigned i = 0; i <= n; i++)
        a.push_back(MultiPoly::variable(nv, i));
    for (unsigned i = 0; i < n; i++)
        da.push_back(a[i].scaled(n - i));
    PolyMatrix s(N, std::vector<MultiPoly>(N, MultiPoly(nv)));
    for (size_t r = 0; r + 1 < n; r++)
        for (size_t j = 0; j <= n; j++)
            s[r][r + j] = a[j];
    for (size_t r = 0; r < n; r++)
        for (size_t j = 0; j < n; j++)
            s[n - 1 + r][r + j] = da[j];
    MultiPoly res = symbolic_determinant(s);
    Monomial a0{};
    a0[0] = 1;
    return res.divexact(a0, (n * (n - 1) / 2) % 2 ? -1 : 1);
}

/* Integer c with lhs == c * rhs, or 0 if no such c. */
Integer proportionality(const MultiPoly &lhs, const MultiPoly &rhs)
{
    if (rhs.is_zero() || lhs.terms().size() != rhs.terms().size())
        return 0;
    const auto &[m, c] = *rhs.terms().begin();
    auto it = lhs.terms().find(m);
    if (it == lhs.terms().end() || !mpz_divisible_p(it->second.get_mpz_t(), c.get_mpz_t()))
        return 0;
    Integer k = it->second / c;
    return lhs == rhs.scaled(k) ? k : Integer(0);
}

/* Discriminant of a polynomial in variable `var` whose coefficients are
   polynomials in the others. */
MultiPoly discriminant_in(const MultiPoly &p, size_t var)
{
    const unsigned d = p.degree_in(var);
    const size_t nv = p.nvars();
    if (d == 0)
        throw DomainError("discriminant_in: constant polynomial");
    if (d == 1)
        return MultiPoly::constant(nv, 1);
    std::vector<MultiPoly> c, dc;
    for (unsigned k = d + 1; k-- > 0;)
        c.push_back(p.coefficient_in(var, k));
    for (unsigned k = d; k >= 1; k--)
        dc.push_back(p.coefficient_in(var, k).scaled(k));
    const size_t N = 2 * d - 1;
    PolyMatrix s(N, std::vector<MultiPoly>(N, MultiPoly(nv)));
    for (size_t r = 0; r + 1 < d; r++)
        for (size_t j = 0; j <= d; j++)
            s[r][r + j] = c[j];
    for (size_t r = 0; r < d; r++)
        for (size_t j = 0; j < d; j++)
            s[d - 1 + r][r + j] = dc[j];
    MultiPoly res = symbolic_determinant(s);
    if (c[0].terms().size() != 1)
        throw InternalError("discriminant_in: leading coefficient is not a monomial");
    const auto &[mono, coef] = *c[0].terms().begin();
    Integer sgn = (d * (d - 1) / 2) % 2 ? -1 : 1;
    return res.divexact(mono, coef * sgn);
}

} // namespace

MultiPoly generic_discriminant(unsigned n)
{
    if (n < 2 || n > 7)
        throw DomainError("generic_discriminant: degree out of range");
    static std::mutex mu;
    static std::unordered_map<unsigned, MultiPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, generic_discriminant_uncached(n)).first;
    return it->second;
}

DiscStructure symbolic_disc(unsigned n, bool with_F, unsigned max_degree)
{
    if (n < 2 || n > max_degree || n > 7)
        throw DomainError("symbolic_disc: degree " + std::to_string(n) + " outside [2, " +
                          std::to_string(std::min(max_degree, 7u)) + "]");
    if (with_F && n > 4)
        throw DomainError("symbolic_disc: F_n is only exposed for n <= 4");
    const size_t an = n, an1 = n - 1;
    DiscStructure ds{n, generic_discriminant(n), MultiPoly(n + 1), MultiPoly(n + 1),
                     MultiPoly(n + 1), MultiPoly(n + 1), std::nullopt, 0, 0};
    for (const auto &[m, c] : ds.G.terms()) {
        Monomial q = m;
        if (m[an] >= 2) {
            q[an] -= 2;
            ds.Delta4.add_term(q, c);
        } else if (m[an] == 1 && m[an1] >= 1) {
            q[an] -= 1;
            q[an1] -= 1;
            ds.Delta2.add_term(q, c);
        } else if (m[an] == 1) {
            q[an] -= 1;
            ds.Delta1.add_term(q, c);
        } else {
            /* every a_n-free term carries a_{n-1}^2 */
            if (m[an1] < 2)
                throw InternalError("symbolic_disc: a_n-free term without a_{n-1}^2");
            q[an1] -= 2;
            ds.Delta3.add_term(q, c);
        }
    }
    /* compare with truncations, re-embedded in n+1 variables */
    auto widen = [&](const MultiPoly &p) {
        MultiPoly w(n + 1);
        for (const auto &[m, c] : p.terms())
            w.add_term(m, c);
        return w;
    };
    if (n >= 3) {
        MultiPoly trunc = n - 2 >= 2 ? widen(generic_discriminant(n - 2)) : MultiPoly::constant(n + 1, 1);
        MultiPoly cube = MultiPoly::variable(n + 1, n - 2);
        cube = cube * cube * cube;
        ds.delta1_constant = proportionality(ds.Delta1, cube * trunc);
    }
    {
        MultiPoly trunc = n - 1 >= 2 ? widen(generic_discriminant(n - 1)) : MultiPoly::constant(n + 1, 1);
        Integer k = proportionality(ds.Delta3, trunc);
        ds.delta3_sign = (k == 1) ? 1 : (k == -1 ? -1 : 0);
    }
    if (with_F)
        ds.F = discriminant_in(ds.G, an);
    return ds;
}

} // namespace wdr
