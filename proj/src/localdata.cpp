#include "wdr/localdata.hpp"

#include <istream>
#include <regex>
#include <sstream>

#include "wdr/error.hpp"
#include "wdr/weakdiv.hpp"

namespace wdr {

namespace {

using Coeffs = std::vector<Integer>; /* leading-first */

Coeffs form_mul(const Coeffs &a, const Coeffs &b)
{
    Coeffs c(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++)
            c[i + j] += a[i] * b[j];
    return c;
}

/* Remainder of a (leading-first, any degree) modulo the monic b over F_p,
   as leading-first coefficients in [0, p). */
Coeffs rem_monic_modp(Coeffs a, const Coeffs &b, const Integer &p)
{
    for (auto &x : a)
        x = mod_floor(x, p);
    const size_t db = b.size() - 1;
    for (size_t i = 0; i + db < a.size(); i++) {
        if (a[i] == 0)
            continue;
        Integer q = a[i];
        for (size_t j = 0; j <= db; j++)
            a[i + j] = mod_floor(a[i + j] - q * b[j], p);
    }
    return Coeffs(a.end() - static_cast<long>(std::min(db, a.size())), a.end());
}

bool all_zero(const Coeffs &a)
{
    for (const auto &x : a)
        if (x != 0)
            return false;
    return true;
}

/* Dedekind test for each factor: not locally maximal iff e >= 2 and the
   factor divides (f - lift) / p mod p. */
std::vector<bool> nonmaximal_flags(const BinaryForm &f, const FactorModP &fac)
{
    const Integer &p = fac.p;
    Coeffs g{fac.unit};
    if (fac.infinity_multiplicity > 0) {
        Coeffs yk(fac.infinity_multiplicity + 1, Integer(0));
        yk.back() = 1;
        g = form_mul(g, yk);
    }
    for (const auto &mf : fac.factors)
        for (unsigned j = 0; j < mf.e; j++)
            g = form_mul(g, mf.coeffs);
    Coeffs h(f.degree() + 1);
    for (size_t i = 0; i <= f.degree(); i++) {
        Integer d = f[i] - g[i];
        if (!mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
            throw InternalError("dedekind_kummer: lift does not reduce to f mod p");
        h[i] = d / p;
    }
    std::vector<bool> out;
    for (const auto &mf : fac.factors)
        out.push_back(mf.e >= 2 && all_zero(rem_monic_modp(h, mf.coeffs, p)));
    return out;
}

void require_primitive_separable(const BinaryForm &f, const char *who)
{
    if (content(f) != 1)
        throw DomainError(std::string(who) + ": " + f.str() + " is not primitive");
    if (f.degree() >= 2 && discriminant(f) == 0)
        throw DomainError(std::string(who) + ": " + f.str() + " has zero discriminant");
}

std::vector<LocalPart> case_parts(QuadCase c)
{
    switch (c) {
    case QuadCase::A:
        return {{1, 1}, {1, 1}};
    case QuadCase::B:
        return {{1, 2}};
    case QuadCase::C:
        return {{2, 1}};
    }
    return {};
}

QuadCase case_of(const std::vector<LocalPart> &split)
{
    unsigned s = 0;
    for (const auto &q : split)
        s += q.e * q.f;
    if (s != 2)
        throw DomainError("pseudo-maximal enumeration needs sum e f = 2");
    if (split.size() == 2)
        return QuadCase::A;
    return split[0].f == 2 ? QuadCase::B : QuadCase::C;
}

} // namespace

bool SplittingProfile::maximal() const
{
    for (const auto &q : parts)
        if (!q.locally_maximal)
            return false;
    return true;
}

unsigned SplittingProfile::degree_sum() const
{
    unsigned s = 0;
    for (const auto &q : parts)
        s += q.e * q.f;
    return s;
}

SplittingProfile dedekind_kummer(const BinaryForm &f, const Integer &p)
{
    require_primitive_separable(f, "dedekind_kummer");
    FactorModP fac = factor_modp(f, p);
    auto flags = nonmaximal_flags(f, fac);
    SplittingProfile out{p, {}};
    for (size_t i = 0; i < fac.factors.size(); i++)
        out.parts.push_back({fac.factors[i].e, fac.factors[i].degree(), !flags[i], static_cast<int>(i)});
    if (const unsigned k = fac.infinity_multiplicity; k > 0) {
        bool maximal = true;
        if (k >= 2) {
            /* the point at infinity becomes x = 0 on the reversed form */
            FactorModP rfac = factor_modp(reverse(f), p);
            auto rflags = nonmaximal_flags(reverse(f), rfac);
            for (size_t i = 0; i < rfac.factors.size(); i++)
                if (rfac.factors[i].coeffs == Coeffs{1, 0})
                    maximal = !rflags[i];
        }
        out.parts.push_back({k, 1, maximal, -1});
    }
    if (out.degree_sum() != f.degree())
        throw InternalError("dedekind_kummer: sum of e f differs from the degree");
    return out;
}

std::string to_string(QuadCase c)
{
    switch (c) {
    case QuadCase::A:
        return "A";
    case QuadCase::B:
        return "B";
    case QuadCase::C:
        return "C";
    }
    return "?";
}

std::string to_string(LocalKind k)
{
    switch (k) {
    case LocalKind::maximal:
        return "maximal";
    case LocalKind::pseudo_maximal:
        return "pseudo_maximal";
    case LocalKind::several_pseudo_maximal:
        return "several_pseudo_maximal";
    case LocalKind::other:
        return "other";
    }
    return "?";
}

QuadraticFactor quadratic_factor(const BinaryForm &f, const Integer &p)
{
    require_primitive_separable(f, "quadratic_factor");
    DoubleRootProfile prof = double_root_profile(f, p);
    BinaryForm g = f;
    if (prof.kind == ProfileKind::affine_double)
        g = translate(f, *prof.root);
    else if (prof.kind == ProfileKind::infinity_double)
        g = reverse(f);
    else
        throw DomainError("quadratic_factor: " + f.str() + " has no unique double point mod " + to_string(p));
    /* g(x, 1) = Q H over Z_p with Q = x^2 + b x + c = x^2 mod p. Linear
       Hensel steps: Q += p^k (R / p^k) H^{-1} mod (p, x^2), R = g mod Q. */
    const unsigned n = g.degree();
    const unsigned vdisc = valuation(discriminant(f), p);
    unsigned target = vdisc + 4;
    Integer b = 0, c = 0;
    unsigned k = 1;
    for (;;) {
        const Integer pN = ipow(p, target);
        for (; k < target; k++) {
            /* divide g by Q: leading-first synthetic division */
            Coeffs q(g.coeffs());
            for (size_t i = 0; i + 2 <= n; i++) {
                q[i + 1] -= b * q[i];
                q[i + 2] -= c * q[i];
            }
            Integer r1 = q[n - 1], r0 = q[n];
            /* H(0) and H'(0) are the last two quotient coefficients */
            Integer h0 = q[n - 2], h1 = n >= 3 ? q[n - 3] : Integer(0);
            const Integer pk = ipow(p, k);
            if (!mpz_divisible_p(r1.get_mpz_t(), pk.get_mpz_t()) ||
                !mpz_divisible_p(r0.get_mpz_t(), pk.get_mpz_t()))
                throw InternalError("quadratic_factor: Hensel step lost precision");
            Integer t1 = mod_floor(r1 / pk, p), t0 = mod_floor(r0 / pk, p);
            Integer inv0 = inverse_mod(mod_floor(h0, p), p);
            Integer inv1 = mod_floor(-h1 * inv0 * inv0, p);
            Integer e0 = mod_floor(t0 * inv0, p), e1 = mod_floor(t0 * inv1 + t1 * inv0, p);
            c = mod_floor(c + pk * e0, pN);
            b = mod_floor(b + pk * e1, pN);
        }
        Integer D = mod_floor(b * b - 4 * c, pN);
        if (D != 0) {
            unsigned v = valuation(D, p);
            if (v + 3 < target) {
                QuadraticFactor out{QuadCase::A, v, 0};
                Integer unit = D / ipow(p, v);
                if (p == 2) {
                    Integer u8 = mod_floor(unit, Integer(8));
                    if (v % 2 == 1) {
                        out.kase = QuadCase::C;
                        out.maximal_disc_valuation = 3;
                    } else if (u8 == 1) {
                        out.kase = QuadCase::A;
                    } else if (u8 == 5) {
                        out.kase = QuadCase::B;
                    } else {
                        out.kase = QuadCase::C;
                        out.maximal_disc_valuation = 2;
                    }
                } else if (v % 2 == 1) {
                    out.kase = QuadCase::C;
                    out.maximal_disc_valuation = 1;
                } else {
                    Integer half = (p - 1) / 2, sym;
                    mpz_powm(sym.get_mpz_t(), unit.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
                    out.kase = sym == 1 ? QuadCase::A : QuadCase::B;
                }
                return out;
            }
        }
        target *= 2;
    }
}

SplittingProfile field_profile(const BinaryForm &f, const Integer &p)
{
    require_primitive_separable(f, "field_profile");
    FactorModP fac = factor_modp(f, p);
    SplittingProfile out{p, {}};
    unsigned doubles = 0;
    for (size_t i = 0; i < fac.factors.size(); i++) {
        const auto &mf = fac.factors[i];
        if (mf.e == 1)
            out.parts.push_back({1, mf.degree(), true, static_cast<int>(i)});
        else if (mf.e == 2 && mf.degree() == 1)
            doubles++;
        else
            throw DomainError("field_profile: " + f.str() + " has a multiple point of multiplicity or degree > 1 mod " +
                              to_string(p));
    }
    const unsigned k = fac.infinity_multiplicity;
    if (k == 1)
        out.parts.push_back({1, 1, true, -1});
    else if (k == 2)
        doubles++;
    else if (k > 2)
        throw DomainError("field_profile: triple point at infinity mod " + to_string(p));
    if (doubles > 1)
        throw DomainError("field_profile: " + f.str() + " has two double points mod " + to_string(p));
    if (doubles == 1)
        for (auto part : case_parts(quadratic_factor(f, p).kase))
            out.parts.push_back(part);
    if (out.degree_sum() != f.degree())
        throw InternalError("field_profile: sum of e f differs from the degree");
    return out;
}

std::optional<PseudoMaxDescriptor> enumerate_pseudo_maximal(const std::vector<LocalPart> &split,
                                                             const std::vector<unsigned> &conductor,
                                                             const Integer &p)
{
    QuadCase c = case_of(split);
    const size_t want = c == QuadCase::A ? 2 : 1;
    if (conductor.size() != want)
        throw DomainError("enumerate_pseudo_maximal: case " + to_string(c) + " takes " + std::to_string(want) +
                          " conductor exponents");
    switch (c) {
    case QuadCase::A:
        if (conductor[0] != conductor[1] || conductor[0] == 0)
            return std::nullopt;
        return PseudoMaxDescriptor{c, conductor, conductor[0], ipow(p, conductor[0])};
    case QuadCase::B:
        if (conductor[0] == 0)
            return std::nullopt;
        return PseudoMaxDescriptor{c, conductor, conductor[0], ipow(p, conductor[0])};
    case QuadCase::C:
        if (conductor[0] == 0 || conductor[0] % 2 == 1)
            return std::nullopt;
        return PseudoMaxDescriptor{c, conductor, conductor[0] / 2, ipow(p, conductor[0] / 2)};
    }
    return std::nullopt;
}

PseudoMaxDescriptor pseudo_maximal_of_index(const std::vector<LocalPart> &split, unsigned r, const Integer &p)
{
    if (r == 0)
        throw DomainError("pseudo_maximal_of_index: r must be positive");
    QuadCase c = case_of(split);
    std::vector<unsigned> cond = c == QuadCase::A ? std::vector<unsigned>{r, r}
                                 : c == QuadCase::B ? std::vector<unsigned>{r}
                                                    : std::vector<unsigned>{2 * r};
    return *enumerate_pseudo_maximal(split, cond, p);
}

OrderClass classify_order(const BinaryForm &f, const WeakDivWitness &w, const Factorization &disc_factors)
{
    require_primitive_separable(f, "classify_order");
    if (!is_witness(f, w))
        throw DomainError("classify_order: (" + to_string(w.m) + ", " + to_string(w.l) + ") is not a witness");
    const Integer d = discriminant(f);
    if (factorization_value(disc_factors) != abs(d))
        throw DomainError("classify_order: factorization does not multiply to |disc(f)|");
    OrderClass out{{}, true, true};
    for (const auto &[p, e] : disc_factors) {
        const unsigned vm = w.m == 1 ? 0u : valuation(w.m, p);
        const unsigned v = e - 2 * vm;
        if (v < 2)
            continue;
        PrimeClass pc{p, LocalKind::other, v, std::nullopt, 0};
        DoubleRootProfile prof = double_root_profile(f, p);
        if (prof.kind == ProfileKind::affine_double || prof.kind == ProfileKind::infinity_double) {
            QuadraticFactor q = quadratic_factor(f, p);
            if (v < q.maximal_disc_valuation || (v - q.maximal_disc_valuation) % 2 != 0)
                throw InternalError("classify_order: index exponent of " + f.str() + " at " + to_string(p) +
                                    " is not integral");
            const unsigned r = (v - q.maximal_disc_valuation) / 2;
            if (r == 0) {
                pc.kind = LocalKind::maximal;
            } else {
                pc.kind = LocalKind::pseudo_maximal;
                pc.descriptor = pseudo_maximal_of_index(case_parts(q.kase), r, p);
                pc.nonmaximal_parts = 1;
            }
        } else if (vm == 0) {
            SplittingProfile sp = dedekind_kummer(f, p);
            bool all_two = true;
            for (const auto &part : sp.parts)
                if (!part.locally_maximal) {
                    pc.nonmaximal_parts++;
                    all_two = all_two && part.e * part.f == 2;
                }
            if (pc.nonmaximal_parts == 0)
                pc.kind = LocalKind::maximal;
            else if (!all_two)
                pc.kind = LocalKind::other;
            else
                pc.kind = pc.nonmaximal_parts == 1 ? LocalKind::pseudo_maximal : LocalKind::several_pseudo_maximal;
        }
        out.sudo_maximal = out.sudo_maximal && pc.kind != LocalKind::other;
        out.restricted_sudo_maximal = out.restricted_sudo_maximal &&
                                      (pc.kind == LocalKind::maximal || pc.kind == LocalKind::pseudo_maximal);
        out.primes.push_back(std::move(pc));
    }
    return out;
}

OrderClass classify_order(const BinaryForm &f, const WeakDivWitness &w)
{
    return classify_order(f, w, factor_integer(discriminant(f)));
}

Feasibility small_prime_feasibility(const SplittingProfile &profile)
{
    std::map<unsigned, unsigned> by_degree;
    for (const auto &q : profile.parts)
        by_degree[q.f]++;
    for (const auto &[deg, count] : by_degree) {
        Integer bound = count_H(profile.p, deg);
        if (deg == 1)
            bound += 1;
        if (count > bound)
            return {false, "T(" + to_string(profile.p) + "," + std::to_string(deg) + ") = " + std::to_string(count) +
                               " > " + to_string(bound)};
    }
    return {true, {}};
}

unsigned local_order_count(const SplittingProfile &profile)
{
    unsigned split = 0, other = 0;
    for (const auto &q : profile.parts) {
        if (q.e == 1 && q.f == 1)
            split++;
        else if (q.e * q.f == 2)
            other++;
    }
    return (split >= 2 ? split * (split - 1) / 2 : 0) + other;
}

FormProfileSource::FormProfileSource(BinaryForm f) : f_(std::move(f))
{
    require_primitive_separable(f_, "FormProfileSource");
}

SplittingProfile FormProfileSource::profile(uint64_t p) const
{
    return field_profile(f_, Integer(static_cast<unsigned long>(p)));
}

FileProfileSource FileProfileSource::parse(std::istream &in)
{
    static const std::regex line_re(R"(^\s*(\*|\d+)\s*:\s*(.*?)\s*$)");
    static const std::regex part_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*(?:,\s*([A-Za-z0-9]+)\s*)?\))");
    FileProfileSource src;
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::smatch m;
        if (!std::regex_match(line, m, line_re))
            throw DomainError("profile line " + std::to_string(lineno) + ": expected 'p: (e,f,max);...'");
        std::vector<LocalPart> parts;
        std::string body = m[2];
        unsigned sum = 0;
        for (std::sregex_iterator it(body.begin(), body.end(), part_re), end; it != end; ++it) {
            const auto &pm = *it;
            LocalPart q{static_cast<unsigned>(std::stoul(pm[1])), static_cast<unsigned>(std::stoul(pm[2]))};
            if (pm[3].matched) {
                std::string flag = pm[3];
                if (flag == "1" || flag == "y" || flag == "yes" || flag == "true")
                    q.locally_maximal = true;
                else if (flag == "0" || flag == "n" || flag == "no" || flag == "false")
                    q.locally_maximal = false;
                else
                    throw DomainError("profile line " + std::to_string(lineno) + ": bad maximality flag " + flag);
            }
            if (q.e == 0 || q.f == 0)
                throw DomainError("profile line " + std::to_string(lineno) + ": e and f must be positive");
            sum += q.e * q.f;
            parts.push_back(q);
        }
        if (parts.empty())
            throw DomainError("profile line " + std::to_string(lineno) + ": no parts");
        if (src.degree_ == 0)
            src.degree_ = sum;
        else if (src.degree_ != sum)
            throw DomainError("profile line " + std::to_string(lineno) + ": sum e f = " + std::to_string(sum) +
                              " differs from " + std::to_string(src.degree_));
        if (m[1] == "*") {
            src.fallback_ = std::move(parts);
        } else {
            uint64_t p = std::stoull(m[1]);
            if (!is_prime(p))
                throw DomainError("profile line " + std::to_string(lineno) + ": " + std::to_string(p) +
                                  " is not prime");
            src.by_prime_[p] = std::move(parts);
        }
    }
    if (src.degree_ == 0)
        throw DomainError("profile file is empty");
    return src;
}

FileProfileSource FileProfileSource::parse_text(const std::string &text)
{
    std::istringstream in(text);
    return parse(in);
}

SplittingProfile FileProfileSource::profile(uint64_t p) const
{
    Integer P(static_cast<unsigned long>(p));
    if (auto it = by_prime_.find(p); it != by_prime_.end())
        return {P, it->second};
    if (fallback_)
        return {P, *fallback_};
    throw DomainError("no profile for p = " + std::to_string(p));
}

OrderCount count_restricted_sudo_maximal(const ProfileSource &src, uint64_t X)
{
    const unsigned n = src.degree();
    OrderCount out;
    out.X = X;
    out.zeta_power = n * (n - 1) / 2;
    out.coeff.assign(X + 1, Integer(0));
    out.zeta_coeff.assign(X + 1, Integer(0));
    if (X == 0)
        return out;
    /* smallest prime factor sieve */
    std::vector<uint64_t> spf(X + 1, 0);
    for (uint64_t i = 2; i <= X; i++)
        if (spf[i] == 0)
            for (uint64_t j = i; j <= X; j += i)
                if (spf[j] == 0)
                    spf[j] = i;
    std::map<uint64_t, unsigned> local;
    for (uint64_t p = 2; p <= X; p++)
        if (spf[p] == p) {
            SplittingProfile sp = src.profile(p);
            if (!sp.maximal())
                throw DomainError("count_restricted_sudo_maximal: profile at " + std::to_string(p) +
                                  " has a non-maximal part; profiles must describe the maximal order");
            if (sp.degree_sum() != n)
                throw DomainError("count_restricted_sudo_maximal: profile at " + std::to_string(p) +
                                  " has the wrong degree");
            local[p] = local_order_count(sp);
        }
    out.coeff[1] = 1;
    for (uint64_t N = 2; N <= X; N++) {
        uint64_t p = spf[N], rest = N;
        while (rest % p == 0)
            rest /= p;
        out.coeff[N] = out.coeff[rest] * local[p];
    }
    /* zeta^c by repeated Dirichlet convolution with 1 */
    for (uint64_t N = 1; N <= X; N++)
        out.zeta_coeff[N] = out.zeta_power == 0 ? Integer(N == 1) : Integer(1);
    for (unsigned it = 1; it < out.zeta_power; it++) {
        std::vector<Integer> next(X + 1, Integer(0));
        for (uint64_t d = 1; d <= X; d++)
            for (uint64_t N = d; N <= X; N += d)
                next[N] += out.zeta_coeff[d];
        out.zeta_coeff = std::move(next);
    }
    out.partial.assign(X + 1, Integer(0));
    out.zeta_partial.assign(X + 1, Integer(0));
    for (uint64_t N = 1; N <= X; N++) {
        out.partial[N] = out.partial[N - 1] + out.coeff[N];
        out.zeta_partial[N] = out.zeta_partial[N - 1] + out.zeta_coeff[N];
        if (!out.first_termwise_violation && out.coeff[N] > out.zeta_coeff[N])
            out.first_termwise_violation = N;
        if (!out.first_partial_violation && out.partial[N] > out.zeta_partial[N])
            out.first_partial_violation = N;
    }
    return out;
}

} // namespace wdr
