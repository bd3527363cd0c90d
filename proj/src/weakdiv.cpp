#include "wdr/weakdiv.hpp"

#include <algorithm>

#include "wdr/error.hpp"

namespace wdr {

namespace {

constexpr unsigned long kScanLimit = 10000;
constexpr unsigned long kDigitScanLimit = 100000;
constexpr size_t kResidueBudget = 1000000;

bool divides(const Integer &d, const Integer &a)
{
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/* m^2 | f(l), m | f'(l) */
bool satisfies(const BinaryForm &f, const Integer &l, const Integer &m)
{
    return divides(m, f.derivative_at(l)) && divides(m * m, f.eval(l));
}

std::vector<Integer> first_digit(const BinaryForm &f, const Integer &p)
{
    std::vector<Integer> out;
    if (p <= kScanLimit) {
        for (Integer l = 0; l < p; l++)
            if (satisfies(f, l, p))
                out.push_back(l);
        return out;
    }
    FactorModP fac;
    try {
        fac = factor_modp(f, p);
    } catch (const DomainError &) {
        throw BudgetError("witness_residues: f vanishes mod a large prime " + to_string(p));
    }
    for (const auto &mf : fac.factors)
        if (mf.degree() == 1 && mf.e >= 2) {
            Integer l = mod_floor(-mf.coeffs[1], p);
            if (satisfies(f, l, p))
                out.push_back(l);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool is_witness(const BinaryForm &f, const WeakDivWitness &w)
{
    return w.m >= 1 && w.l >= 0 && w.l < w.m && satisfies(f, w.l, w.m);
}

std::vector<Integer> witness_residues(const BinaryForm &f, const Integer &p, unsigned e)
{
    if (e == 0)
        return {Integer(0)};
    const Integer pe = ipow(p, e);
    std::vector<Integer> level;
    if (pe <= kScanLimit) {
        for (Integer l = 0; l < pe; l++)
            if (satisfies(f, l, pe))
                level.push_back(l);
        return level;
    }
    level = first_digit(f, p);
    Integer pk = p;
    for (unsigned k = 1; k < e && !level.empty(); k++) {
        const Integer next = pk * p;
        std::vector<Integer> lifted;
        for (const auto &l : level) {
            /* f(l + p^k t) = f(l) mod p^{2k}, f'(l + p^k t) = f'(l) + p^k t f''(l) mod p^{k+1} */
            if (p <= kDigitScanLimit) {
                for (Integer t = 0; t < p; t++) {
                    Integer c = l + pk * t;
                    if (satisfies(f, c, next))
                        lifted.push_back(c);
                }
            } else {
                Integer d2 = 0;
                const auto &a = f.coeffs();
                const unsigned n = f.degree();
                /* f''(l) via the Horner form of the second derivative */
                for (unsigned i = 0; i + 2 <= n; i++)
                    d2 = d2 * l + a[i] * (n - i) * (n - i - 1);
                if (divides(p, d2))
                    throw BudgetError("witness_residues: degenerate lift at a large prime " + to_string(p));
                Integer t = mod_floor(-(f.derivative_at(l) / pk) * inverse_mod(d2, p), p);
                Integer c = l + pk * t;
                if (satisfies(f, c, next))
                    lifted.push_back(c);
            }
            if (lifted.size() > kResidueBudget)
                throw BudgetError("witness_residues: too many residues mod " + to_string(next));
        }
        std::sort(lifted.begin(), lifted.end());
        level = std::move(lifted);
        pk = next;
    }
    return level;
}

std::optional<WeakDivWitness> find_witness(const BinaryForm &f, const Integer &m)
{
    if (m < 1)
        throw DomainError("find_witness: m must be positive");
    if (m == 1)
        return WeakDivWitness{1, 0};
    std::vector<std::vector<Integer>> sets;
    std::vector<Integer> moduli;
    size_t combos = 1;
    for (const auto &[p, e] : factor_integer(m)) {
        auto r = witness_residues(f, p, e);
        if (r.empty())
            return std::nullopt;
        combos *= r.size();
        if (combos > kResidueBudget)
            throw BudgetError("find_witness: too many residue combinations for m = " + to_string(m));
        sets.push_back(std::move(r));
        moduli.push_back(ipow(p, e));
    }
    std::optional<Integer> best;
    std::vector<size_t> idx(sets.size(), 0);
    for (;;) {
        std::vector<Integer> res;
        for (size_t i = 0; i < sets.size(); i++)
            res.push_back(sets[i][idx[i]]);
        Integer l = crt(res, moduli);
        if (!best || l < *best)
            best = l;
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == sets[i].size())
            idx[i++] = 0;
        if (i == idx.size())
            break;
    }
    WeakDivWitness w{m, *best};
    if (!is_witness(f, w))
        throw InternalError("find_witness: CRT produced an invalid witness");
    return w;
}

RingPresentation weakly_divisible_ring(const BinaryForm &f, const WeakDivWitness &w)
{
    if (!is_witness(f, w))
        throw DomainError("weakly_divisible_ring: (" + to_string(w.m) + ", " + to_string(w.l) +
                          ") is not a witness for " + f.str());
    const unsigned n = f.degree();
    if (f[0] == 0)
        throw DomainError("weakly_divisible_ring: leading coefficient is zero");
    if (n == 1 && w.m != 1)
        throw DomainError("weakly_divisible_ring: degree 1 admits only m = 1");
    BinaryForm g = translate(f, w.l);
    std::vector<PowerElement> basis;
    std::vector<std::string> names;
    for (unsigned k = 0; k < n; k++) {
        basis.push_back(canonical_basis_element(g, k));
        names.push_back("B_" + std::to_string(k));
    }
    if (n >= 2) {
        for (auto &x : basis[n - 1])
            x /= w.m;
        names[n - 1] += "/m";
    }
    RingPresentation R = ring_on_basis(g, basis, std::move(names));
    R.origin = f;
    R.witness = w;
    if (auto bad = shifted_row_mismatch(R); !bad.empty())
        throw InternalError("weakly_divisible_ring: " + bad);
    return R;
}

bool strongly_divisible_lifted(const BinaryForm &f, const Integer &p)
{
    const Integer p2 = p * p;
    if (!divides(p2, discriminant(f)))
        return false;
    for (unsigned i = 0; i <= f.degree(); i++) {
        auto c = f.coeffs();
        c[i] += p;
        if (!divides(p2, discriminant(BinaryForm(c))))
            return false;
    }
    return true;
}

bool reverse_weakly_divisible(const BinaryForm &f, const Integer &p)
{
    return find_witness(reverse(f), p).has_value();
}

std::string to_string(UwdVerdict v)
{
    switch (v) {
    case UwdVerdict::weakly_divisible:
        return "weakly_divisible";
    case UwdVerdict::reverse_weakly_divisible:
        return "reverse_weakly_divisible";
    case UwdVerdict::strongly_divisible:
        return "strongly_divisible";
    case UwdVerdict::unexplained:
        return "unexplained";
    }
    return "?";
}

UwdReport is_uwd(const BinaryForm &f, const Factorization &disc_factors)
{
    const Integer d = discriminant(f);
    if (d == 0)
        throw DomainError("is_uwd: discriminant is zero");
    if (factorization_value(disc_factors) != abs(d))
        throw DomainError("is_uwd: factorization does not multiply to |disc(f)| = " + to_string(Integer(abs(d))));
    for (const auto &[p, e] : disc_factors)
        if (!is_prime(p))
            throw DomainError("is_uwd: factor " + to_string(p) + " is not prime");
    UwdReport rep{true, {}};
    for (const auto &[p, e] : disc_factors) {
        if (e < 2)
            continue;
        UwdPrime row{p, e, {p, ProfileKind::strongly_divisible, std::nullopt, StrongReason::none},
                     UwdVerdict::strongly_divisible};
        bool vanishes = true;
        for (const auto &c : f.coeffs())
            vanishes = vanishes && divides(p, c);
        if (!vanishes) {
            row.profile = double_root_profile(f, p);
            const Integer p2 = p * p;
            switch (row.profile.kind) {
            case ProfileKind::strongly_divisible:
                row.verdict = UwdVerdict::strongly_divisible;
                break;
            case ProfileKind::affine_double:
                row.verdict = divides(p2, f.eval(*row.profile.root)) ? UwdVerdict::weakly_divisible
                                                                      : UwdVerdict::unexplained;
                break;
            case ProfileKind::infinity_double:
                row.verdict = divides(p2, f[0]) && divides(p, f[1]) ? UwdVerdict::reverse_weakly_divisible
                                                                     : UwdVerdict::unexplained;
                break;
            case ProfileKind::smooth:
                row.verdict = UwdVerdict::unexplained;
                break;
            }
        }
        rep.is_uwd = rep.is_uwd && row.verdict == UwdVerdict::weakly_divisible;
        rep.per_prime.push_back(std::move(row));
    }
    return rep;
}

UwdReport is_uwd(const BinaryForm &f)
{
    const Integer d = discriminant(f);
    if (d == 0)
        throw DomainError("is_uwd: discriminant is zero");
    return is_uwd(f, factor_integer(d));
}

MaxWitness max_witness(const BinaryForm &f, const Factorization &disc_factors)
{
    UwdReport rep = is_uwd(f, disc_factors);
    if (!rep.is_uwd)
        throw DomainError("max_witness: " + f.str() + " is not ultra weakly divisible");
    std::vector<Integer> residues, moduli;
    Integer m = 1;
    for (const auto &row : rep.per_prime) {
        const unsigned half = row.disc_valuation / 2;
        auto r = witness_residues(f, row.p, half);
        if (r.empty())
            throw InternalError("max_witness: no lift of the double root of " +
                                f.str() + " to " + to_string(row.p) + "^" + std::to_string(half));
        residues.push_back(r.front());
        moduli.push_back(ipow(row.p, half));
        m *= moduli.back();
    }
    MaxWitness out{m, residues.empty() ? Integer(0) : crt(residues, moduli), 0};
    if (!is_witness(f, {out.m_f, out.l_f}))
        throw InternalError("max_witness: assembled witness fails for " + f.str());
    out.s = discriminant(f) / (m * m);
    return out;
}

MaxWitness max_witness(const BinaryForm &f)
{
    return max_witness(f, factor_integer(discriminant(f)));
}

} // namespace wdr
