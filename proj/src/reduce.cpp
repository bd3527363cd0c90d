#include "wdr/reduce.hpp"

#include <sstream>

#include "roots.hpp"
#include "wdr/error.hpp"
#include "wdr/weakdiv.hpp"

namespace wdr {

namespace {

template <unsigned Bits>
ProfileReal narrow(const roots::Real<Bits> &x)
{
    return ProfileReal(x.str(0, std::ios_base::scientific));
}

/* nullopt asks for more precision */
template <unsigned Bits>
std::optional<GramProfile> profile_at(const BinaryForm &f, const Integer &m)
{
    using R = roots::Real<Bits>;
    using C = roots::Complex<Bits>;
    const unsigned n = f.degree();
    roots::RootSet<Bits> rs;
    try {
        rs = roots::find_roots<Bits>(f.coeffs());
    } catch (const PrecisionError &) {
        return std::nullopt;
    }
    const R tiny = ldexp(R(1), -static_cast<int>(Bits / 2));
    for (size_t k = 0; k < rs.z.size(); k++)
        if (rs.radius[k] > tiny * (roots::rough_abs<R>(rs.z[k]) + R(1)))
            return std::nullopt;
    std::vector<R> a(n + 1);
    for (unsigned i = 0; i <= n; i++)
        a[i] = roots::to_real<Bits>(f[i]);
    const R mm = roots::to_real<Bits>(m);
    /* rows: basis vectors in R^r + C^s coordinates */
    std::vector<std::vector<R>> v(n);
    for (unsigned k = 0; k < n; k++) {
        for (size_t j = 0; j < rs.z.size(); j++) {
            C val(k == 0 ? R(1) : R(0));
            for (unsigned i = 0; i < k; i++)
                val = (val + C(a[i])) * rs.z[j];
            if (k + 1 == n && n >= 2)
                val /= C(mm);
            v[k].push_back(real(val));
            if (j >= rs.real_count)
                v[k].push_back(imag(val));
        }
    }
    GramProfile out;
    out.real_places = rs.real_count;
    out.complex_places = rs.pair_count;
    out.bits = Bits;
    std::vector<std::vector<R>> q;
    for (unsigned k = 0; k < n; k++) {
        std::vector<R> w = v[k];
        for (const auto &u : q) {
            R dot = 0;
            for (unsigned i = 0; i < n; i++)
                dot += w[i] * u[i];
            for (unsigned i = 0; i < n; i++)
                w[i] -= dot * u[i];
        }
        R len2 = 0, orig2 = 0;
        for (unsigned i = 0; i < n; i++) {
            len2 += w[i] * w[i];
            orig2 += v[k][i] * v[k][i];
        }
        if (len2 <= tiny * tiny * orig2)
            return std::nullopt;
        R len = sqrt(len2);
        for (auto &x : w)
            x /= len;
        q.push_back(std::move(w));
        out.t.push_back(narrow<Bits>(len));
    }
    return out;
}

int lex_compare(const std::vector<Integer> &x, const std::vector<Integer> &y)
{
    for (size_t i = 0; i < x.size(); i++)
        if (x[i] != y[i])
            return x[i] < y[i] ? -1 : 1;
    return 0;
}

} // namespace

GramProfile gram_profile(const BinaryForm &f, const Integer &m, unsigned bits, double guard)
{
    if (m < 1)
        throw DomainError("gram_profile: m must be positive");
    if (f[0] == 0)
        throw DomainError("gram_profile: leading coefficient is zero");
    if (f.degree() >= 2 && discriminant(f) == 0)
        throw DomainError("gram_profile: " + f.str() + " has a repeated root");
    std::optional<GramProfile> p;
    if (bits <= 128)
        p = profile_at<128>(f, m);
    if (!p && bits <= 256)
        p = profile_at<256>(f, m);
    if (!p && bits <= kMaxBits)
        p = profile_at<512>(f, m);
    if (!p)
        throw PrecisionError("gram_profile: " + f.str() + " needs more than " + std::to_string(kMaxBits) + " bits");
    p->guard = guard;
    return *p;
}

bool is_normally_minkowski_reduced(const GramProfile &profile)
{
    const auto &t = profile.t;
    if (t.size() < 2)
        return true;
    const ProfileReal need = 2 * (1 + profile.guard);
    if (t[1] < need * t[0])
        return false;
    for (size_t i = 2; i < t.size(); i++)
        if (t[i] < need * t[1])
            return false;
    return true;
}

ProfileReal rho_f(const GramProfile &profile)
{
    const auto &t = profile.t;
    if (t.size() < 2)
        throw DomainError("rho_f: degree must be at least 2");
    ProfileReal rho = 2 * t[0] / t[1];
    for (size_t i = 2; i < t.size(); i++) {
        /* t index i is t_{i+1} */
        ProfileReal c = pow(2 * t[1] / t[i], ProfileReal(1) / ProfileReal(i - 1));
        if (c > rho)
            rho = c;
    }
    return rho;
}

ProfileReal rho_f(const BinaryForm &f, unsigned bits)
{
    return rho_f(gram_profile(f, 1, bits));
}

IntMatrix translation_matrix(const BinaryForm &f, const Integer &l)
{
    const unsigned n = f.degree();
    IntMatrix M(n, IntVector(n, Integer(0)));
    for (unsigned k = 0; k < n; k++) {
        M[0][k] = k == 0 ? Integer(1) : binomial(n - 1, k) * ipow(l, k) * f[0];
        for (unsigned i = 1; i <= k; i++)
            M[i][k] = binomial(n - i - 1, k - i) * ipow(l, k - i);
    }
    return M;
}

IntMatrix shift_matrix(const BinaryForm &f)
{
    const unsigned n = f.degree();
    IntMatrix S = identity_matrix(n);
    for (unsigned k = 1; k < n; k++)
        S[0][k] = f[k];
    return S;
}

std::string CanonicalKey::id() const
{
    std::ostringstream os;
    os << to_string(m) << '|';
    for (size_t i = 0; i < coeffs.size(); i++)
        os << (i ? "," : "") << to_string(coeffs[i]);
    return os.str();
}

std::string CanonicalKey::str() const
{
    return id() + '|' + (reflected ? '1' : '0');
}

CanonicalKey canonical_representative(const BinaryForm &f, const WeakDivWitness &w, unsigned bits, double guard)
{
    if (!is_witness(f, w))
        throw DomainError("canonical_representative: (" + to_string(w.m) + ", " + to_string(w.l) +
                          ") is not a witness for " + f.str());
    const unsigned n = f.degree();
    if (n < 2)
        throw DomainError("canonical_representative: degree must be at least 2");
    if (!is_normally_minkowski_reduced(gram_profile(f, w.m, bits, guard)))
        throw DomainError("canonical_representative: " + f.str() + " is not reduced for m = " + to_string(w.m));
    const BinaryForm g = f[0] < 0 ? negate(f) : f;
    const Integer step = Integer(n) * g[0] * w.m;
    auto settle = [&](const BinaryForm &h, const Integer &l) {
        BinaryForm at = translate(h, l);
        /* X^{n-1}Y coefficient moves by n a_0 t under translation by t */
        Integer r = floor_div(at[1], step);
        return translate(at, -r * w.m);
    };
    BinaryForm plain = settle(g, w.l);
    BinaryForm mirrored = settle(reflect(g), mod_floor(-w.l, w.m));
    CanonicalKey key;
    key.m = w.m;
    key.small_degree = n <= 3;
    key.reflected = lex_compare(mirrored.coeffs(), plain.coeffs()) < 0;
    key.coeffs = key.reflected ? mirrored.coeffs() : plain.coeffs();
    return key;
}

} // namespace wdr
