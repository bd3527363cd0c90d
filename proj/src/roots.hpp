#ifndef WDR_ROOTS_HPP
#define WDR_ROOTS_HPP

/* Simultaneous (Aberth-Ehrlich) root finding for integer polynomials at a
   fixed binary precision, with a posteriori inclusion radii. */

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "wdr/arith.hpp"
#include "wdr/error.hpp"

namespace wdr::roots {

namespace bmp = boost::multiprecision;

template <unsigned Bits>
using Real = bmp::number<bmp::cpp_bin_float<Bits, bmp::digit_base_2>, bmp::et_off>;
template <unsigned Bits>
using Complex = bmp::number<bmp::complex_adaptor<bmp::cpp_bin_float<Bits, bmp::digit_base_2>>, bmp::et_off>;

template <unsigned Bits>
Real<Bits> to_real(const Integer &a)
{
    return Real<Bits>(a.get_str());
}

template <unsigned Bits>
struct RootSet {
    /* real roots first (ascending), then one root of each conjugate pair
       with positive imaginary part, ordered by real then imaginary part */
    std::vector<Complex<Bits>> z;
    std::vector<Real<Bits>> radius;
    unsigned real_count = 0;
    unsigned pair_count = 0;
};

/* Aberth-Ehrlich steps on z until the largest relative step drops below
   tol or every root sits at the rounding floor. */
template <class R, class C>
R norm2(const C &z)
{
    R x = real(z), y = imag(z);
    return x * x + y * y;
}

/* |z| to double accuracy; only used for error scales */
template <class R, class C>
R rough_abs(const C &z)
{
    const R q = norm2<R>(z);
    double v = std::sqrt(static_cast<double>(q));
    if (std::isfinite(v) && (v >= 1e-140 || q == 0))
        return R(v);
    return R(sqrt(q));
}

/* Aberth-Ehrlich steps on z until the largest relative step drops below
   tol or every root sits at the rounding floor. */
template <class R, class C>
bool aberth(const std::vector<R> &a, const std::vector<R> &absa, std::vector<C> &z, const R &tol, const R &noise)
{
    const size_t n = a.size() - 1;
    const R tol2 = tol * tol;
    std::vector<bool> done(n, false);
    for (int iter = 0; iter < 2000; iter++) {
        R maxstep2 = 0;
        bool all_done = true;
        for (size_t k = 0; k < n; k++) {
            if (done[k])
                continue;
            C fz(a[0]), dz(0);
            for (size_t i = 1; i <= n; i++) {
                dz = dz * z[k] + fz;
                fz = fz * z[k] + C(a[i]);
            }
            R mag = rough_abs<R>(z[k]), scale = 0, zp = 1;
            for (size_t i = n + 1; i-- > 0;) {
                scale += absa[i] * zp;
                zp *= mag;
            }
            const R floor_ = noise * scale;
            if (norm2<R>(fz) <= floor_ * floor_) {
                done[k] = true;
                continue;
            }
            all_done = false;
            C ratio = fz / dz;
            C sum(0);
            for (size_t j = 0; j < n; j++)
                if (j != k)
                    sum += C(1) / (z[k] - z[j]);
            C step = ratio / (C(1) - ratio * sum);
            z[k] -= step;
            R rel2 = norm2<R>(step) / std::max(R(1), norm2<R>(z[k]));
            maxstep2 = std::max(maxstep2, rel2);
        }
        if (maxstep2 < tol2 || all_done)
            return true;
    }
    return false;
}

/* Starting points: the double precision Aberth limit when it is finite,
   else a rotated circle of the Cauchy radius. */
inline std::vector<std::complex<double>> cauchy_circle(const std::vector<Integer> &c)
{
    const size_t n = c.size() - 1;
    double bound = 0;
    for (size_t i = 1; i <= n; i++)
        bound = std::max(bound, std::abs(c[i].get_d() / c[0].get_d()));
    if (!std::isfinite(bound))
        bound = 1e300;
    bound += 1;
    std::vector<std::complex<double>> circle(n);
    for (size_t k = 0; k < n; k++)
        circle[k] = std::polar(bound, 2 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4);
    return circle;
}

inline std::vector<std::complex<double>> double_seed(const std::vector<Integer> &c)
{
    const size_t n = c.size() - 1;
    std::vector<double> a(n + 1), absa(n + 1);
    for (size_t i = 0; i <= n; i++) {
        a[i] = c[i].get_d();
        absa[i] = std::abs(a[i]);
        if (!std::isfinite(a[i]))
            return {};
    }
    std::vector<std::complex<double>> z = cauchy_circle(c);
    aberth<double, std::complex<double>>(a, absa, z, 1e-14, 1e-15 * static_cast<double>(2 * n + 2));
    for (size_t k = 0; k < n; k++) {
        if (!std::isfinite(z[k].real()) || !std::isfinite(z[k].imag()))
            return {};
        for (size_t j = 0; j < k; j++)
            if (std::abs(z[k] - z[j]) <= 1e-12 * (1 + std::abs(z[k])))
                return {};
    }
    return z;
}

/* Roots of sum_i c[i] x^{n-i} (leading-first, c[0] != 0). */
template <unsigned Bits>
RootSet<Bits> find_roots(const std::vector<Integer> &c)
{
    using R = Real<Bits>;
    using C = Complex<Bits>;
    const size_t n = c.size() - 1;
    if (n == 0 || c[0] == 0)
        throw DomainError("find_roots: need degree >= 1 and nonzero leading coefficient");
    std::vector<R> a(n + 1), absa(n + 1);
    for (size_t i = 0; i <= n; i++) {
        a[i] = to_real<Bits>(c[i]);
        absa[i] = abs(a[i]);
    }
    auto eval = [&](const C &z, C &fz, C &dz) {
        fz = C(a[0]);
        dz = C(0);
        for (size_t i = 1; i <= n; i++) {
            dz = dz * z + fz;
            fz = fz * z + C(a[i]);
        }
    };
    std::vector<C> z(n);
    auto start = [&](const std::vector<std::complex<double>> &from) {
        for (size_t k = 0; k < n; k++)
            z[k] = C(R(from[k].real()), R(from[k].imag()));
    };
    /* a double precision limit that is off (for instance real where the
       roots are a close conjugate pair) falls back to the circle */
    auto seed = double_seed(c);
    start(seed.empty() ? cauchy_circle(c) : seed);
    const R tol = ldexp(R(1), -static_cast<int>(Bits) + 12);
    bool converged = n == 1;
    if (n == 1)
        z[0] = C(-a[1] / a[0]);
    /* a root is frozen once |f(z)| is within the Horner rounding error,
       since further steps only follow noise near clustered roots */
    const R noise = ldexp(R(1), -static_cast<int>(Bits) + 4) * R(2 * n + 2);
    if (!converged && !(converged = aberth<R, C>(a, absa, z, tol, noise)) && !seed.empty()) {
        start(cauchy_circle(c));
        converged = aberth<R, C>(a, absa, z, tol, noise);
    }
    if (!converged)
        throw PrecisionError("find_roots: no convergence at " + std::to_string(Bits) + " bits");
    /* inclusion radii: n |f(z)| / |a_0 prod (z - z_j)|, padded by the
       rounding error of the Horner evaluation */
    const R eps = ldexp(R(1), -static_cast<int>(Bits) + 4);
    /* covers the double precision square roots of rough_abs */
    const R slack = ldexp(R(1), -40);
    std::vector<R> rad(n);
    for (size_t k = 0; k < n; k++) {
        C fz, dz;
        eval(z[k], fz, dz);
        R mag = rough_abs<R>(z[k]), scale = 0, zp = 1;
        for (size_t i = n + 1; i-- > 0;) {
            scale += absa[i] * zp;
            zp *= mag;
        }
        C prod(a[0]);
        for (size_t j = 0; j < n; j++)
            if (j != k)
                prod *= z[k] - z[j];
        R den = rough_abs<R>(prod) * (1 - slack);
        if (den == 0)
            throw PrecisionError("find_roots: coincident approximations (repeated root?)");
        rad[k] = R(n) * (rough_abs<R>(fz) * (1 + slack) + eps * scale * R(2 * n + 2)) / den;
    }
    for (size_t k = 0; k < n; k++)
        for (size_t j = k + 1; j < n; j++)
            if (rad[k] + rad[j] >= rough_abs<R>(C(z[k] - z[j])) * (1 - slack))
                throw PrecisionError("find_roots: inclusion discs overlap at " + std::to_string(Bits) +
                                     " bits; raise the precision");
    /* isolated discs each hold one root; a disc meeting the real axis holds
       a real root because nonreal roots come in conjugate pairs */
    RootSet<Bits> out;
    std::vector<std::pair<C, R>> reals, upper;
    for (size_t k = 0; k < n; k++) {
        R im = imag(z[k]);
        if (abs(im) <= rad[k])
            reals.emplace_back(C(real(z[k])), rad[k]);
        else if (im > 0)
            upper.emplace_back(z[k], rad[k]);
    }
    if (reals.size() + 2 * upper.size() != n)
        throw PrecisionError("find_roots: conjugate pairing failed");
    auto by_real = [](const std::pair<C, R> &x, const std::pair<C, R> &y) {
        if (real(x.first) != real(y.first))
            return real(x.first) < real(y.first);
        return imag(x.first) < imag(y.first);
    };
    std::sort(reals.begin(), reals.end(), by_real);
    std::sort(upper.begin(), upper.end(), by_real);
    for (auto *v : {&reals, &upper})
        for (auto &[zz, rr] : *v) {
            out.z.push_back(zz);
            out.radius.push_back(rr);
        }
    out.real_count = static_cast<unsigned>(reals.size());
    out.pair_count = static_cast<unsigned>(upper.size());
    return out;
}

} // namespace wdr::roots

#endif
