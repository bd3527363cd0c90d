#include "wdr/multipoly.hpp"

#include <sstream>
#include <unordered_map>

#include "wdr/error.hpp"

namespace wdr {

unsigned total_degree(const Monomial &m)
{
    unsigned d = 0;
    for (auto e : m)
        d += e;
    return d;
}

bool GradedLex::operator()(const Monomial &a, const Monomial &b) const
{
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    return a > b;
}

MultiPoly::MultiPoly(size_t nvars) : nvars_(nvars)
{
    if (nvars > kMaxVars)
        throw DomainError("MultiPoly: too many variables");
}

MultiPoly MultiPoly::constant(size_t nvars, const Integer &c)
{
    MultiPoly p(nvars);
    p.add_term(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::variable(size_t nvars, size_t i)
{
    MultiPoly p(nvars);
    Monomial m{};
    m.at(i) = 1;
    p.add_term(m, 1);
    return p;
}

void MultiPoly::add_term(const Monomial &m, const Integer &c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly &o) const
{
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto &[m, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly &o) const { return *this + (-o); }

MultiPoly MultiPoly::scaled(const Integer &k) const
{
    MultiPoly r(nvars_);
    if (k == 0)
        return r;
    for (const auto &[m, c] : terms_)
        r.terms_.emplace(m, c * k);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly &o) const
{
    MultiPoly r(std::max(nvars_, o.nvars_));
    for (const auto &[ma, ca] : terms_)
        for (const auto &[mb, cb] : o.terms_) {
            Monomial m;
            for (size_t i = 0; i < kMaxVars; i++)
                m[i] = static_cast<uint8_t>(ma[i] + mb[i]);
            r.add_term(m, ca * cb);
        }
    return r;
}

Integer MultiPoly::evaluate(std::span<const Integer> point) const
{
    if (point.size() < nvars_)
        throw DomainError("MultiPoly::evaluate: point too short");
    Integer sum = 0;
    for (const auto &[m, c] : terms_) {
        Integer t = c;
        for (size_t i = 0; i < nvars_; i++)
            if (m[i])
                t *= ipow(point[i], m[i]);
        sum += t;
    }
    return sum;
}

unsigned MultiPoly::degree_in(size_t var) const
{
    unsigned d = 0;
    for (const auto &[m, c] : terms_)
        d = std::max<unsigned>(d, m[var]);
    return d;
}

MultiPoly MultiPoly::coefficient_in(size_t var, unsigned k) const
{
    return select(var, [k](unsigned e) { return e == k; }, k);
}

MultiPoly MultiPoly::divexact(const Monomial &mono, const Integer &c) const
{
    MultiPoly r(nvars_);
    for (const auto &[m, coef] : terms_) {
        Monomial q;
        for (size_t i = 0; i < kMaxVars; i++) {
            if (m[i] < mono[i])
                throw InternalError("MultiPoly::divexact: monomial does not divide");
            q[i] = static_cast<uint8_t>(m[i] - mono[i]);
        }
        if (!mpz_divisible_p(coef.get_mpz_t(), c.get_mpz_t()))
            throw InternalError("MultiPoly::divexact: coefficient does not divide");
        r.terms_.emplace(q, Integer(coef / c));
    }
    return r;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    /* descending graded-lex for display */
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        Integer a = abs(c);
        if (a != 1 || total_degree(m) == 0)
            factors.push_back(a.get_str());
        for (size_t i = 0; i < nvars_; i++) {
            if (!m[i])
                continue;
            std::string v = "a" + std::to_string(i);
            if (m[i] > 1)
                v += "^" + std::to_string(m[i]);
            factors.push_back(v);
        }
        for (size_t i = 0; i < factors.size(); i++)
            os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

MultiPoly symbolic_determinant(const PolyMatrix &mat)
{
    const size_t n = mat.size();
    if (n == 0)
        return MultiPoly::constant(0, 1);
    if (n > 20)
        throw DomainError("symbolic_determinant: matrix too large");
    const size_t nv = mat[0][0].nvars();
    /* memo[mask] = minor on rows [n - popcount(mask), n) and columns in mask */
    std::unordered_map<uint32_t, MultiPoly> memo;
    auto minor = [&](auto &&self, uint32_t mask) -> MultiPoly {
        int k = __builtin_popcount(mask);
        if (k == 0)
            return MultiPoly::constant(nv, 1);
        auto it = memo.find(mask);
        if (it != memo.end())
            return it->second;
        size_t row = n - k;
        MultiPoly acc(nv);
        int pos = 0;
        for (size_t c = 0; c < n; c++) {
            if (!(mask >> c & 1))
                continue;
            if (!mat[row][c].is_zero()) {
                MultiPoly term = mat[row][c] * self(self, mask & ~(1u << c));
                acc += (pos % 2 == 0) ? term : -term;
            }
            pos++;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return minor(minor, (n == 32) ? 0xffffffffu : ((1u << n) - 1));
}

} // namespace wdr
