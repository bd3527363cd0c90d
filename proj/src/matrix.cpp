#include "wdr/matrix.hpp"

#include <utility>

#include "wdr/error.hpp"

namespace wdr {

IntMatrix identity_matrix(size_t n)
{
    IntMatrix m(n, IntVector(n, 0));
    for (size_t i = 0; i < n; i++)
        m[i][i] = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix &a, const IntMatrix &b)
{
    if (a.empty())
        return {};
    size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    if (a[0].size() != inner)
        throw DomainError("mat_mul: shape mismatch");
    IntMatrix c(a.size(), IntVector(cols, 0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t k = 0; k < inner; k++) {
            if (a[i][k] == 0)
                continue;
            for (size_t j = 0; j < cols; j++)
                c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Integer bareiss_det(IntMatrix a)
{
    const size_t n = a.size();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0)
                piv++;
            if (piv == n)
                return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++) {
            for (size_t j = k + 1; j < n; j++) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMatrix hermite_normal_form(IntMatrix rows)
{
    if (rows.empty())
        return rows;
    const size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < ncols && r < rows.size(); col++) {
        for (;;) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); i++) {
                if (rows[i][col] != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])))
                    best = i;
            }
            if (best == rows.size())
                break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (size_t i = r + 1; i < rows.size(); i++) {
                if (rows[i][col] == 0)
                    continue;
                Integer q = floor_div(rows[i][col], rows[r][col]);
                for (size_t j = col; j < ncols; j++)
                    rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (r >= rows.size() || rows[r][col] == 0)
            continue;
        if (rows[r][col] < 0)
            for (size_t j = col; j < ncols; j++)
                rows[r][j] = -rows[r][j];
        for (size_t i = 0; i < r; i++) {
            Integer q = floor_div(rows[i][col], rows[r][col]);
            if (q != 0)
                for (size_t j = col; j < ncols; j++)
                    rows[i][j] -= q * rows[r][j];
        }
        r++;
    }
    rows.resize(r);
    return rows;
}

bool hnf_contains(const IntMatrix &h, IntVector v)
{
    const size_t ncols = v.size();
    size_t col = 0;
    for (const auto &row : h) {
        while (col < ncols && row[col] == 0) {
            if (v[col] != 0)
                return false;
            col++;
        }
        if (col == ncols)
            break;
        if (!mpz_divisible_p(v[col].get_mpz_t(), row[col].get_mpz_t()))
            return false;
        Integer q = v[col] / row[col];
        for (size_t j = col; j < ncols; j++)
            v[j] -= q * row[j];
        col++;
    }
    for (; col < ncols; col++)
        if (v[col] != 0)
            return false;
    return true;
}

Integer hnf_index(const IntMatrix &h)
{
    Integer d = 1;
    size_t col = 0;
    for (const auto &row : h) {
        while (row[col] == 0)
            col++;
        d *= row[col];
        col++;
    }
    return d;
}

} // namespace wdr
