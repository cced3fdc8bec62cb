#include "grpdet/matrix.hpp"

#include "grpdet/error.hpp"

#include <algorithm>

namespace grpdet {

Int bareiss_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw value_error("bareiss_det: matrix not square");
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // pick the absolutely smallest nonzero pivot to slow entry growth
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            if (m[i][k] == 0) continue;
            if (piv == n || mpz_cmpabs(m[i][k].get_mpz_t(), m[piv][k].get_mpz_t()) < 0) piv = i;
        }
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign < 0 ? Int(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

CyclotomicInt cyclo_det(const std::vector<std::vector<CyclotomicInt>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw value_error("cyclo_det: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw value_error("cyclo_det: matrix not square");
    const unsigned p = m[0][0].prime();
    if (n > 20) throw value_error("cyclo_det: dimension too large for subset expansion");
    // minors[S] = det of rows 0..|S|-1 on the column set S
    std::vector<CyclotomicInt> minors(std::size_t(1) << n, CyclotomicInt(p));
    minors[0] = CyclotomicInt::integer(p, 1);
    for (std::size_t S = 1; S < minors.size(); ++S) {
        const unsigned row = static_cast<unsigned>(__builtin_popcountll(S)) - 1;
        CyclotomicInt acc(p);
        unsigned higher = 0;  // columns in S above the current one (sign of insertion)
        for (unsigned c = n; c-- > 0;) {
            if (!(S >> c & 1)) continue;
            const CyclotomicInt& entry = m[row][c];
            if (!entry.is_zero()) {
                CyclotomicInt term = minors[S ^ (std::size_t(1) << c)] * entry;
                if (higher % 2)
                    acc += -term;
                else
                    acc += term;
            }
            ++higher;
        }
        minors[S] = acc;
    }
    return minors.back();
}

Int resultant(const std::vector<Int>& f, const std::vector<Int>& g) {
    auto degree = [](const std::vector<Int>& h) {
        std::size_t d = h.size();
        while (d > 0 && h[d - 1] == 0) --d;
        return d == 0 ? std::size_t(0) : d - 1;  // deg(0) treated as 0 below
    };
    std::size_t df = degree(f), dg = degree(g);
    bool fzero = std::all_of(f.begin(), f.end(), [](const Int& v) { return v == 0; });
    bool gzero = std::all_of(g.begin(), g.end(), [](const Int& v) { return v == 0; });
    if (fzero || gzero) return 0;
    if (df == 0) return pow_int(f[0], static_cast<unsigned long>(dg));
    if (dg == 0) return pow_int(g[0], static_cast<unsigned long>(df));
    const std::size_t size = df + dg;
    std::vector<std::vector<Int>> syl(size, std::vector<Int>(size, Int(0)));
    for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t k = 0; k <= df; ++k) syl[i][i + k] = f[df - k];
    for (std::size_t i = 0; i < df; ++i)
        for (std::size_t k = 0; k <= dg; ++k) syl[dg + i][i + k] = g[dg - k];
    return bareiss_det(std::move(syl));
}

Int cyclo_resultant(unsigned s, unsigned n) {
    if (s < 1 || s >= n) throw value_error("OutOfRange: cyclo_resultant requires 1 <= s < n");
    auto quotient_poly = [](unsigned k) {  // (x^k - 1)/(x - 1) = 1 + x + ... + x^(k-1)
        return std::vector<Int>(k, Int(1));
    };
    return resultant(quotient_poly(s), quotient_poly(n - s));
}

} // namespace grpdet
