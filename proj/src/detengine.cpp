#include "grpdet/detengine.hpp"

#include "grpdet/error.hpp"
#include "grpdet/matrix.hpp"

namespace grpdet {

namespace {

void check_element(const GroupRingElement& e, const GroupSpec& g, const char* who) {
    if (e.p() != g.p || e.n() != g.n)
        throw value_error(std::string(who) + ": element does not match the group");
}

} // namespace

Int direct_determinant(const GroupRingElement& e, const GroupSpec& g) {
    check_element(e, g, "direct_determinant");
    const unsigned N = g.p * g.n;
    std::vector<unsigned long> rpow(g.n);
    rpow[0] = 1;
    for (unsigned j = 1; j < g.n; ++j) rpow[j] = (rpow[j - 1] * g.r) % g.p;
    // inverse of (i, j) is (-i * r^(-j), -j); r^(-j) = r^(n-j)
    auto index = [&](unsigned i, unsigned j) { return i * g.n + j; };
    std::vector<std::vector<Int>> m(N, std::vector<Int>(N));
    for (unsigned gi = 0; gi < g.p; ++gi)
        for (unsigned gj = 0; gj < g.n; ++gj)
            for (unsigned hi = 0; hi < g.p; ++hi)
                for (unsigned hj = 0; hj < g.n; ++hj) {
                    // g * h^-1 with h^-1 = (p - hi) r^(n - hj), n - hj
                    unsigned ij = (g.n - hj) % g.n;
                    unsigned long inv_i = ((g.p - hi) * rpow[ij]) % g.p;
                    unsigned jj = (gj + ij) % g.n;
                    unsigned long ii = (gi + inv_i * rpow[gj]) % g.p;
                    m[index(gi, gj)][index(hi, hj)] =
                        e.coeff(static_cast<unsigned>(ii), jj);
                }
    return bareiss_det(std::move(m));
}

Int circulant_A(const GroupRingElement& e, const GroupSpec& g) {
    check_element(e, g, "circulant_A");
    std::vector<Int> s(g.n, Int(0));
    for (unsigned j = 0; j < g.n; ++j)
        for (unsigned i = 0; i < g.p; ++i) s[j] += e.coeff(i, j);
    std::vector<std::vector<Int>> m(g.n, std::vector<Int>(g.n));
    for (unsigned i = 0; i < g.n; ++i)
        for (unsigned k = 0; k < g.n; ++k) m[i][k] = s[(k + g.n - i) % g.n];
    return bareiss_det(std::move(m));
}

std::vector<std::vector<CyclotomicInt>> block_B_matrix(const GroupRingElement& e,
                                                       const GroupSpec& g, unsigned j) {
    check_element(e, g, "block_B_matrix");
    if (j % g.p == 0) throw value_error("block_B_matrix: w^j must be a primitive root of unity");
    auto f = f_components(e, g);
    std::vector<unsigned long> rpow(g.n);
    rpow[0] = 1;
    for (unsigned i = 1; i < g.n; ++i) rpow[i] = (rpow[i - 1] * g.r) % g.p;
    std::vector<std::vector<CyclotomicInt>> m(g.n, std::vector<CyclotomicInt>(g.n, CyclotomicInt(g.p)));
    for (unsigned i = 0; i < g.n; ++i)
        for (unsigned k = 0; k < g.n; ++k) {
            unsigned idx = (k + g.n - i) % g.n;
            long root = static_cast<long>((static_cast<unsigned long>(j) * rpow[i]) % g.p);
            m[i][k] = eval_at_root(f[idx], g.p, root);
        }
    return m;
}

CyclotomicInt block_B(const GroupRingElement& e, const GroupSpec& g, unsigned j) {
    return cyclo_det(block_B_matrix(e, g, j));
}

CyclotomicInt block_B_row_of_ones(const GroupRingElement& e, const GroupSpec& g, unsigned j) {
    auto m = block_B_matrix(e, g, j);
    for (unsigned k = 0; k < g.n; ++k) m[0][k] = CyclotomicInt::integer(g.p, 1);
    return cyclo_det(m);
}

DetReport factored_determinant(const GroupRingElement& e, const GroupSpec& g) {
    check_element(e, g, "factored_determinant");
    DetReport rep;
    rep.group = g;
    rep.A = circulant_A(e, g);
    CyclotomicInt prod = CyclotomicInt::integer(g.p, 1);
    for (unsigned j : g.coset_reps) {
        rep.B_blocks.push_back(block_B(e, g, j));
        prod *= rep.B_blocks.back();
    }
    if (!prod.is_rational_integer())
        throw internal_error("InternalInconsistency: block product is not a rational integer");
    rep.B = prod.rational_value();
    rep.D = rep.A * pow_int(rep.B, g.n);
    return rep;
}

} // namespace grpdet
