#include "grpdet/realize.hpp"

#include "grpdet/conditions.hpp"
#include "grpdet/error.hpp"
#include "grpdet/matrix.hpp"

#include <numeric>
#include <sstream>

namespace grpdet {

namespace {

Int inv_mod(const Int& x, const Int& mod) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw value_error("NotInvertible: " + to_string(x) + " has no inverse mod " +
                          to_string(mod));
    return r;
}

/** Representative of x mod p in [-(p-1)/2, (p-1)/2]. */
Int balanced_mod(const Int& x, unsigned p) {
    Int r = mod_floor(x, Int(p));
    if (2 * r > Int(p)) r -= Int(p);
    return r;
}

/** Quotient x / d when d divides x exactly; anything else is a caller bug. */
Int exact_div(const Int& x, const Int& d) {
    if (d == 0 || !divides(d, x))
        throw internal_error("InternalInconsistency: expected " + to_string(d) +
                             " to divide " + to_string(x));
    Int q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return q;
}

unsigned least_nonresidue(unsigned p) {
    for (unsigned v = 2; v < p; ++v)
        if (kronecker(Int(v), Int(p)) == -1) return v;
    throw internal_error("InternalInconsistency: no non-residue found mod " +
                         std::to_string(p));
}

Int coefficient_sum(const GroupRingElement& e) {
    Int s = 0;
    for (unsigned i = 0; i < e.p(); ++i)
        for (unsigned j = 0; j < e.n(); ++j) s += e.coeff(i, j);
    return s;
}

/** Product of s(y) over the nontrivial n-th roots of unity y. */
Int nontrivial_root_product(const std::vector<Int>& s, unsigned n) {
    if (n == 1) return 1;
    std::vector<Int> phi(n, Int(1));  // 1 + Y + ... + Y^(n-1), monic
    return resultant(phi, s);
}

std::vector<Int> poly_sum(const std::vector<Int>& t) {
    Int s = 0;
    for (const Int& v : t) s += v;
    return {s};
}

/** t(X) as a coefficient vector of length p from sparse (exponent, value) pairs. */
std::vector<Int> sparse_poly(unsigned p, std::initializer_list<std::pair<unsigned, Int>> terms) {
    std::vector<Int> t(p, Int(0));
    for (const auto& [e, v] : terms) t[e % p] += v;
    return t;
}

struct Prediction {
    Int A;
    Int B;
    std::optional<QuadInt> block;  // expected value of the block at coset rep 1
};

/** The shift formula prediction for A: (G(1,1) + n t(1) + m n p) * prod_{y != 1} G(1, y). */
Int predicted_A(const GroupRingElement& base, const std::vector<Int>& t, const Int& m,
                const GroupSpec& g) {
    const Int g11 = coefficient_sum(base);
    const Int t1 = poly_sum(t)[0];
    std::vector<Int> ysum(g.n, Int(0));
    for (unsigned j = 0; j < g.n; ++j)
        for (unsigned i = 0; i < g.p; ++i) ysum[j] += base.coeff(i, j);
    const Int p_g = nontrivial_root_product(ysum, g.n);
    return (g11 + Int(g.n) * t1 + m * Int(g.n) * Int(g.p)) * p_g;
}

DetReport verify_prediction(const GroupRingElement& e, const GroupSpec& g,
                            const Prediction& pred, const std::string& what) {
    DetReport rep = factored_determinant(e, g);
    std::ostringstream os;
    if (rep.A != pred.A) {
        os << "PredictionMismatch: " << what << ": A = " << to_string(rep.A)
           << ", predicted " << to_string(pred.A);
        throw internal_error(os.str());
    }
    if (rep.B != pred.B) {
        os << "PredictionMismatch: " << what << ": B = " << to_string(rep.B)
           << ", predicted " << to_string(pred.B);
        throw internal_error(os.str());
    }
    if (pred.block) {
        const QuadInt got = quad_embed(rep.B_blocks.at(0), pred.block->field());
        if (got != *pred.block) {
            os << "PredictionMismatch: " << what << ": block = " << got.to_string()
               << ", predicted " << pred.block->to_string();
            throw internal_error(os.str());
        }
    }
    return rep;
}

GroupRingElement neg_y(const GroupSpec& g) { return monomial(g, Int(-1), 0, 1); }

void require(bool ok, const std::string& msg) {
    if (!ok) throw value_error(msg);
}

} // namespace

GroupRingElement shift_construct(const ShiftSpec& spec, const GroupSpec& g) {
    if (spec.base.p() != g.p || spec.base.n() != g.n)
        throw value_error("WrongShape: base element does not match the group");
    if (spec.t_poly.size() > g.p)
        throw value_error("WrongShape: t(X) must have degree < p");
    GroupRingElement out = spec.base;
    for (unsigned i = 0; i < spec.t_poly.size(); ++i) {
        if (spec.t_poly[i] == 0) continue;
        for (unsigned j = 0; j < g.n; ++j) out.add_coeff(i, j, spec.t_poly[i]);
    }
    if (spec.m != 0) {
        for (unsigned i = 0; i < g.p; ++i)
            for (unsigned j = 0; j < g.n; ++j) out.add_coeff(i, j, spec.m);
    }
    return out;
}

const char* tag_name(ConstructionTag tag) {
    switch (tag) {
        case ConstructionTag::LemmaEx: return "LemmaEx";
        case ConstructionTag::GA_n2: return "GA_n2";
        case ConstructionTag::GA7_mult4: return "GA7_mult4";
        case ConstructionTag::GA7_mult9: return "GA7_mult9";
        case ConstructionTag::G21_mult9: return "G21_mult9";
        case ConstructionTag::G55_mult25: return "G55_mult25";
        case ConstructionTag::G78_mult6: return "G78_mult6";
        case ConstructionTag::G78_mult4: return "G78_mult4";
        case ConstructionTag::G78_mult9: return "G78_mult9";
        case ConstructionTag::PPower: return "PPower";
        case ConstructionTag::NegY: return "NegY";
    }
    throw value_error("BadIndex: unknown construction tag");
}

std::pair<GroupRingElement, LemmaExPrediction>
realize_lemma_ex(const GroupSpec& g, unsigned s, const LemmaExParams& params) {
    const bool full_index = (g.n == g.p - 1);
    const bool half_index = !full_index && (2 * g.n == g.p - 1);
    if (!full_index && !half_index)
        throw value_error("UnsupportedGroup: closed forms cover n = p-1 and n = (p-1)/2 only");
    if (s < 1 || s >= g.n || std::gcd(s, g.n) != 1)
        throw value_error("BadS: s must satisfy 1 <= s < n and gcd(s, n) = 1");

    unsigned u = params.u % g.p;
    unsigned v = (params.v == 0) ? (full_index ? 1 : least_nonresidue(g.p)) : params.v % g.p;
    if (u == 0 || v == 0)
        throw value_error("BadResidue: u and v must be nonzero mod p");
    if (half_index) {
        if (kronecker(Int(u), Int(g.p)) != 1)
            throw value_error("BadResidue: u must be a nonzero square mod p");
        if (kronecker(Int(v), Int(g.p)) != -1)
            throw value_error("BadResidue: v must be a non-square mod p");
    }

    GroupRingElement base = zero_element(g);
    for (unsigned j = 0; j < s; ++j) base.set_coeff(0, j, Int(1));

    ShiftSpec spec{base,
                   sparse_poly(g.p, {{0u, params.c + params.a + params.b},
                                     {u, -params.a},
                                     {v, -params.b}}),
                   params.m};
    GroupRingElement element = shift_construct(spec, g);

    const Int sc = Int(s) + Int(g.n) * params.c;
    LemmaExPrediction pred;
    pred.A = sc + params.m * Int(g.n) * Int(g.p);
    if (full_index) {
        pred.B = sc + (params.a + params.b) * Int(g.p);
    } else {
        const QuadField f(g.p);
        // block = s + nc + a*((p+1)/2 - theta0) + b*((p-1)/2 + theta0)
        pred.block = QuadInt(f,
                             sc + params.a * Int((g.p + 1) / 2) + params.b * Int((g.p - 1) / 2),
                             params.b - params.a);
        pred.B = pred.block->norm();
    }

    verify_prediction(element, g, {pred.A, pred.B, pred.block}, "lemma-ex construction");
    return {std::move(element), std::move(pred)};
}

std::pair<GroupRingElement, DetReport>
realize_class(const GroupSpec& g, ConstructionTag tag, const ClassParams& params) {
    const Int &c = params.c, &a = params.a, &b = params.b, &m = params.m;

    switch (tag) {
        case ConstructionTag::LemmaEx: {
            LemmaExParams lp;
            lp.c = c, lp.a = a, lp.b = b, lp.m = m;
            auto result = realize_lemma_ex(g, 1, lp);
            DetReport rep = factored_determinant(result.first, g);
            return {std::move(result.first), std::move(rep)};
        }
        case ConstructionTag::NegY: {
            GroupRingElement element = neg_y(g);
            Prediction pred{Int(-1), (g.t % 2 == 0) ? Int(1) : Int(-1), std::nullopt};
            DetReport rep = verify_prediction(element, g, pred, "negated-Y element");
            return {std::move(element), std::move(rep)};
        }
        case ConstructionTag::PPower: {
            GroupRingElement base = zero_element(g);
            for (unsigned j = 0; j < g.n; ++j)
                base.set_coeff(0, j, Int(g.t) + Int(j == 0 ? 1 : 0));
            GroupRingElement element = shift_construct({base, {}, m}, g);
            Prediction pred;
            pred.A = Int(g.p) * (Int(1) + m * Int(g.n));
            pred.B = pow_int(Int(g.p), g.t);
            DetReport rep = verify_prediction(element, g, pred, "p-power element");
            return {std::move(element), std::move(rep)};
        }
        case ConstructionTag::GA_n2: {
            require(g.n == g.p - 1, "TagGroupMismatch: GA_n2 requires n = p-1");
            const Int k_int = mod_floor(-inv_mod(Int(g.r) - 1, Int(g.p)), Int(g.p));
            const unsigned k = static_cast<unsigned>(k_int.get_ui());
            GroupRingElement base = zero_element(g);
            base.set_coeff(0, 0, Int(1));
            base.set_coeff(1, 1, Int(-1));
            ShiftSpec spec{base, sparse_poly(g.p, {{0u, c + a}, {k, -a}}), m};
            GroupRingElement element = shift_construct(spec, g);
            Prediction pred;
            pred.A = predicted_A(base, spec.t_poly, m, g);  // n^2 (c + m p)
            pred.B = c + a * Int(g.p);
            DetReport rep = verify_prediction(element, g, pred, "GA_n2 construction");
            return {std::move(element), std::move(rep)};
        }
        default: break;
    }

    // The remaining tags are pinned to one presentation each; their block
    // values were derived for the generator r the closed forms assume.
    struct ClassData {
        unsigned p, r, n;
        GroupRingElement base;
        std::vector<Int> t_poly;
        Int block_a, block_b;  // predicted block at coset rep 1, as a + b*theta0
    };

    auto build = [&](unsigned p, unsigned r, unsigned n) {
        require(g.p == p && g.r == r && g.n == n,
                std::string("TagGroupMismatch: ") + tag_name(tag) + " is a (" +
                    std::to_string(p) + "," + std::to_string(r) + "," + std::to_string(n) +
                    ") construction");
        return zero_element(g);
    };

    ClassData d{g.p, g.r, g.n, zero_element(g), {}, Int(0), Int(0)};
    switch (tag) {
        case ConstructionTag::GA7_mult4: {
            d.base = build(7, 3, 6);
            d.base.set_coeff(0, 0, Int(1));  // 1 + (1-X)Y + Y^2
            d.base.set_coeff(0, 1, Int(1));
            d.base.set_coeff(1, 1, Int(-1));
            d.base.set_coeff(0, 2, Int(1));
            d.t_poly = sparse_poly(7, {{1u, c + b}, {6u, -b}});  // cX + b(X - X^6)
            d.block_a = Int(-3) + 12 * c + 7 * b;
            d.block_b = 0;
            break;
        }
        case ConstructionTag::GA7_mult9: {
            d.base = build(7, 3, 6);
            d.base.set_coeff(0, 0, Int(1));  // 1 + XY^2 + Y^3
            d.base.set_coeff(1, 2, Int(1));
            d.base.set_coeff(0, 3, Int(1));
            d.t_poly = sparse_poly(7, {{0u, c + b}, {3u, -b}});  // c + b(1 - X^3)
            d.block_a = Int(2) + 4 * c + 7 * b;
            d.block_b = 0;
            break;
        }
        case ConstructionTag::G21_mult9: {
            d.base = build(7, 2, 3);
            d.base.set_coeff(1, 0, Int(1));  // X + X^2 - 1 - Y
            d.base.set_coeff(2, 0, Int(1));
            d.base.set_coeff(0, 0, Int(-1));
            d.base.set_coeff(0, 1, Int(-1));
            // c + a(X^5 - X^3) + b(X^6 - X^3)
            d.t_poly = sparse_poly(7, {{0u, c}, {5u, a}, {6u, b}, {3u, -a - b}});
            d.block_a = 4 * c - 2 + 4 * a + 3 * b;
            d.block_b = 4 - 4 * c - a + b;
            break;
        }
        case ConstructionTag::G55_mult25: {
            d.base = build(11, 4, 5);
            d.base.set_coeff(5, 0, Int(1));  // X^5 + (X^3 - 1)Y - Y^2
            d.base.set_coeff(3, 1, Int(1));
            d.base.set_coeff(0, 1, Int(-1));
            d.base.set_coeff(0, 2, Int(-1));
            // c + a(1 - X^5) + b(X^2 - X^5)
            d.t_poly = sparse_poly(11, {{0u, c + a}, {2u, b}, {5u, -a - b}});
            d.block_a = Int(-6) + 8 * c + 11 * a + 5 * b;
            d.block_b = 1 + c + b;
            break;
        }
        case ConstructionTag::G78_mult6: {
            d.base = build(13, 4, 6);
            d.base.set_coeff(0, 0, Int(1));  // 1 - Y + (X^10 - 1)Y^3
            d.base.set_coeff(0, 1, Int(-1));
            d.base.set_coeff(10, 3, Int(1));
            d.base.set_coeff(0, 3, Int(-1));
            // c + a(X^3 - X^10) + b(X - X^3)
            d.t_poly = sparse_poly(13, {{0u, c}, {3u, a - b}, {10u, -a}, {1u, b}});
            d.block_a = Int(-7) + 37 * c + 13 * a + 6 * b;
            d.block_b = 1 - 2 * c + b;
            break;
        }
        case ConstructionTag::G78_mult4: {
            d.base = build(13, 4, 6);
            d.base.set_coeff(0, 0, Int(1));  // 1 + (1-X)Y + Y^2
            d.base.set_coeff(0, 1, Int(1));
            d.base.set_coeff(1, 1, Int(-1));
            d.base.set_coeff(0, 2, Int(1));
            // c + a(X^11 - 1) + b(X^11 - X^4)
            d.t_poly = sparse_poly(13, {{0u, c - a}, {11u, a + b}, {4u, -b}});
            d.block_a = Int(-3) - c - a + 7 * b;
            d.block_b = 1 + 2 * a - b;
            break;
        }
        case ConstructionTag::G78_mult9: {
            d.base = build(13, 4, 6);
            d.base.set_coeff(0, 0, Int(1));  // 1 + XY^2 + Y^3
            d.base.set_coeff(1, 2, Int(1));
            d.base.set_coeff(0, 3, Int(1));
            // c + a(1 - X^7) + b(2 - X^3 - X^7)
            d.t_poly = sparse_poly(13, {{0u, c + a + 2 * b}, {7u, -a - b}, {3u, -b}});
            d.block_a = Int(3) + 6 * c - a + 7 * b;
            d.block_b = Int(-1) - 2 * c + 2 * a - b;
            break;
        }
        default:
            throw value_error("BadIndex: unhandled construction tag");
    }

    GroupRingElement element = shift_construct({d.base, d.t_poly, m}, g);
    Prediction pred;
    pred.A = predicted_A(d.base, d.t_poly, m, g);
    if (d.block_b == 0 && g.n == g.p - 1) {
        pred.B = d.block_a;
    } else {
        pred.block = QuadInt(QuadField(g.p), d.block_a, d.block_b);
        pred.B = pred.block->norm();
    }
    DetReport rep = verify_prediction(element, g, pred, std::string(tag_name(tag)) + " construction");
    return {std::move(element), std::move(rep)};
}

namespace {

bool canonical_characterized(const GroupSpec& g) {
    return (g.p == 5 && g.r == 2 && g.n == 4) || (g.p == 7 && g.r == 3 && g.n == 6) ||
           (g.p == 7 && g.r == 2 && g.n == 3) || (g.p == 11 && g.r == 4 && g.n == 5) ||
           (g.p == 13 && g.r == 4 && g.n == 6);
}

struct Pick {
    ConstructionTag tag;
    ClassParams cp;
    std::optional<unsigned> s;  // LemmaEx only
    bool negate = false;
    std::map<std::string, Int> params;
};

/** Shared LemmaEx bookkeeping: m = s + n(c + p m_h), with c of least absolute value. */
void solve_lemma_common(const Int& m, const GroupSpec& g, unsigned& s, Int& c, Int& m_h) {
    const Int s_int = mod_floor(m, Int(g.n));
    s = static_cast<unsigned>(s_int.get_ui());
    const Int K = exact_div(m - s_int, Int(g.n));
    c = balanced_mod(K, g.p);
    m_h = exact_div(K - c, Int(g.p));
}

Pick pick_construction_ga(const GroupSpec& g, const Int& m, const Int& b) {
    const Int p(g.p);
    Pick pk{ConstructionTag::LemmaEx, {}, std::nullopt, false, {}};
    if (mpz_gcd_ui(nullptr, m.get_mpz_t(), g.n) == 1) {
        unsigned s;
        Int c, m_h;
        solve_lemma_common(m, g, s, c, m_h);
        const Int b_l = exact_div(b - Int(s) - Int(g.n) * c, p);
        pk.tag = ConstructionTag::LemmaEx;
        pk.s = s;
        pk.cp = {c, Int(0), b_l, m_h};
        pk.params = {{"s", Int(s)}, {"c", c}, {"b", b_l}, {"m", m_h}};
        return pk;
    }
    if (g.p == 5 || divides(Int(36), m)) {
        // 2 | m forces 16 | m for n = 4; for n = 6 this is the 36 | m class.
        const Int mu = exact_div(m, g.p == 5 ? Int(16) : Int(36));
        const Int c = balanced_mod(mu, g.p);
        const Int m_h = exact_div(mu - c, p);
        const Int a = exact_div(b - c, p);
        pk.tag = ConstructionTag::GA_n2;
        pk.cp = {c, a, Int(0), m_h};
        pk.params = {{"c", c}, {"a", a}, {"m", m_h}};
        return pk;
    }
    // p = 7 from here on.
    if (mod_floor(m, Int(2)) != 0) {  // odd and divisible by 9
        const Int c = exact_div(exact_div(m, Int(9)) - 1, Int(2));
        const Int bp = exact_div(b - 2 - 4 * c, Int(7));
        pk.tag = ConstructionTag::GA7_mult9;
        pk.cp = {c, Int(0), bp, Int(0)};
        pk.params = {{"c", c}, {"b", bp}};
        return pk;
    }
    // 4 | m, 3 does not divide m: m = 4 or 8 mod 12, the latter via the -Y flip.
    const bool flip = (mod_floor(m, Int(12)) == 8);
    const Int m_eff = flip ? -m : m;
    const Int b_eff = flip ? -b : b;
    const Int c = exact_div(m_eff - 4, Int(12));
    const Int bp = exact_div(b_eff + 3 - 12 * c, Int(7));
    pk.tag = ConstructionTag::GA7_mult4;
    pk.cp = {c, Int(0), bp, Int(0)};
    pk.negate = flip;
    pk.params = {{"c", c}, {"b", bp}};
    return pk;
}

Pick pick_construction_quad(const GroupSpec& g, const Int& m, const QuadInt& xi) {
    Pick pk{ConstructionTag::LemmaEx, {}, std::nullopt, false, {}};
    const Int p(g.p);
    const Int half = Int((g.p - 1) / 2);
    const bool flip = (g.p == 13 && mod_floor(m, Int(2)) == 0 && mod_floor(m, Int(3)) != 0 &&
                       mod_floor(m, Int(12)) == 8);
    const Int m_eff = flip ? -m : m;
    const Int xa = flip ? -xi.a() : xi.a();
    const Int xb = flip ? -xi.b() : xi.b();
    pk.negate = flip;

    if (mpz_gcd_ui(nullptr, m.get_mpz_t(), g.n) == 1) {
        unsigned s;
        Int c, m_h;
        solve_lemma_common(m, g, s, c, m_h);
        const Int a = exact_div(xi.a() - Int(s) - Int(g.n) * c - xi.b() * half, p);
        const Int b = a + xi.b();
        pk.tag = ConstructionTag::LemmaEx;
        pk.s = s;
        pk.cp = {c, a, b, m_h};
        pk.params = {{"s", Int(s)}, {"c", c}, {"a", a}, {"b", b}, {"m", m_h}};
        return pk;
    }
    if (g.p == 7) {  // 9 | m
        const Int c = exact_div(m, Int(9));
        const Int a = exact_div(xa - 3 * xb - 16 * c + 14, Int(7));
        const Int b = a + xb - 4 + 4 * c;
        pk.tag = ConstructionTag::G21_mult9;
        pk.cp = {c, a, b, Int(0)};
    } else if (g.p == 11) {  // 25 | m
        const Int c = exact_div(m, Int(25));
        const Int b = xb - 1 - c;
        const Int a = exact_div(xa - 5 * xb - 3 * c + 11, Int(11));
        pk.tag = ConstructionTag::G55_mult25;
        pk.cp = {c, a, b, Int(0)};
    } else if (divides(Int(36), m)) {
        const Int c = exact_div(m, Int(36));
        const Int b = xb - 1 + 2 * c;
        const Int a = exact_div(xa - 6 * xb - 49 * c + 13, Int(13));
        pk.tag = ConstructionTag::G78_mult6;
        pk.cp = {c, a, b, Int(0)};
    } else if (mod_floor(m, Int(2)) != 0) {  // odd, 9 | m
        const Int c = exact_div(exact_div(m, Int(9)) - 1, Int(2));
        const Int a = exact_div(xa + 7 * xb + 8 * c + 4, Int(13));
        const Int b = 2 * a - 1 - 2 * c - xb;
        pk.tag = ConstructionTag::G78_mult9;
        pk.cp = {c, a, b, Int(0)};
    } else {  // 4 | m, 3 does not divide m
        const Int c = exact_div(m_eff - 4, Int(12));
        const Int a = exact_div(xa + 7 * xb + c - 4, Int(13));
        const Int b = 2 * a + 1 - xb;
        pk.tag = ConstructionTag::G78_mult4;
        pk.cp = {c, a, b, Int(0)};
    }
    pk.params = {{"c", pk.cp.c}, {"a", pk.cp.a}, {"b", pk.cp.b}};
    return pk;
}

} // namespace

Realization realize_value(const GroupSpec& g, const Int& D) {
    if (!canonical_characterized(g))
        throw value_error("UnsupportedGroup: realize_value covers the characterized"
                          " presentations (5,2,4), (7,3,6), (7,2,3), (11,4,5), (13,4,6)");
    MembershipDecision dec = member_decide(g, D);
    if (dec.status == Status::NotAchievable)
        throw value_error("NotAchievable: " + dec.reason);
    if (dec.status == Status::Unknown)
        throw value_error("Unknown: " + dec.reason);

    if (D == -1) {
        auto [element, rep] = realize_class(g, ConstructionTag::NegY, {});
        return {std::move(element), std::move(rep), ConstructionTag::NegY, false, {}};
    }

    const Int m = *dec.m;
    Pick pk = dec.xi ? pick_construction_quad(g, m, *dec.xi)
                     : pick_construction_ga(g, m, *dec.b);

    GroupRingElement element = zero_element(g);
    DetReport rep;
    if (pk.tag == ConstructionTag::LemmaEx) {
        LemmaExParams lp;
        lp.c = pk.cp.c, lp.a = pk.cp.a, lp.b = pk.cp.b, lp.m = pk.cp.m;
        auto [el, pred] = realize_lemma_ex(g, *pk.s, lp);
        element = std::move(el);
        rep = factored_determinant(element, g);
    } else {
        auto [el, r] = realize_class(g, pk.tag, pk.cp);
        element = std::move(el);
        rep = std::move(r);
    }

    if (pk.negate) {
        element = mul(element, neg_y(g), g);
        rep = factored_determinant(element, g);
    }
    if (rep.D != D)
        throw internal_error("PredictionMismatch: realized determinant " + to_string(rep.D) +
                             " differs from the target " + to_string(D));
    return {std::move(element), std::move(rep), pk.tag, pk.negate, std::move(pk.params)};
}

} // namespace grpdet
