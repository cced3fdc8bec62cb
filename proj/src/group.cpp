#include "grpdet/group.hpp"

#include "grpdet/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace grpdet {

namespace {

bool is_small_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string group_name(unsigned p, unsigned r, unsigned n) {
    if (n == p - 1) return "GA(1," + std::to_string(p) + ")";
    if (n == 2) return "D" + std::to_string(2 * p);
    if (p == 7 && n == 3) return "SmallGroup(21,1)";
    if (p == 11 && n == 5) return "SmallGroup(55,1)";
    if (p == 13 && n == 6) return "SmallGroup(78,1)";
    (void)r;
    return "Z" + std::to_string(p) + ":Z" + std::to_string(n);
}

} // namespace

GroupSpec make_group(unsigned p, unsigned r, unsigned n) {
    if (!is_small_prime(p) || p == 2)
        throw value_error("NotPrime: p = " + std::to_string(p) + " is not an odd prime");
    if (n == 0 || (p - 1) % n != 0)
        throw value_error("NotDivisor: n = " + std::to_string(n) + " does not divide p-1");
    unsigned o = ord_mod(r, p);
    if (o != n)
        throw value_error("OrderMismatch: ord_" + std::to_string(p) + "(" + std::to_string(r) +
                          ") = " + std::to_string(o) + " != " + std::to_string(n));
    GroupSpec g;
    g.p = p;
    g.r = r % p;
    g.n = n;
    g.t = (p - 1) / n;
    // cosets of <r> in Z_p^*; representative = least member, sorted ascending
    std::vector<bool> seen(p, false);
    for (unsigned v = 1; v < p; ++v) {
        if (seen[v]) continue;
        g.coset_reps.push_back(v);
        unsigned long x = v;
        for (unsigned i = 0; i < n; ++i) {
            seen[x] = true;
            x = (x * g.r) % p;
        }
    }
    g.name = group_name(p, g.r, n);
    return g;
}

GroupRingElement::GroupRingElement(unsigned p, unsigned n)
    : p_(p), n_(n), a_(static_cast<std::size_t>(p) * n, Int(0)) {}

const Int& GroupRingElement::coeff(unsigned i, unsigned j) const {
    if (i >= p_ || j >= n_) throw value_error("coeff: exponent out of range");
    return a_[static_cast<std::size_t>(i) * n_ + j];
}

void GroupRingElement::set_coeff(unsigned i, unsigned j, const Int& v) {
    if (i >= p_ || j >= n_) throw value_error("set_coeff: exponent out of range");
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
}

void GroupRingElement::add_coeff(unsigned i, unsigned j, const Int& v) {
    if (i >= p_ || j >= n_) throw value_error("add_coeff: exponent out of range");
    a_[static_cast<std::size_t>(i) * n_ + j] += v;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    return p_ == o.p_ && n_ == o.n_ && a_ == o.a_;
}

unsigned GroupRingElement::support() const {
    unsigned s = 0;
    for (const auto& v : a_)
        if (v != 0) ++s;
    return s;
}

GroupRingElement zero_element(const GroupSpec& g) { return GroupRingElement(g.p, g.n); }

GroupRingElement identity_element(const GroupSpec& g) {
    GroupRingElement e(g.p, g.n);
    e.set_coeff(0, 0, 1);
    return e;
}

GroupRingElement monomial(const GroupSpec& g, const Int& c, unsigned i, unsigned j) {
    GroupRingElement e(g.p, g.n);
    e.set_coeff(i, j, c);
    return e;
}

GroupRingElement all_ones_element(const GroupSpec& g) {
    GroupRingElement e(g.p, g.n);
    for (unsigned i = 0; i < g.p; ++i)
        for (unsigned j = 0; j < g.n; ++j) e.set_coeff(i, j, 1);
    return e;
}

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.p() != b.p() || a.n() != b.n())
        throw value_error("add: elements of different group rings");
    GroupRingElement r(a.p(), a.n());
    for (unsigned i = 0; i < a.p(); ++i)
        for (unsigned j = 0; j < a.n(); ++j) r.set_coeff(i, j, a.coeff(i, j) + b.coeff(i, j));
    return r;
}

GroupRingElement scalar_mul(const Int& c, const GroupRingElement& a) {
    GroupRingElement r(a.p(), a.n());
    for (unsigned i = 0; i < a.p(); ++i)
        for (unsigned j = 0; j < a.n(); ++j) r.set_coeff(i, j, c * a.coeff(i, j));
    return r;
}

GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b, const GroupSpec& g) {
    if (a.p() != g.p || a.n() != g.n || b.p() != g.p || b.n() != g.n)
        throw value_error("mul: element does not match the group");
    // precompute r^j mod p
    std::vector<unsigned long> rpow(g.n);
    rpow[0] = 1;
    for (unsigned j = 1; j < g.n; ++j) rpow[j] = (rpow[j - 1] * g.r) % g.p;
    GroupRingElement c(g.p, g.n);
    for (unsigned i = 0; i < g.p; ++i)
        for (unsigned j = 0; j < g.n; ++j) {
            const Int& av = a.coeff(i, j);
            if (av == 0) continue;
            for (unsigned k = 0; k < g.p; ++k)
                for (unsigned l = 0; l < g.n; ++l) {
                    const Int& bv = b.coeff(k, l);
                    if (bv == 0) continue;
                    unsigned ii = static_cast<unsigned>((i + k * rpow[j]) % g.p);
                    unsigned jj = (j + l) % g.n;
                    c.add_coeff(ii, jj, av * bv);
                }
        }
    return c;
}

std::vector<std::vector<Int>> f_components(const GroupRingElement& e, const GroupSpec& g) {
    if (e.p() != g.p || e.n() != g.n)
        throw value_error("f_components: element does not match the group");
    std::vector<std::vector<Int>> f(g.n, std::vector<Int>(g.p, Int(0)));
    for (unsigned j = 0; j < g.n; ++j)
        for (unsigned i = 0; i < g.p; ++i) f[j][i] = e.coeff(i, j);
    return f;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t k = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    }
    bool eof() {
        skip_ws();
        return k >= s.size();
    }
    char peek() {
        skip_ws();
        return s[k];
    }
    [[noreturn]] void fail(const std::string& why) {
        throw value_error("parse_element: " + why + " at position " + std::to_string(k));
    }
    Int number() {
        skip_ws();
        std::size_t start = k;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == start) fail("expected a number");
        return Int(s.substr(start, k - start));
    }
    unsigned exponent() {
        skip_ws();
        if (k < s.size() && s[k] == '^') {
            ++k;
            Int e = number();
            if (e < 0 || e > 1000000) fail("exponent out of range");
            return static_cast<unsigned>(e.get_ui());
        }
        return 1;
    }
};

} // namespace

GroupRingElement parse_element(const std::string& text, const GroupSpec& g) {
    GroupRingElement e(g.p, g.n);
    Parser in(text);
    if (in.eof()) throw value_error("parse_element: empty input");
    bool any = false;
    while (!in.eof()) {
        int sign = 1;
        char c = in.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++in.k;
        } else if (any) {
            in.fail("expected '+' or '-' between terms");
        }
        in.skip_ws();
        if (in.eof()) in.fail("dangling sign");
        Int coeff = 1;
        bool have_coeff = false;
        c = in.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = in.number();
            have_coeff = true;
        }
        unsigned xi = 0, yj = 0;
        bool have_x = false, have_y = false;
        while (true) {
            bool have_mono = have_x || have_y;
            in.skip_ws();
            if (in.k < in.s.size() && in.s[in.k] == '*') {
                ++in.k;
                in.skip_ws();
            } else if (have_coeff || have_mono) {
                break;  // monomial factors must be '*'-joined
            }
            if (in.k >= in.s.size()) {
                if (have_coeff || have_mono) in.fail("dangling '*'");
                break;
            }
            char m = in.s[in.k];
            if (m == 'X' || m == 'x') {
                if (have_x) in.fail("repeated X factor");
                ++in.k;
                xi = in.exponent();
                have_x = true;
            } else if (m == 'Y' || m == 'y') {
                if (have_y) in.fail("repeated Y factor");
                ++in.k;
                yj = in.exponent();
                have_y = true;
            } else if (!have_coeff && !have_mono) {
                in.fail("expected a coefficient or X/Y");
            } else {
                in.fail("expected X or Y after '*'");
            }
        }
        bool have_mono = have_x || have_y;
        if (!have_coeff && !have_mono) in.fail("empty term");
        if (xi >= g.p) in.fail("X exponent must be < p");
        if (yj >= g.n) in.fail("Y exponent must be < n");
        e.add_coeff(xi, yj, sign * coeff);
        any = true;
    }
    return e;
}

std::string render_element(const GroupRingElement& e) {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < e.p(); ++i)
        for (unsigned j = 0; j < e.n(); ++j) {
            const Int& v = e.coeff(i, j);
            if (v == 0) continue;
            if (first) {
                if (v < 0) os << "-";
                first = false;
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            Int av = abs(v);
            if (i == 0 && j == 0) {
                os << av.get_str();
            } else {
                os << av.get_str();
                if (i > 0) {
                    os << "*X";
                    if (i > 1) os << "^" << i;
                }
                if (j > 0) {
                    os << "*Y";
                    if (j > 1) os << "^" << j;
                }
            }
        }
    if (first) return "0";
    return os.str();
}

} // namespace grpdet
