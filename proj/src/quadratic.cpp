#include "grpdet/quadratic.hpp"

#include "grpdet/error.hpp"
#include "grpdet/factorize.hpp"

#include <sstream>
#include <string>

namespace grpdet {

QuadField::QuadField(unsigned p_) : p(p_) {
    if (p < 3 || p % 2 == 0 || !is_prime(Int(p)))
        throw value_error("NotPrime: QuadField needs an odd prime, got " + std::to_string(p));
    eps = (p % 4 == 1) ? 1 : -1;
}

QuadInt::QuadInt(const QuadField& f, Int a, Int b) : f_(f), a_(std::move(a)), b_(std::move(b)) {}

namespace {
void check_same_field(const QuadField& x, const QuadField& y) {
    if (!(x == y)) throw value_error("QuadInt: operands live in different fields");
}
} // namespace

QuadInt QuadInt::operator+(const QuadInt& o) const {
    check_same_field(f_, o.f_);
    return QuadInt(f_, a_ + o.a_, b_ + o.b_);
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
    check_same_field(f_, o.f_);
    return QuadInt(f_, a_ - o.a_, b_ - o.b_);
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
    check_same_field(f_, o.f_);
    // theta0^2 = theta0 + (d-1)/4
    Int q = (f_.d() - 1) / 4;
    return QuadInt(f_, a_ * o.a_ + b_ * o.b_ * q, a_ * o.b_ + b_ * o.a_ + b_ * o.b_);
}

QuadInt QuadInt::operator-() const { return QuadInt(f_, -a_, -b_); }

QuadInt QuadInt::operator*(const Int& s) const { return QuadInt(f_, a_ * s, b_ * s); }

bool QuadInt::operator==(const QuadInt& o) const {
    return f_ == o.f_ && a_ == o.a_ && b_ == o.b_;
}

QuadInt QuadInt::conj() const { return QuadInt(f_, a_ + b_, -b_); }

Int QuadInt::norm() const { return a_ * a_ + a_ * b_ + b_ * b_ * ((1 - f_.d()) / 4); }

bool QuadInt::is_unit() const {
    Int n = norm();
    return n == 1 || n == -1;
}

CyclotomicInt QuadInt::to_cyclotomic() const {
    CyclotomicInt th = theta0_cyclotomic(f_.p);
    return th * b_ + CyclotomicInt::integer(f_.p, a_);
}

std::string QuadInt::to_string() const {
    std::ostringstream os;
    os << a_.get_str();
    if (b_ != 0) {
        os << (b_ < 0 ? " - " : " + ");
        Int ab = abs(b_);
        if (ab != 1) os << ab.get_str() << "*";
        os << "theta0(" << f_.p << "," << (f_.eps > 0 ? "+1" : "-1") << ")";
    }
    return os.str();
}

CyclotomicInt theta0_cyclotomic(unsigned p) {
    CyclotomicInt th = CyclotomicInt::integer(p, 1);
    std::vector<bool> square(p, false);
    for (unsigned long v = 1; v < p; ++v) square[(v * v) % p] = true;
    for (unsigned v = 1; v < p; ++v)
        if (square[v]) th += CyclotomicInt::root_power(p, v);
    return th;
}

std::pair<CyclotomicInt, QuadInt> gauss_sum(const GroupSpec& g) {
    if (g.n * 2 != g.p - 1)
        throw value_error("WrongShape: gauss_sum requires n = (p-1)/2");
    CyclotomicInt s(g.p);
    unsigned long x = 1;
    for (unsigned i = 0; i < g.n; ++i) {
        s += CyclotomicInt::root_power(g.p, static_cast<long>(x));
        x = (x * g.r) % g.p;
    }
    return {s, QuadInt(QuadField(g.p), -1, 1)};
}

QuadInt quad_embed(const CyclotomicInt& x, const QuadField& f) {
    if (x.prime() != f.p) throw value_error("quad_embed: prime mismatch");
    const unsigned p = f.p;
    // fixed by the square-index conjugations <=> fixed by one generator of them
    unsigned g = 2;
    for (; g < p; ++g)
        if (ord_mod(g, p) == p - 1) break;
    unsigned long gen_sq = (static_cast<unsigned long>(g) * g) % p;
    if (x.conjugate(static_cast<long>(gen_sq)) != x)
        throw value_error("NotInSubfield: element is moved by a square conjugation");
    // solve x = a + b * theta0 on the canonical basis
    CyclotomicInt th = theta0_cyclotomic(p);
    unsigned pivot = 1;
    for (; pivot + 1 < p; ++pivot)
        if (th.coeff(pivot) != 0) break;
    if (th.coeff(pivot) == 0) throw internal_error("quad_embed: degenerate theta0");
    Int b = x.coeff(pivot) / th.coeff(pivot);
    Int a = x.coeff(0) - b * th.coeff(0);
    QuadInt cand(f, a, b);
    if (cand.to_cyclotomic() != x)
        throw value_error("NotInSubfield: element is not an integer of the quadratic field");
    return cand;
}

QuadInt fundamental_unit(const QuadField& f) {
    if (f.eps != 1) throw value_error("fundamental_unit: field is imaginary");
    // Continued fraction of theta0 = (1 + sqrt(p))/2, exact arithmetic on
    // quadratic irrationals (P + sqrt(p))/Q; convergents p_k/q_k give the
    // candidate units p_k... here named (h, k) to avoid clashing with f.p.
    const Int D = f.d();
    Int sq = sqrt(D);  // floor sqrt
    Int P = 1, Q = 2;  // (1 + sqrt(D))/2
    Int h0 = 1, h1, k0 = 0, k1;
    Int a = (P + sq) / Q;
    h1 = a;
    k1 = 1;
    for (int steps = 0; steps < 1000; ++steps) {
        QuadInt cand(f, -h1, k1);  // -h + k*theta0, a unit iff |norm| = 1
        Int nrm = cand.norm();
        if (nrm == 1 || nrm == -1) {
            // normalize to the unit > 1 among {cand, -cand, conj, -conj}
            QuadInt u = cand;
            auto greater_one = [&](const QuadInt& z) {
                // z = za + zb*(1+sqrt(D))/2 > 1  <=>  lhs + zb*sqrt(D) > 0
                // with lhs = 2*za + zb - 2; compare exactly by squaring.
                Int lhs = 2 * z.a() + z.b() - 2;
                if (z.b() == 0) return lhs > 0;
                Int l2 = lhs * lhs, r2 = z.b() * z.b() * D;
                if (z.b() > 0) return lhs >= 0 || l2 < r2;
                return lhs > 0 && l2 > r2;
            };
            for (const QuadInt& z : {cand, -cand, cand.conj(), -cand.conj()})
                if (greater_one(z)) {
                    u = z;
                    break;
                }
            if (!u.is_unit() || !greater_one(u))
                throw internal_error("fundamental_unit: normalization failed");
            return u;
        }
        // next continued fraction step for (P + sqrt(D))/Q
        P = a * Q - P;
        Q = (D - P * P) / Q;
        a = (P + sq) / Q;
        Int h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
    }
    throw internal_error("fundamental_unit: continued fraction did not terminate");
}

} // namespace grpdet
