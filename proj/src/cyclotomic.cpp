#include "grpdet/cyclotomic.hpp"

#include "grpdet/error.hpp"

#include <sstream>

namespace grpdet {

namespace {

void check_same_prime(unsigned a, unsigned b) {
    if (a != b) throw value_error("PrimeMismatch: operands live in different cyclotomic rings");
}

/**
 * Reduce a length-p coefficient vector on 1, w, ..., w^(p-1) to the canonical
 * basis by substituting w^(p-1) = -(1 + w + ... + w^(p-2)).
 */
std::vector<Int> reduce_full(std::vector<Int> d) {
    unsigned p = static_cast<unsigned>(d.size());
    const Int top = d[p - 1];
    d.pop_back();
    if (top != 0)
        for (auto& x : d) x -= top;
    return d;
}

} // namespace

CyclotomicInt::CyclotomicInt(unsigned p) : p_(p), c_(p - 1, Int(0)) {
    if (p < 3) throw value_error("CyclotomicInt: p must be an odd prime >= 3");
}

CyclotomicInt CyclotomicInt::integer(unsigned p, const Int& v) {
    CyclotomicInt x(p);
    x.c_[0] = v;
    return x;
}

CyclotomicInt CyclotomicInt::root_power(unsigned p, long k) {
    CyclotomicInt x(p);
    long e = mod_floor(k, static_cast<long>(p));
    if (e == static_cast<long>(p) - 1) {
        for (auto& v : x.c_) v = -1;
    } else {
        x.c_[static_cast<unsigned>(e)] = 1;
    }
    return x;
}

const Int& CyclotomicInt::coeff(unsigned k) const {
    if (k >= p_ - 1) throw value_error("CyclotomicInt::coeff: index out of range");
    return c_[k];
}

void CyclotomicInt::set_coeff(unsigned k, const Int& v) {
    if (k >= p_ - 1) throw value_error("CyclotomicInt::set_coeff: index out of range");
    c_[k] = v;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    check_same_prime(p_, o.p_);
    CyclotomicInt r(p_);
    for (unsigned k = 0; k + 1 < p_; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    check_same_prime(p_, o.p_);
    for (unsigned k = 0; k + 1 < p_; ++k) c_[k] += o.c_[k];
    return *this;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    check_same_prime(p_, o.p_);
    CyclotomicInt r(p_);
    for (unsigned k = 0; k + 1 < p_; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt r(p_);
    for (unsigned k = 0; k + 1 < p_; ++k) r.c_[k] = -c_[k];
    return r;
}

CyclotomicInt CyclotomicInt::operator*(const Int& s) const {
    CyclotomicInt r(p_);
    for (unsigned k = 0; k + 1 < p_; ++k) r.c_[k] = c_[k] * s;
    return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    check_same_prime(p_, o.p_);
    // convolve with exponents folded mod p, then reduce w^(p-1)
    std::vector<Int> d(p_, Int(0));
    for (unsigned i = 0; i + 1 < p_; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j + 1 < p_; ++j) {
            if (o.c_[j] == 0) continue;
            d[(i + j) % p_] += c_[i] * o.c_[j];
        }
    }
    CyclotomicInt r(p_);
    r.c_ = reduce_full(std::move(d));
    return r;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) {
    *this = *this * o;
    return *this;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
    return p_ == o.p_ && c_ == o.c_;
}

CyclotomicInt CyclotomicInt::conjugate(long j) const {
    long e = mod_floor(j, static_cast<long>(p_));
    if (e == 0) throw value_error("BadIndex: conjugation index divisible by p");
    std::vector<Int> d(p_, Int(0));
    for (unsigned k = 0; k + 1 < p_; ++k) {
        if (c_[k] == 0) continue;
        d[(static_cast<unsigned long>(e) * k) % p_] += c_[k];
    }
    CyclotomicInt r(p_);
    r.c_ = reduce_full(std::move(d));
    return r;
}

bool CyclotomicInt::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool CyclotomicInt::is_rational_integer() const {
    for (unsigned k = 1; k + 1 < p_; ++k)
        if (c_[k] != 0) return false;
    return true;
}

Int CyclotomicInt::rational_value() const {
    if (!is_rational_integer())
        throw value_error("rational_value: element is not a rational integer");
    return c_[0];
}

std::string CyclotomicInt::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (unsigned k = p_ - 1; k-- > 0;) {
        const Int& v = c_[k];
        if (v == 0) continue;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        Int av = abs(v);
        if (av != 1 || k == 0) os << av.get_str();
        if (k > 0) {
            if (av != 1) os << "*";
            os << "w";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

CyclotomicInt eval_at_root(const std::vector<Int>& f, unsigned p, long j) {
    if (f.size() > p) throw value_error("eval_at_root: polynomial degree must be < p");
    std::vector<Int> d(p, Int(0));
    long e = mod_floor(j, static_cast<long>(p));
    for (unsigned i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        d[(static_cast<unsigned long>(e) * i) % p] += f[i];
    }
    CyclotomicInt r(p);
    for (unsigned k = 0; k + 1 < p; ++k) r.set_coeff(k, d[k]);
    if (d[p - 1] != 0) {
        for (unsigned k = 0; k + 1 < p; ++k) r.set_coeff(k, r.coeff(k) - d[p - 1]);
    }
    return r;
}

} // namespace grpdet
