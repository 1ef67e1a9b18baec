#include "vir/intpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace vir {

IntPoly::IntPoly(long n) {
    if (n != 0) c_.emplace_back(n);
}

IntPoly::IntPoly(BigInt n) {
    if (n != 0) c_.push_back(std::move(n));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::variable() { return monomial(BigInt(1), 1); }

IntPoly IntPoly::monomial(BigInt c, int deg) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(deg + 1, BigInt(0));
        p.c_[deg] = std::move(c);
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool IntPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const BigInt& IntPoly::leading() const {
    static const BigInt zero(0);
    return c_.empty() ? zero : c_.back();
}

BigInt IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return BigInt(0);
    return c_[i];
}

int IntPoly::term_count() const {
    int n = 0;
    for (const auto& c : c_)
        if (c != 0) ++n;
    return n;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly operator*(const BigInt& k, const IntPoly& a) {
    if (k == 0) return IntPoly();
    IntPoly r(a);
    for (auto& c : r.c_) c *= k;
    return r;
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += BigRat(*it);
        acc.canonicalize();
    }
    return acc;
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    IntPoly r(*this);
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        IntPoly lead = IntPoly::monomial(a.leading(), shift);
        a = b.leading() * a - lead * b;
    }
    return a;
}

}  // namespace

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (a.leading() < 0) a = -a;
        return a;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    a = a.primitive();
    b = b.primitive();
    // Primitive PRS: degrees stay small at this scale.
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPoly() : r.primitive();
    }
    if (a.leading() < 0) a = -a;
    return g * a;
}

IntPoly IntPoly::lcm(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly l = div_exact(a * b, gcd(a, b));
    if (l.leading() < 0) l = -l;
    return l;
}

IntPoly IntPoly::div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::logic_error("IntPoly::div_exact by zero");
    if (a.is_zero()) return IntPoly();
    IntPoly rem(a);
    std::vector<BigInt> q(a.degree() - b.degree() + 1, BigInt(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        BigInt qc;
        if (!mpz_divisible_p(rem.leading().get_mpz_t(), b.leading().get_mpz_t()))
            throw std::logic_error("IntPoly::div_exact: inexact division");
        mpz_divexact(qc.get_mpz_t(), rem.leading().get_mpz_t(), b.leading().get_mpz_t());
        const int shift = rem.degree() - b.degree();
        q[shift] = qc;
        rem = rem - monomial(qc, shift) * b;
    }
    if (!rem.is_zero()) throw std::logic_error("IntPoly::div_exact: nonzero remainder");
    return IntPoly(std::move(q));
}

long IntPoly::size_measure() const {
    long bits = 0;
    for (const auto& c : c_) bits += static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2));
    return degree() * 16 + bits;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const BigInt& c = c_[d];
        if (c == 0) continue;
        const bool neg = c < 0;
        BigInt mag = neg ? BigInt(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (d == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

}  // namespace vir
