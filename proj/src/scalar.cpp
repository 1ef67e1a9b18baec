#include "vir/scalar.hpp"

#include <stdexcept>

#include "vir/errors.hpp"

namespace vir {

Scalar::Scalar(const BigRat& q)
    : num_(BigInt(q.get_num())), den_(BigInt(q.get_den())) {
    reduce();
}

Scalar::Scalar(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    reduce();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = IntPoly::div_exact(num_, g);
        den_ = IntPoly::div_exact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool Scalar::is_integer_constant() const {
    return num_.degree() <= 0 && den_.is_one();
}

BigRat Scalar::constant_value() const {
    if (!is_constant()) throw std::logic_error("Scalar::constant_value: not constant");
    BigRat q(num_.coeff(0), den_.coeff(0));
    q.canonicalize();
    return q;
}

BigRat Scalar::eval(const BigRat& t0) const {
    BigRat d = den_.eval(t0);
    if (d == 0) throw PoleAtPoint("denominator vanishes at t = " + t0.get_str());
    BigRat q = num_.eval(t0) / d;
    q.canonicalize();
    return q;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1);
    Scalar base(*this);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string Scalar::str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);
    std::string n = num_.str(var);
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.str(var);
    // The denominator needs parentheses unless it prints as a bare integer or
    // a monic power of the variable.
    const bool monic_power = den_.term_count() == 1 && den_.leading() == 1;
    if (!(den_.degree() == 0 || monic_power)) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace vir
