#pragma once

#include <string>

#include "vir/intpoly.hpp"

namespace vir {

// An element of the rational function field Q(t), stored as a reduced quotient
// of integer-coefficient polynomials.  Canonical form: gcd(num, den) = 1
// (including integer content) and den has positive leading coefficient, so
// equality is structural.  All arithmetic is exact.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    explicit Scalar(const BigInt& n) : num_(n), den_(1) {}
    explicit Scalar(const BigRat& q);
    Scalar(IntPoly num, IntPoly den);

    static Scalar t() { return Scalar(IntPoly::variable(), IntPoly(1)); }
    static Scalar frac(long p, long q) { return Scalar(IntPoly(p), IntPoly(q)); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    bool is_integer_constant() const;
    BigRat constant_value() const;  // requires is_constant()

    // Exact evaluation at a rational point; throws PoleAtPoint if the
    // denominator vanishes there.
    BigRat eval(const BigRat& t0) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str(const std::string& var = "t") const;

private:
    IntPoly num_;
    IntPoly den_;
    void reduce();
};

}  // namespace vir
