#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace vir {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Univariate polynomial over Z, dense representation; c_[i] is the t^i
// coefficient.  Invariant: no trailing zeros (the zero polynomial is empty).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(long n);
    explicit IntPoly(BigInt n);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly variable();  // t
    static IntPoly monomial(BigInt c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    const BigInt& leading() const;
    BigInt coeff(int i) const;  // 0 beyond the degree
    const std::vector<BigInt>& coeffs() const { return c_; }
    int term_count() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    friend IntPoly operator*(const BigInt& k, const IntPoly& a);
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    BigRat eval(const BigRat& x) const;

    BigInt content() const;    // gcd of the coefficients, >= 0
    IntPoly primitive() const;

    // Full gcd in Z[t] (content times primitive gcd), positive leading coeff.
    static IntPoly gcd(IntPoly a, IntPoly b);
    static IntPoly lcm(const IntPoly& a, const IntPoly& b);
    // Quotient a/b; throws std::logic_error if the division is not exact.
    static IntPoly div_exact(const IntPoly& a, const IntPoly& b);

    // Crude size measure for pivot heuristics: degree plus total coefficient bits.
    long size_measure() const;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<BigInt> c_;
    void trim();
};

}  // namespace vir
