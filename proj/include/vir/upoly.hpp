#pragma once

#include <utility>
#include <vector>

#include "vir/scalar.hpp"

namespace vir {

// Univariate polynomial with Q(t) coefficients (used for determinants viewed
// as polynomials in the conformal weight h).  Dense, ascending degree.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Scalar c);
    explicit UPoly(std::vector<Scalar> coeffs);
    static UPoly variable();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(int i) const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    Scalar eval(const Scalar& x) const;

    // Division with remainder over the coefficient field Q(t).
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

    // Unique interpolating polynomial through distinct nodes (x_i, y_i).
    static UPoly interpolate(const std::vector<std::pair<Scalar, Scalar>>& points);

private:
    std::vector<Scalar> c_;
    void trim();
};

}  // namespace vir
