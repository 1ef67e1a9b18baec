#pragma once

#include <map>
#include <string>
#include <utility>

#include "vir/scalar.hpp"

namespace vir {

// Bivariate polynomial over Q(t): a finite map (x-degree, y-degree) -> Scalar.
// No zero coefficients are stored.
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly constant(Scalar c);
    static BiPoly x();
    static BiPoly y();

    bool is_zero() const { return c_.empty(); }
    int degree_x() const;
    const std::map<std::pair<int, int>, Scalar>& terms() const { return c_; }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }

    Scalar eval(const Scalar& x0, const Scalar& y0) const;

    std::string str(const std::string& var = "t") const;

private:
    std::map<std::pair<int, int>, Scalar> c_;
    void add_term(int dx, int dy, const Scalar& v);
};

}  // namespace vir
