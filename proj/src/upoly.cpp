#include "vir/upoly.hpp"

#include <stdexcept>

namespace vir {

UPoly::UPoly(Scalar c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::variable() { return UPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[i];
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

Scalar UPoly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly::divmod by zero");
    UPoly rem(*this);
    if (degree() < d.degree()) return {UPoly(), rem};
    std::vector<Scalar> q(degree() - d.degree() + 1, Scalar(0));
    const Scalar lead_inv = d.c_.back().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const int shift = rem.degree() - d.degree();
        const Scalar qc = rem.c_.back() * lead_inv;
        q[shift] = qc;
        std::vector<Scalar> sub(shift + d.c_.size(), Scalar(0));
        for (size_t i = 0; i < d.c_.size(); ++i) sub[shift + i] = qc * d.c_[i];
        rem = rem - UPoly(std::move(sub));
    }
    return {UPoly(std::move(q)), rem};
}

UPoly UPoly::interpolate(const std::vector<std::pair<Scalar, Scalar>>& points) {
    // Newton's divided differences.
    const size_t n = points.size();
    std::vector<Scalar> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - k].first);
    UPoly result;
    UPoly basis(Scalar(1));
    for (size_t i = 0; i < n; ++i) {
        result = result + UPoly(dd[i]) * basis;
        basis = basis * (UPoly::variable() - UPoly(points[i].first));
    }
    return result;
}

}  // namespace vir
