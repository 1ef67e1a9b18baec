#include "vir/bipoly.hpp"

#include <sstream>

namespace vir {

BiPoly BiPoly::constant(Scalar c) {
    BiPoly p;
    if (!c.is_zero()) p.c_[{0, 0}] = std::move(c);
    return p;
}

BiPoly BiPoly::x() {
    BiPoly p;
    p.c_[{1, 0}] = Scalar(1);
    return p;
}

BiPoly BiPoly::y() {
    BiPoly p;
    p.c_[{0, 1}] = Scalar(1);
    return p;
}

int BiPoly::degree_x() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.first);
    return d;
}

void BiPoly::add_term(int dx, int dy, const Scalar& v) {
    auto key = std::make_pair(dx, dy);
    auto it = c_.find(key);
    if (it == c_.end()) {
        if (!v.is_zero()) c_.emplace(key, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r(a);
    for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, v);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r(a);
    for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, -v);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, v] : c_) r.c_[k] = -v;
    return r;
}

Scalar BiPoly::eval(const Scalar& x0, const Scalar& y0) const {
    Scalar acc(0);
    for (const auto& [k, v] : c_) acc += v * x0.pow(k.first) * y0.pow(k.second);
    return acc;
}

std::string BiPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str(var) << ")";
        if (k.first > 0) {
            os << "*x";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            os << "*y";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

}  // namespace vir
