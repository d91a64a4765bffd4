#include "mpg/polynomial.hpp"

#include <stdexcept>

namespace mpg {

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(BigInt v) {
    Polynomial p;
    if (v != 0) p.c_ = {std::move(v)};
    return p;
}

Polynomial Polynomial::power(int k) {
    Polynomial p;
    p.c_.assign(k + 1, 0);
    p.c_[k] = 1;
    return p;
}

Polynomial Polynomial::falling_factorial(int k) {
    Polynomial p = constant(1);
    for (int i = 0; i < k; ++i) p = p * Polynomial({-BigInt(i), 1});
    return p;
}

const BigInt& Polynomial::coefficient(int i) const {
    static const BigInt kZero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

BigInt Polynomial::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (is_zero()) return zero();
    std::vector<BigInt> rem = c_;
    int dd = divisor.degree();
    const BigInt& lead = divisor.c_.back();
    int qd = degree() - dd;
    if (qd < 0) throw std::logic_error("polynomial division: degree too small for exact quotient");
    std::vector<BigInt> q(qd + 1, 0);
    for (int i = qd; i >= 0; --i) {
        BigInt& top = rem[i + dd];
        if (top % lead != 0) throw std::logic_error("polynomial division: non-zero remainder");
        q[i] = top / lead;
        for (int j = 0; j <= dd; ++j) rem[i + j] -= q[i] * divisor.c_[j];
    }
    for (const BigInt& r : rem)
        if (r != 0) throw std::logic_error("polynomial division: non-zero remainder");
    return Polynomial(std::move(q));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
        else if (c_[i] < 0) out += "-";
        BigInt a = abs(c_[i]);
        if (a != 1 || i == 0) out += a.str();
        if (i > 0) out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace mpg
