#ifndef MPG_POLYNOMIAL_HPP
#define MPG_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace mpg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer-coefficient univariate polynomial, coefficients c0..cn of
/// t^0..t^n. The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(BigInt v);
    /// t^k
    static Polynomial power(int k);
    /// t(t-1)...(t-k+1)
    static Polynomial falling_factorial(int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<BigInt>& coefficients() const { return c_; }
    const BigInt& coefficient(int i) const;

    BigInt evaluate(const BigInt& t) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    /// Exact division; throws if the remainder is non-zero (an invariant
    /// violation for the clique-separator product rule).
    Polynomial divide_exact(const Polynomial& divisor) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

}  // namespace mpg

#endif
