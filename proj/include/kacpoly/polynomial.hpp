#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace kacpoly {

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients, stored in ascending degree with no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c);
    Polynomial(const mpz_class& c);
    Polynomial(std::initializer_list<long> ascending);
    explicit Polynomial(std::vector<mpz_class> ascending);

    /// c * q^k.
    static Polynomial monomial(const mpz_class& c, int k);
    /// 1 + q + ... + q^(n-1).
    static Polynomial geometric(int n);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Lowest degree with a nonzero coefficient; -1 for zero.
    int valuation() const noexcept;
    const mpz_class& leading() const { return coeffs_.back(); }
    /// Coefficient of q^k; zero outside the stored range.
    mpz_class operator[](int k) const;
    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }

    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const mpz_class& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const mpz_class& c) { return a *= c; }
    Polynomial operator-() const;

    /// Multiply by q^k, k >= 0.
    Polynomial shifted(int k) const;
    /// f(q) -> f(q^n).
    Polynomial substitute_power(int n) const;

    /// gcd of the coefficients, non-negative.
    mpz_class content() const;
    /// Divide by the content; sign is kept.
    Polynomial primitive_part() const;
    /// Divides every coefficient by c; throws ConsistencyError if inexact.
    Polynomial divided_exactly(const mpz_class& c) const;

    mpq_class eval(const mpq_class& x) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Exact quotient a / b in Z[q]; throws ConsistencyError if b does not divide a.
Polynomial divide_exactly(const Polynomial& a, const Polynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
/// Integer contents are ignored.
Polynomial primitive_gcd(const Polynomial& a, const Polynomial& b);

} // namespace kacpoly
