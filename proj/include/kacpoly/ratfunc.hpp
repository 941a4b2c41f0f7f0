#pragma once

#include "kacpoly/polynomial.hpp"

#include <gmpxx.h>

#include <string>

namespace kacpoly {

/// Element of Q(q) kept as num/den over Z[q] in canonical form: num and den
/// coprime, den with positive leading coefficient, and the integer contents of
/// num and den sharing no common factor. Zero is 0/1. Canonical forms are
/// unique, so equality is coefficientwise.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const mpz_class& c) : num_(c), den_(1) {}
    RationalFunction(const mpq_class& c);
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}
    /// Throws DomainError if den is zero.
    RationalFunction(Polynomial num, Polynomial den);

    /// q^k for any integer k.
    static RationalFunction q_power(int k);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    /// True when the value lies in Z[q].
    bool is_integer_polynomial() const noexcept { return den_.is_one(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const;

    /// Adams operation f(q) -> f(q^n), n >= 1.
    RationalFunction adams(int n) const;

    /// Exact value at a rational point; throws DomainError at a pole.
    mpq_class eval_at(const mpq_class& x) const;

    std::string to_string() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    struct Canonical {};
    RationalFunction(Polynomial num, Polynomial den, Canonical)
        : num_(std::move(num)), den_(std::move(den)) {}
    void fix_content_and_sign();
    void canonicalize();

    Polynomial num_;
    Polynomial den_;
};

enum class ArithOp { add, sub, mul, div };

/// Binary arithmetic dispatch; div by zero throws DomainError.
RationalFunction ratfunc_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);

inline RationalFunction adams_ratfunc(const RationalFunction& f, int n) { return f.adams(n); }
inline mpq_class eval_at(const RationalFunction& f, const mpq_class& x) { return f.eval_at(x); }

} // namespace kacpoly
