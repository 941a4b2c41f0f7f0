#include "kacpoly/ratfunc.hpp"

#include "kacpoly/errors.hpp"

namespace kacpoly {

RationalFunction::RationalFunction(const mpq_class& c)
    : num_(c.get_num()), den_(c.get_den())
{
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw DomainError("rational function with zero denominator");
    canonicalize();
}

RationalFunction RationalFunction::q_power(int k)
{
    if (k >= 0)
        return RationalFunction(Polynomial::monomial(1, k), Polynomial(1), Canonical{});
    return RationalFunction(Polynomial(1), Polynomial::monomial(1, -k), Canonical{});
}

void RationalFunction::fix_content_and_sign()
{
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    mpz_class g = den_.content();
    if (g != 1) {
        mpz_class cn = num_.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cn.get_mpz_t());
        if (g != 1) {
            num_ = num_.divided_exactly(g);
            den_ = den_.divided_exactly(g);
        }
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

void RationalFunction::canonicalize()
{
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = primitive_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exactly(num_, g);
            den_ = divide_exactly(den_, g);
        }
    }
    fix_content_and_sign();
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    // Henrici: with g = gcd(b, d), a/b + c/d = (a d' + c b') / (b' d' g) where
    // b = b' g, d = d' g, and only g can share factors with the new numerator.
    Polynomial g = primitive_gcd(den_, o.den_);
    Polynomial b1 = divide_exactly(den_, g);
    Polynomial d1 = divide_exactly(o.den_, g);
    Polynomial num = num_ * d1 + o.num_ * b1;
    Polynomial den = den_ * d1;
    if (!num.is_zero() && !g.is_constant()) {
        Polynomial h = primitive_gcd(num, g);
        if (!h.is_one()) {
            num = divide_exactly(num, h);
            den = divide_exactly(den, h);
        }
    }
    num_ = std::move(num);
    den_ = std::move(den);
    fix_content_and_sign();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o)
{
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    if (is_zero() || o.is_zero()) {
        *this = RationalFunction();
        return *this;
    }
    // Cross-cancel; both factors are already reduced.
    Polynomial g1 = primitive_gcd(num_, o.den_);
    Polynomial g2 = primitive_gcd(o.num_, den_);
    Polynomial num = divide_exactly(num_, g1) * divide_exactly(o.num_, g2);
    Polynomial den = divide_exactly(den_, g2) * divide_exactly(o.den_, g1);
    num_ = std::move(num);
    den_ = std::move(den);
    fix_content_and_sign();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o)
{
    if (o.is_zero())
        throw DomainError("rational function division by zero");
    RationalFunction inverse(o.den_, o.num_, Canonical{});
    inverse.fix_content_and_sign();
    return *this *= inverse;
}

RationalFunction RationalFunction::operator-() const
{
    return RationalFunction(-num_, den_, Canonical{});
}

RationalFunction RationalFunction::adams(int n) const
{
    if (n < 1)
        throw DomainError("Adams operation index must be positive");
    if (n == 1)
        return *this;
    // Substitution preserves coprimality over Q, so only content/sign can change.
    RationalFunction r(num_.substitute_power(n), den_.substitute_power(n), Canonical{});
    r.fix_content_and_sign();
    return r;
}

mpq_class RationalFunction::eval_at(const mpq_class& x) const
{
    mpq_class d = den_.eval(x);
    if (d == 0)
        throw DomainError("rational function " + to_string() + " has a pole at " + x.get_str());
    mpq_class r = num_.eval(x) / d;
    r.canonicalize();
    return r;
}

std::string RationalFunction::to_string() const
{
    if (den_.is_one())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction ratfunc_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw DomainError("unknown arithmetic operation");
}

} // namespace kacpoly
