#include "kacpoly/polynomial.hpp"

#include "kacpoly/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace kacpoly {

Polynomial::Polynomial(long c) : coeffs_{mpz_class(c)}
{
    trim();
}

Polynomial::Polynomial(const mpz_class& c) : coeffs_{c}
{
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> ascending)
{
    coeffs_.reserve(ascending.size());
    for (long c : ascending)
        coeffs_.emplace_back(c);
    trim();
}

Polynomial::Polynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending))
{
    trim();
}

Polynomial Polynomial::monomial(const mpz_class& c, int k)
{
    std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::geometric(int n)
{
    return Polynomial(std::vector<mpz_class>(static_cast<std::size_t>(std::max(n, 0)), 1));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

int Polynomial::valuation() const noexcept
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            return static_cast<int>(k);
    return -1;
}

mpz_class Polynomial::operator[](int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[k];
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& x : r.coeffs_)
        x = -x;
    return r;
}

Polynomial Polynomial::shifted(int k) const
{
    if (is_zero() || k == 0)
        return *this;
    std::vector<mpz_class> v(static_cast<std::size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::substitute_power(int n) const
{
    if (n == 1 || is_constant())
        return *this;
    std::vector<mpz_class> v(static_cast<std::size_t>(degree()) * n + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        v[k * n] = coeffs_[k];
    return Polynomial(std::move(v));
}

mpz_class Polynomial::content() const
{
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Polynomial Polynomial::primitive_part() const
{
    if (is_zero())
        return *this;
    mpz_class c = content();
    if (c == 1)
        return *this;
    Polynomial r = *this;
    for (auto& x : r.coeffs_)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

Polynomial Polynomial::divided_exactly(const mpz_class& c) const
{
    if (c == 1)
        return *this;
    Polynomial r = *this;
    for (auto& x : r.coeffs_) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
            throw ConsistencyError("inexact integer division of polynomial " + to_string());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

mpq_class Polynomial::eval(const mpq_class& x) const
{
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + mpq_class(*it);
    return acc;
}

std::string Polynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1)
            os << mag.get_str();
        if (k > 0) {
            os << (mag != 1 ? "*q" : "q");
            if (k > 1)
                os << '^' << k;
        }
    }
    return os.str();
}

Polynomial divide_exactly(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (b.is_one())
        return a;
    if (a.is_zero())
        return {};
    if (a.degree() < b.degree())
        throw ConsistencyError("inexact polynomial division: " + a.to_string() + " / " +
                               b.to_string());
    std::vector<mpz_class> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.degree();
    std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    mpz_class t;
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0)
            continue;
        if (!mpz_divisible_p(rem[k].get_mpz_t(), b.leading().get_mpz_t()))
            throw ConsistencyError("inexact polynomial division: " + a.to_string() + " / " +
                                   b.to_string());
        mpz_divexact(t.get_mpz_t(), rem[k].get_mpz_t(), b.leading().get_mpz_t());
        quot[k - db] = t;
        for (int j = 0; j <= db; ++j)
            mpz_submul(rem[k - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
    for (const auto& r : rem)
        if (r != 0)
            throw ConsistencyError("inexact polynomial division: " + a.to_string() + " / " +
                                   b.to_string());
    return Polynomial(std::move(quot));
}

namespace {

Polynomial normalized_sign(Polynomial p)
{
    if (!p.is_zero() && p.leading() < 0)
        p = -p;
    return p;
}

// Pseudo-remainder of a by b, reduced to its primitive part.
Polynomial primitive_prem(const Polynomial& a, const Polynomial& b)
{
    std::vector<mpz_class> r = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    int dr = a.degree();
    mpz_class lr;
    while (dr >= db) {
        lr = r[dr];
        for (auto& x : r)
            x *= lb;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[dr - db + j].get_mpz_t(), lr.get_mpz_t(), bc[j].get_mpz_t());
        while (dr >= 0 && r[dr] == 0)
            --dr;
        r.resize(static_cast<std::size_t>(dr + 1));
    }
    return Polynomial(std::move(r)).primitive_part();
}

} // namespace

Polynomial primitive_gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero())
        return normalized_sign(b.primitive_part());
    if (b.is_zero())
        return normalized_sign(a.primitive_part());
    if (a.is_constant() || b.is_constant())
        return Polynomial(1);

    // Factor out the common power of q first; this is the dominant common
    // factor in Hua-type sums and keeps the remainder sequence short.
    const int shift = std::min(a.valuation(), b.valuation());
    auto strip = [](const Polynomial& p) {
        const int v = p.valuation();
        if (v == 0)
            return p.primitive_part();
        std::vector<mpz_class> c(p.coefficients().begin() + v, p.coefficients().end());
        return Polynomial(std::move(c)).primitive_part();
    };
    Polynomial x = strip(a);
    Polynomial y = strip(b);
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero() && !y.is_constant()) {
        Polynomial r = primitive_prem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    Polynomial g = y.is_zero() ? normalized_sign(x) : Polynomial(1);
    return g.shifted(shift);
}

} // namespace kacpoly
