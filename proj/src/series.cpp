#include "kacpoly/series.hpp"

#include "kacpoly/errors.hpp"

namespace kacpoly {

Box::Box(DimVector bound) : bound_(std::move(bound))
{
    if (!bound_.is_nonnegative())
        throw DomainError("box bound must be non-negative: " + bound_.to_string());
    stride_.assign(bound_.size(), 1);
    size_ = 1;
    for (std::size_t i = bound_.size(); i-- > 0;) {
        stride_[i] = size_;
        size_ *= static_cast<std::size_t>(bound_[i]) + 1;
    }
}

bool Box::contains(const DimVector& e) const
{
    if (e.size() != bound_.size())
        return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > bound_[i])
            return false;
    return true;
}

std::size_t Box::index(const DimVector& e) const
{
    if (!contains(e))
        throw DomainError("exponent " + e.to_string() + " outside box " + bound_.to_string());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        idx += static_cast<std::size_t>(e[i]) * stride_[i];
    return idx;
}

DimVector Box::exponent(std::size_t index) const
{
    DimVector e(bound_.size(), 0);
    for (std::size_t i = 0; i < bound_.size(); ++i) {
        e[i] = static_cast<int>(index / stride_[i]);
        index %= stride_[i];
    }
    return e;
}

TruncatedSeries::TruncatedSeries(Box box) : box_(std::move(box)), coeffs_(box_.size()) {}

TruncatedSeries TruncatedSeries::one(const Box& box)
{
    TruncatedSeries s(box);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Box& box, const DimVector& e, RationalFunction c)
{
    TruncatedSeries s(box);
    if (box.contains(e))
        s.coeffs_[box.index(e)] = std::move(c);
    return s;
}

const RationalFunction& TruncatedSeries::coeff(const DimVector& e) const
{
    static const RationalFunction zero;
    if (!box_.contains(e))
        return zero;
    return coeffs_[box_.index(e)];
}

void TruncatedSeries::set(const DimVector& e, RationalFunction c)
{
    coeffs_[box_.index(e)] = std::move(c);
}

bool TruncatedSeries::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

std::vector<std::pair<DimVector, RationalFunction>> TruncatedSeries::terms() const
{
    std::vector<std::pair<DimVector, RationalFunction>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            out.emplace_back(box_.exponent(i), coeffs_[i]);
    return out;
}

void TruncatedSeries::require_same_box(const TruncatedSeries& o) const
{
    if (!(box_ == o.box_))
        throw DomainError("series over different boxes: " + box_.bound().to_string() + " vs " +
                          o.box_.bound().to_string());
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    require_same_box(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    require_same_box(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const RationalFunction& c)
{
    for (auto& x : coeffs_)
        if (!x.is_zero())
            x *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    a.require_same_box(b);
    const Box& box = a.box_;
    TruncatedSeries out(box);
    std::vector<std::size_t> nz_b;
    std::vector<DimVector> exp_b;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (!b.coeffs_[j].is_zero()) {
            nz_b.push_back(j);
            exp_b.push_back(box.exponent(j));
        }
    const DimVector& bound = box.bound();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        const DimVector ei = box.exponent(i);
        for (std::size_t k = 0; k < nz_b.size(); ++k) {
            const DimVector& ej = exp_b[k];
            bool fits = true;
            for (std::size_t v = 0; v < bound.size() && fits; ++v)
                fits = ei[v] + ej[v] <= bound[v];
            if (!fits)
                continue;
            // Mixed-radix indices add when no coordinate overflows.
            out.coeffs_[i + nz_b[k]] += a.coeffs_[i] * b.coeffs_[nz_b[k]];
        }
    }
    return out;
}

TruncatedSeries adams_series(const TruncatedSeries& s, int n)
{
    if (n < 1)
        throw DomainError("Adams operation index must be positive");
    const Box& box = s.box();
    TruncatedSeries out(box);
    for (std::size_t i = 0; i < box.size(); ++i) {
        const RationalFunction& c = s.coeff_at(i);
        if (c.is_zero())
            continue;
        DimVector e = n * box.exponent(i);
        if (box.contains(e))
            out.set(e, c.adams(n));
    }
    return out;
}

TruncatedSeries series_exp(const TruncatedSeries& s)
{
    if (!s.constant_term().is_zero())
        throw DomainError("exp requires a series with zero constant term");
    TruncatedSeries result = TruncatedSeries::one(s.box());
    TruncatedSeries power = TruncatedSeries::one(s.box());
    for (long k = 1;; ++k) {
        power = power * s;
        if (power.is_zero())
            break;
        // power holds s^k / k!
        power *= RationalFunction(mpq_class(1, k));
        result += power;
    }
    return result;
}

TruncatedSeries series_log(const TruncatedSeries& s)
{
    if (!s.constant_term().is_one())
        throw DomainError("log requires a series with constant term 1");
    TruncatedSeries u = s - TruncatedSeries::one(s.box());
    TruncatedSeries result(s.box());
    TruncatedSeries power = TruncatedSeries::one(s.box());
    for (long k = 1;; ++k) {
        power = power * u;
        if (power.is_zero())
            break;
        TruncatedSeries term = power;
        term *= RationalFunction(mpq_class(k % 2 ? 1 : -1, k));
        result += term;
    }
    return result;
}

TruncatedSeries series_inverse(const TruncatedSeries& s)
{
    const RationalFunction& c0 = s.constant_term();
    if (c0.is_zero())
        throw DomainError("series with zero constant term is not invertible");
    // 1/s = c0^{-1} sum_k (-u)^k with u = s/c0 - 1 nilpotent.
    const RationalFunction inv0 = RationalFunction(1) / c0;
    TruncatedSeries u = s * inv0 - TruncatedSeries::one(s.box());
    TruncatedSeries result = TruncatedSeries::one(s.box());
    TruncatedSeries power = TruncatedSeries::one(s.box());
    for (;;) {
        power = power * u;
        if (power.is_zero())
            break;
        power *= RationalFunction(-1);
        result += power;
    }
    return result * inv0;
}

TruncatedSeries plethystic_exp(const TruncatedSeries& s)
{
    if (!s.constant_term().is_zero())
        throw DomainError("plethystic Exp requires a series with zero constant term");
    TruncatedSeries sum(s.box());
    // The cutoff is reached once psi_k pushes every term out of the box.
    for (int k = 1;; ++k) {
        TruncatedSeries term = adams_series(s, k);
        if (term.is_zero())
            break;
        term *= RationalFunction(mpq_class(1, k));
        sum += term;
    }
    return series_exp(sum);
}

TruncatedSeries plethystic_log(const TruncatedSeries& s)
{
    if (!s.constant_term().is_one())
        throw DomainError("plethystic Log requires a series with constant term 1");
    const TruncatedSeries l = series_log(s);
    TruncatedSeries sum(s.box());
    for (int k = 1;; ++k) {
        TruncatedSeries term = adams_series(l, k);
        if (term.is_zero())
            break;
        const int mu = moebius(k);
        if (mu == 0)
            continue;
        term *= RationalFunction(mpq_class(mu, k));
        sum += term;
    }
    return sum;
}

int moebius(int k)
{
    if (k < 1)
        throw DomainError("Moebius function is defined for k >= 1");
    int result = 1;
    for (int p = 2; static_cast<long>(p) * p <= k; ++p) {
        if (k % p)
            continue;
        k /= p;
        if (k % p == 0)
            return 0;
        result = -result;
    }
    if (k > 1)
        result = -result;
    return result;
}

} // namespace kacpoly
