#include "kacpoly/kac.hpp"

#include "kacpoly/errors.hpp"
#include "kacpoly/parallel.hpp"
#include "kacpoly/partitions.hpp"

namespace kacpoly {

RationalFunction r_alpha(const Quiver& q, const DimVector& alpha)
{
    require_matches(q, alpha, "dimension vector");
    RationalFunction sum;
    for (const auto& lambda : enumerate_multipartitions(alpha)) {
        // prod_i phi_{lambda^i}(q^{-1}) = P(q) / q^s with P = prod (q^m - 1).
        Polynomial p(1);
        long s = 0;
        for (const auto& mu : lambda) {
            for (std::size_t j = 1; j <= mu.length(); ++j) {
                const int n = mu.part(j) - mu.part(j + 1);
                for (int m = 1; m <= n; ++m) {
                    p = p * (Polynomial::monomial(1, m) - Polynomial(1));
                    s += m;
                }
            }
        }
        const long shift = s - tits_statistic(q, lambda);
        RationalFunction term = shift >= 0
                                    ? RationalFunction(Polynomial::monomial(1, static_cast<int>(shift)), p)
                                    : RationalFunction(Polynomial(1), p.shifted(static_cast<int>(-shift)));
        sum += term;
    }
    return sum;
}

KacCalculator::KacCalculator(Quiver q, int jobs) : quiver_(std::move(q)), jobs_(jobs) {}

RationalFunction KacCalculator::r_alpha(const DimVector& alpha) const
{
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(alpha);
        if (it != cache_.end())
            return it->second;
    }
    RationalFunction value = kacpoly::r_alpha(quiver_, alpha);
    std::lock_guard lock(mutex_);
    return cache_.emplace(alpha, std::move(value)).first->second;
}

TruncatedSeries KacCalculator::r_series(const Box& box) const
{
    if (box.rank() != quiver_.vertex_count())
        throw DomainError("box " + box.bound().to_string() + " does not match the quiver");
    std::vector<RationalFunction> values(box.size());
    parallel_for(box.size(), jobs_, [&](std::size_t i) { values[i] = r_alpha(box.exponent(i)); });
    TruncatedSeries s(box);
    for (std::size_t i = 0; i < box.size(); ++i)
        s.set_at(i, std::move(values[i]));
    return s;
}

Polynomial require_integer_polynomial(const RationalFunction& f, const DimVector& alpha)
{
    if (!f.is_integer_polynomial())
        throw ConsistencyError("coefficient at " + alpha.to_string() +
                               " is not an integer polynomial: " + f.to_string());
    return f.numerator();
}

TruncatedSeries KacCalculator::a_series(const Box& box) const
{
    TruncatedSeries a = plethystic_log(r_series(box));
    a *= RationalFunction(Polynomial{-1, 1});
    for (std::size_t i = 0; i < box.size(); ++i)
        require_integer_polynomial(a.coeff_at(i), box.exponent(i));
    return a;
}

KacPolynomial KacCalculator::kac_polynomial(const DimVector& alpha, const Box& box) const
{
    require_matches(quiver_, alpha, "dimension vector");
    if (!box.contains(alpha))
        throw DomainError("dimension vector " + alpha.to_string() + " outside box " +
                          box.bound().to_string());
    const TruncatedSeries a = a_series(box);
    return {alpha, require_integer_polynomial(a.coeff(alpha), alpha)};
}

TruncatedSeries r_series(const Quiver& q, const Box& box)
{
    return KacCalculator(q).r_series(box);
}

TruncatedSeries a_series(const Quiver& q, const Box& box)
{
    return KacCalculator(q).a_series(box);
}

KacPolynomial kac_polynomial(const Quiver& q, const DimVector& alpha, const Box& box)
{
    return KacCalculator(q).kac_polynomial(alpha, box);
}

TruncatedSeries framed_slice(const Quiver& q, const DimVector& lambda, int n, const Box& box,
                             SliceKind which, int jobs)
{
    if (n < 0)
        throw DomainError("framing degree must be non-negative");
    require_matches(q, box.bound(), "box bound");
    const KacCalculator framed(frame(q, lambda), jobs);
    const Box framed_box(box.bound().appended(n));
    const TruncatedSeries full =
        which == SliceKind::r ? framed.r_series(framed_box) : framed.a_series(framed_box);
    TruncatedSeries slice(box);
    for (std::size_t i = 0; i < box.size(); ++i)
        slice.set_at(i, full.coeff(box.exponent(i).appended(n)));
    return slice;
}

} // namespace kacpoly
