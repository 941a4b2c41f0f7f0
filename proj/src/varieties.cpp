#include "kacpoly/varieties.hpp"

#include "kacpoly/errors.hpp"
#include "kacpoly/kac.hpp"

namespace kacpoly {

std::vector<std::pair<int, mpz_class>> BettiProfile::betti() const
{
    std::vector<std::pair<int, mpz_class>> out;
    for (int k = 0; k <= p.degree(); ++k)
        if (p[k] != 0)
            out.emplace_back(2 * k, p[k]);
    return out;
}

BettiProfile profile_from_polynomial(const Quiver& q, const DimVector& alpha,
                                     const DimVector& lambda, Polynomial p)
{
    BettiProfile prof;
    prof.alpha = alpha;
    prof.lambda = lambda;
    prof.d = dim_function(q, alpha, lambda);
    prof.empty = p.is_zero();
    prof.p = std::move(p);
    if (prof.empty)
        return prof;
    for (const auto& c : prof.p.coefficients())
        if (c < 0)
            throw ConsistencyError("negative Betti number for alpha " + alpha.to_string() + ": " +
                                   prof.p.to_string());
    if (prof.d < 0 || prof.p.valuation() < prof.d || prof.p.degree() > 2 * prof.d)
        throw ConsistencyError("Poincare polynomial " + prof.p.to_string() + " for alpha " +
                               alpha.to_string() + " leaves the degree window [d, 2d], d = " +
                               std::to_string(prof.d));
    return prof;
}

BettiProfile poincare_via_kac(const Quiver& q, const DimVector& alpha, const DimVector& lambda,
                              const Box& box, int jobs)
{
    require_matches(q, alpha, "dimension vector");
    require_matches(q, lambda, "framing vector");
    require_matches(q, box.bound(), "box bound");
    if (!box.contains(alpha))
        throw DomainError("dimension vector " + alpha.to_string() + " outside box " +
                          box.bound().to_string());
    const long d = dim_function(q, alpha, lambda);
    const KacCalculator framed(frame(q, lambda), jobs);
    const Box framed_box(framed_vector(box.bound(), 1));
    const Polynomial a = framed.kac_polynomial(framed_vector(alpha, 1), framed_box).poly;
    if (a.is_zero())
        return profile_from_polynomial(q, alpha, lambda, {});
    if (d < 0)
        throw ConsistencyError("nonzero Kac polynomial with negative d at " + alpha.to_string());
    return profile_from_polynomial(q, alpha, lambda, a.shifted(static_cast<int>(d)));
}

std::map<DimVector, Polynomial> poincare_via_hausel(const Quiver& q, const DimVector& lambda,
                                                    const Box& box, int jobs)
{
    require_matches(q, lambda, "framing vector");
    require_matches(q, box.bound(), "box bound");
    // The r-series of the framed quiver over (box, 1) holds both slices.
    const KacCalculator framed(frame(q, lambda), jobs);
    const TruncatedSeries full = framed.r_series(Box(framed_vector(box.bound(), 1)));
    TruncatedSeries r0(box), r1(box);
    for (std::size_t i = 0; i < box.size(); ++i) {
        const DimVector e = box.exponent(i);
        r0.set_at(i, full.coeff(framed_vector(e, 0)));
        r1.set_at(i, full.coeff(framed_vector(e, 1)));
    }
    TruncatedSeries ratio = r1 * series_inverse(r0);
    ratio *= RationalFunction(Polynomial{-1, 1});

    std::map<DimVector, Polynomial> out;
    for (std::size_t i = 0; i < box.size(); ++i) {
        const DimVector alpha = box.exponent(i);
        const Polynomial a = require_integer_polynomial(ratio.coeff_at(i), alpha);
        if (a.is_zero()) {
            out.emplace(alpha, Polynomial{});
            continue;
        }
        const long d = dim_function(q, alpha, lambda);
        if (d < 0)
            throw ConsistencyError("nonzero Hausel coefficient with negative d at " +
                                   alpha.to_string());
        Polynomial p = a.shifted(static_cast<int>(d));
        profile_from_polynomial(q, alpha, lambda, p);
        out.emplace(alpha, std::move(p));
    }
    return out;
}

mpz_class weight_mult_via_betti(const BettiProfile& profile)
{
    if (profile.empty)
        return 0;
    return profile.p[static_cast<int>(profile.d)];
}

mpz_class euler_characteristic(const BettiProfile& profile)
{
    return profile.p.eval(1).get_num();
}

} // namespace kacpoly
