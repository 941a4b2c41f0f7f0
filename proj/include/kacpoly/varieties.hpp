#pragma once

#include "kacpoly/dimvector.hpp"
#include "kacpoly/polynomial.hpp"
#include "kacpoly/quiver.hpp"
#include "kacpoly/series.hpp"

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace kacpoly {

/// Compactly supported Betti data of the Nakajima quiver variety M(alpha, lambda),
/// packaged as p(M, q) = sum_i h_c^{2i}(M) q^i. Odd Betti numbers vanish.
/// The variety is the GIT quotient at stability (-1, ..., -1, sum alpha_i);
/// only its Poincare polynomial is modelled here.
struct BettiProfile {
    DimVector alpha;
    DimVector lambda;
    long d = 0;      ///< half the dimension, alpha . lambda - T(alpha)
    Polynomial p;    ///< zero for an empty variety
    bool empty = true;

    /// (2i, h_c^{2i}) for every nonzero coefficient.
    std::vector<std::pair<int, mpz_class>> betti() const;
};

/// p = q^d a_{(alpha,1)}(frame(q, lambda), q).
BettiProfile poincare_via_kac(const Quiver& q, const DimVector& alpha, const DimVector& lambda,
                              const Box& box, int jobs = 1);

/// alpha -> p(M(alpha, lambda), q) for every alpha in the box, from the ratio
/// (q-1) r_1 / r_0 of framed r-series slices, each coefficient scaled by q^d.
std::map<DimVector, Polynomial> poincare_via_hausel(const Quiver& q, const DimVector& lambda,
                                                    const Box& box, int jobs = 1);

/// Wraps one Hausel-ratio polynomial in a checked profile.
BettiProfile profile_from_polynomial(const Quiver& q, const DimVector& alpha,
                                     const DimVector& lambda, Polynomial p);

/// h_c^{2d}: the coefficient of q^d.
mpz_class weight_mult_via_betti(const BettiProfile& profile);

/// p(M, 1).
mpz_class euler_characteristic(const BettiProfile& profile);

} // namespace kacpoly
