#pragma once

#include "kacpoly/dimvector.hpp"
#include "kacpoly/polynomial.hpp"
#include "kacpoly/quiver.hpp"
#include "kacpoly/ratfunc.hpp"
#include "kacpoly/series.hpp"

#include <map>
#include <mutex>

namespace kacpoly {

/// a_alpha(Gamma, q): the number of absolutely indecomposable representations
/// of dimension alpha over F_q, as an integer polynomial.
struct KacPolynomial {
    DimVector alpha;
    Polynomial poly;
};

/// Hua's r-series and the Kac polynomials a = (q-1) Log r for one quiver.
/// r_alpha values are memoized; the object may be shared across threads.
class KacCalculator {
public:
    explicit KacCalculator(Quiver q, int jobs = 1);

    const Quiver& quiver() const noexcept { return quiver_; }

    /// r_alpha = sum over multipartitions |lambda| = alpha of
    /// q^{-T(lambda)} / prod_i phi_{lambda^i}(q^{-1}).
    RationalFunction r_alpha(const DimVector& alpha) const;
    /// sum_{alpha in box} r_alpha x^alpha.
    TruncatedSeries r_series(const Box& box) const;
    /// (q-1) Log(r_series); every coefficient is checked to lie in Z[q].
    TruncatedSeries a_series(const Box& box) const;
    /// The alpha-coefficient of a_series(box); alpha must lie in the box.
    KacPolynomial kac_polynomial(const DimVector& alpha, const Box& box) const;

private:
    Quiver quiver_;
    int jobs_;
    mutable std::mutex mutex_;
    mutable std::map<DimVector, RationalFunction> cache_;
};

/// Uncached single evaluation of Hua's formula.
RationalFunction r_alpha(const Quiver& q, const DimVector& alpha);
TruncatedSeries r_series(const Quiver& q, const Box& box);
TruncatedSeries a_series(const Quiver& q, const Box& box);
KacPolynomial kac_polynomial(const Quiver& q, const DimVector& alpha, const Box& box);

enum class SliceKind { r, a };

/// The *-degree n part of the r- or a-series of frame(q, lambda), as a series
/// in the original variables over `box`. Computed on the framed box (box, n).
TruncatedSeries framed_slice(const Quiver& q, const DimVector& lambda, int n, const Box& box,
                             SliceKind which, int jobs = 1);

/// Converts a series coefficient known to lie in Z[q]; throws ConsistencyError otherwise.
Polynomial require_integer_polynomial(const RationalFunction& f, const DimVector& alpha);

} // namespace kacpoly
