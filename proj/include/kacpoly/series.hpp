#pragma once

#include "kacpoly/dimvector.hpp"
#include "kacpoly/ratfunc.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace kacpoly {

/// Componentwise truncation bound {e : 0 <= e <= bound}. Exponents are laid
/// out in mixed radix with the last coordinate varying fastest.
class Box {
public:
    Box() = default;
    explicit Box(DimVector bound);

    const DimVector& bound() const noexcept { return bound_; }
    std::size_t rank() const noexcept { return bound_.size(); }
    /// Number of exponents in the box.
    std::size_t size() const noexcept { return size_; }

    bool contains(const DimVector& e) const;
    std::size_t index(const DimVector& e) const;
    DimVector exponent(std::size_t index) const;

    friend bool operator==(const Box& a, const Box& b) { return a.bound_ == b.bound_; }

private:
    DimVector bound_;
    std::vector<std::size_t> stride_;
    std::size_t size_ = 1;
};

/// Multivariate power series in x^e with Q(q) coefficients, truncated to a box.
/// Products drop every exponent outside the box; since the box is closed
/// under taking smaller exponents, every coefficient that survives is exact.
class TruncatedSeries {
public:
    explicit TruncatedSeries(Box box);

    static TruncatedSeries one(const Box& box);
    static TruncatedSeries monomial(const Box& box, const DimVector& e, RationalFunction c = 1);

    const Box& box() const noexcept { return box_; }

    /// Coefficient of x^e; zero outside the box.
    const RationalFunction& coeff(const DimVector& e) const;
    const RationalFunction& coeff_at(std::size_t index) const { return coeffs_[index]; }
    /// Throws DomainError if e lies outside the box.
    void set(const DimVector& e, RationalFunction c);
    void set_at(std::size_t index, RationalFunction c) { coeffs_[index] = std::move(c); }

    const RationalFunction& constant_term() const { return coeffs_[0]; }
    bool is_zero() const;
    /// Nonzero terms in box order.
    std::vector<std::pair<DimVector, RationalFunction>> terms() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const RationalFunction& c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const RationalFunction& c) { return a *= c; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void require_same_box(const TruncatedSeries& o) const;

    Box box_;
    std::vector<RationalFunction> coeffs_;
};

/// psi_n: a x^e -> psi_n(a) x^{n e}; images outside the box are dropped.
TruncatedSeries adams_series(const TruncatedSeries& s, int n);

/// Formal exponential; requires zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& s);
/// Formal logarithm; requires constant term 1.
TruncatedSeries series_log(const TruncatedSeries& s);
/// Multiplicative inverse; requires an invertible (nonzero) constant term.
TruncatedSeries series_inverse(const TruncatedSeries& s);

/// Exp(f) = exp(sum_k psi_k(f)/k); requires zero constant term.
TruncatedSeries plethystic_exp(const TruncatedSeries& s);
/// Cadogan's inverse Log(f) = sum_k mu(k)/k psi_k(log f); requires constant term 1.
TruncatedSeries plethystic_log(const TruncatedSeries& s);

/// Classical Moebius function, k >= 1.
int moebius(int k);

} // namespace kacpoly
