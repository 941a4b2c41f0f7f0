#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace kacpoly {

/// A vector of integers indexed by the vertices of a quiver, in vertex order.
/// Used for dimension vectors, highest weights, root-lattice elements and
/// truncation bounds. Entries are usually non-negative; differences may not be.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::size_t n, int value = 0) : entries_(n, value) {}
    DimVector(std::initializer_list<int> values) : entries_(values) {}
    explicit DimVector(std::vector<int> values) : entries_(std::move(values)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }
    std::span<const int> entries() const noexcept { return entries_; }
    const std::vector<int>& vec() const noexcept { return entries_; }

    bool is_zero() const noexcept;
    bool is_nonnegative() const noexcept;
    /// Sum of entries.
    int height() const noexcept;
    /// Componentwise `*this <= other`.
    bool le(const DimVector& other) const;
    /// Largest k such that every entry is divisible by k (0 for the zero vector).
    int content() const noexcept;

    DimVector& operator+=(const DimVector& o);
    DimVector& operator-=(const DimVector& o);
    DimVector& operator*=(int k);
    friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
    friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
    friend DimVector operator*(int k, DimVector a) { return a *= k; }

    /// Exact division; caller guarantees divisibility.
    DimVector divided_by(int k) const;
    /// Appends one coordinate (used for framed vectors).
    DimVector appended(int value) const;
    /// Drops the last coordinate.
    DimVector without_last() const;

    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend auto operator<=>(const DimVector&, const DimVector&) = default;

    std::string to_string() const;

private:
    std::vector<int> entries_;
};

/// Sum of componentwise products, written alpha . lambda.
long dot(const DimVector& a, const DimVector& b);

std::ostream& operator<<(std::ostream& os, const DimVector& v);

/// All vectors e with 0 <= e <= bound, in mixed-radix order (first coordinate
/// varies slowest). Used for box sweeps.
std::vector<DimVector> vectors_in_box(const DimVector& bound);

/// Vectors 0 <= e <= bound sorted by height, ties broken lexicographically.
std::vector<DimVector> vectors_by_height(const DimVector& bound);

struct DimVectorHash {
    std::size_t operator()(const DimVector& v) const noexcept;
};

} // namespace kacpoly
