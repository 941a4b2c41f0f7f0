#pragma once

#include "kacpoly/dimvector.hpp"
#include "kacpoly/quiver.hpp"
#include "kacpoly/ratfunc.hpp"

#include <vector>

namespace kacpoly {

/// Integer partition as a weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws DomainError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int weight() const noexcept;
    /// j-th part, 1-based; zero past the last part.
    int part(std::size_t j) const noexcept { return j >= 1 && j <= parts_.size() ? parts_[j - 1] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// One partition per vertex.
using MultiPartition = std::vector<Partition>;

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<Partition> enumerate_partitions(int n);

/// Cartesian product of enumerate_partitions(alpha_i), first vertex slowest.
std::vector<MultiPartition> enumerate_multipartitions(const DimVector& alpha);

/// Size vector |lambda| = (|lambda^i|)_i.
DimVector multipartition_size(const MultiPartition& lambda);

/// Row vectors lambda_j = (lambda^i_j)_i for j = 1 .. max length.
std::vector<DimVector> multipartition_rows(const MultiPartition& lambda);

/// phi_n(q) = (1-q)(1-q^2)...(1-q^n).
Polynomial phi_n(int n);

/// phi_mu = prod_j phi_{mu_j - mu_{j+1}}; with at_inverse the value at q^{-1}.
RationalFunction phi_partition(const Partition& mu, bool at_inverse);

/// T(lambda) = sum_j T(lambda_j).
long tits_statistic(const Quiver& q, const MultiPartition& lambda);

} // namespace kacpoly
