#include "kacpoly/partitions.hpp"

#include "kacpoly/errors.hpp"

#include <numeric>

namespace kacpoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] <= 0)
            throw DomainError("partition parts must be positive");
        if (j > 0 && parts_[j] > parts_[j - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}
} // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw DomainError("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    partitions_rec(n, n, current, out);
    return out;
}

std::vector<MultiPartition> enumerate_multipartitions(const DimVector& alpha)
{
    if (!alpha.is_nonnegative())
        throw DomainError("dimension vector must be non-negative: " + alpha.to_string());
    std::vector<MultiPartition> out{MultiPartition{}};
    for (int a : alpha) {
        const auto parts = enumerate_partitions(a);
        std::vector<MultiPartition> next;
        next.reserve(out.size() * parts.size());
        for (const auto& prefix : out)
            for (const auto& p : parts) {
                next.push_back(prefix);
                next.back().push_back(p);
            }
        out = std::move(next);
    }
    return out;
}

DimVector multipartition_size(const MultiPartition& lambda)
{
    DimVector v(lambda.size(), 0);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        v[i] = lambda[i].weight();
    return v;
}

std::vector<DimVector> multipartition_rows(const MultiPartition& lambda)
{
    std::size_t rows = 0;
    for (const auto& p : lambda)
        rows = std::max(rows, p.length());
    std::vector<DimVector> out;
    out.reserve(rows);
    for (std::size_t j = 1; j <= rows; ++j) {
        DimVector row(lambda.size(), 0);
        for (std::size_t i = 0; i < lambda.size(); ++i)
            row[i] = lambda[i].part(j);
        out.push_back(std::move(row));
    }
    return out;
}

Polynomial phi_n(int n)
{
    if (n < 0)
        throw DomainError("phi_n requires n >= 0");
    Polynomial r(1);
    for (int k = 1; k <= n; ++k)
        r = r * (Polynomial(1) - Polynomial::monomial(1, k));
    return r;
}

RationalFunction phi_partition(const Partition& mu, bool at_inverse)
{
    // 1 - q^{-m} = (q^m - 1)/q^m, so phi_n(q^{-1}) = prod (q^m - 1) / q^{n(n+1)/2}.
    Polynomial num(1);
    int qpow = 0;
    for (std::size_t j = 1; j <= mu.length(); ++j) {
        const int n = mu.part(j) - mu.part(j + 1);
        for (int m = 1; m <= n; ++m) {
            if (at_inverse) {
                num = num * (Polynomial::monomial(1, m) - Polynomial(1));
                qpow += m;
            } else {
                num = num * (Polynomial(1) - Polynomial::monomial(1, m));
            }
        }
    }
    if (!at_inverse)
        return RationalFunction(num);
    return RationalFunction(num, Polynomial::monomial(1, qpow));
}

long tits_statistic(const Quiver& q, const MultiPartition& lambda)
{
    if (lambda.size() != q.vertex_count())
        throw DomainError("multipartition has " + std::to_string(lambda.size()) +
                          " components, quiver has " + std::to_string(q.vertex_count()) +
                          " vertices");
    long t = 0;
    for (const auto& row : multipartition_rows(lambda))
        t += tits_form(q, row);
    return t;
}

} // namespace kacpoly
