#pragma once

#include "kacpoly/dimvector.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace kacpoly {

struct Arrow {
    std::size_t source;
    std::size_t target;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Symmetric generalized Cartan matrix of a loop-free quiver.
class CartanData {
public:
    explicit CartanData(std::size_t n) : n_(n), entries_(n * n, 0) {}

    std::size_t rank() const noexcept { return n_; }
    int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    int& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    friend bool operator==(const CartanData&, const CartanData&) = default;

private:
    std::size_t n_;
    std::vector<int> entries_;
};

/// A finite quiver without loops. Vertex order is declaration order; parallel
/// arrows are kept as separate list entries.
class Quiver {
public:
    /// Throws DomainError on loops, unknown endpoints or duplicate vertex names.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);
    Quiver(std::vector<std::string> vertices,
           const std::vector<std::pair<std::string, std::string>>& named_arrows);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    /// Number of arrows i -> j (row i, column j).
    int arrow_count(std::size_t i, std::size_t j) const { return mult_[i * vertex_count() + j]; }
    /// Number of edges between i and j in the underlying graph.
    int edge_count(std::size_t i, std::size_t j) const
    {
        return arrow_count(i, j) + arrow_count(j, i);
    }

    /// Same vertices, every arrow reversed.
    Quiver opposite() const;

    friend bool operator==(const Quiver& a, const Quiver& b)
    {
        return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<int> mult_;
};

/// Throws DomainError if v has the wrong length for q.
void require_matches(const Quiver& q, const DimVector& v, const char* what);

CartanData cartan_matrix(const Quiver& q);

/// T(alpha) = sum alpha_i^2 - sum over arrows alpha_source * alpha_target.
long tits_form(const Quiver& q, const DimVector& alpha);

/// (alpha, beta) = alpha^T C beta.
long bilinear_form(const Quiver& q, const DimVector& alpha, const DimVector& beta);

/// Adjoins a vertex "*" (last in vertex order) with lambda_i arrows * -> i.
Quiver frame(const Quiver& q, const DimVector& lambda);

/// (alpha, k) as a vector on the framed quiver.
DimVector framed_vector(const DimVector& alpha, int k);

/// d(alpha, lambda) = alpha . lambda - T(alpha). Also evaluates
/// 1 - T_*(alpha, 1) on the framed quiver and throws ConsistencyError if the
/// two disagree.
long dim_function(const Quiver& q, const DimVector& alpha, const DimVector& lambda);

} // namespace kacpoly
