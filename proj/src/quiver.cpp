#include "kacpoly/quiver.hpp"

#include "kacpoly/errors.hpp"

#include <algorithm>
#include <set>

namespace kacpoly {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    std::set<std::string> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second)
            throw DomainError("duplicate vertex identifier '" + v + "'");

    const std::size_t n = vertices_.size();
    mult_.assign(n * n, 0);
    for (const Arrow& a : arrows_) {
        if (a.source >= n || a.target >= n)
            throw DomainError("arrow endpoint is not a declared vertex");
        if (a.source == a.target)
            throw DomainError("quiver has a loop at vertex '" + vertices_[a.source] + "'");
        ++mult_[a.source * n + a.target];
    }
}

namespace {
std::vector<Arrow> resolve(const std::vector<std::string>& vertices,
                           const std::vector<std::pair<std::string, std::string>>& named)
{
    auto index_of = [&](const std::string& name) {
        auto it = std::find(vertices.begin(), vertices.end(), name);
        if (it == vertices.end())
            throw DomainError("arrow endpoint '" + name + "' is not a declared vertex");
        return static_cast<std::size_t>(it - vertices.begin());
    };
    std::vector<Arrow> arrows;
    arrows.reserve(named.size());
    for (const auto& [from, to] : named)
        arrows.push_back({index_of(from), index_of(to)});
    return arrows;
}
} // namespace

Quiver::Quiver(std::vector<std::string> vertices,
               const std::vector<std::pair<std::string, std::string>>& named_arrows)
    : Quiver(vertices, resolve(vertices, named_arrows))
{
}

Quiver Quiver::opposite() const
{
    std::vector<Arrow> reversed;
    reversed.reserve(arrows_.size());
    for (const Arrow& a : arrows_)
        reversed.push_back({a.target, a.source});
    return Quiver(vertices_, std::move(reversed));
}

void require_matches(const Quiver& q, const DimVector& v, const char* what)
{
    if (v.size() != q.vertex_count())
        throw DomainError(std::string(what) + " " + v.to_string() + " has " +
                          std::to_string(v.size()) + " entries, quiver has " +
                          std::to_string(q.vertex_count()) + " vertices");
}

CartanData cartan_matrix(const Quiver& q)
{
    const std::size_t n = q.vertex_count();
    CartanData c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c(i, j) = (i == j) ? 2 : -q.edge_count(i, j);
    return c;
}

long tits_form(const Quiver& q, const DimVector& alpha)
{
    require_matches(q, alpha, "dimension vector");
    long t = 0;
    for (int a : alpha)
        t += static_cast<long>(a) * a;
    for (const Arrow& h : q.arrows())
        t -= static_cast<long>(alpha[h.source]) * alpha[h.target];
    return t;
}

long bilinear_form(const Quiver& q, const DimVector& alpha, const DimVector& beta)
{
    require_matches(q, alpha, "dimension vector");
    require_matches(q, beta, "dimension vector");
    long s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        s += 2L * alpha[i] * beta[i];
    for (const Arrow& h : q.arrows())
        s -= static_cast<long>(alpha[h.source]) * beta[h.target] +
             static_cast<long>(alpha[h.target]) * beta[h.source];
    return s;
}

Quiver frame(const Quiver& q, const DimVector& lambda)
{
    require_matches(q, lambda, "highest weight");
    if (!lambda.is_nonnegative())
        throw DomainError("framing vector must be non-negative: " + lambda.to_string());
    auto vertices = q.vertices();
    std::string star = "*";
    while (std::find(vertices.begin(), vertices.end(), star) != vertices.end())
        star += "'";
    vertices.push_back(star);
    const std::size_t star_index = vertices.size() - 1;

    auto arrows = q.arrows();
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int k = 0; k < lambda[i]; ++k)
            arrows.push_back({star_index, i});
    return Quiver(std::move(vertices), std::move(arrows));
}

DimVector framed_vector(const DimVector& alpha, int k)
{
    if (k < 0)
        throw DomainError("framing coordinate must be non-negative");
    return alpha.appended(k);
}

long dim_function(const Quiver& q, const DimVector& alpha, const DimVector& lambda)
{
    require_matches(q, alpha, "dimension vector");
    require_matches(q, lambda, "highest weight");
    const long direct = dot(alpha, lambda) - tits_form(q, alpha);
    const long framed = 1 - tits_form(frame(q, lambda), framed_vector(alpha, 1));
    if (direct != framed)
        throw ConsistencyError("d(alpha,lambda) mismatch: " + std::to_string(direct) + " vs " +
                               std::to_string(framed));
    return direct;
}

} // namespace kacpoly
