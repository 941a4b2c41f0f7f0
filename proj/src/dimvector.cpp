#include "kacpoly/dimvector.hpp"

#include "kacpoly/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kacpoly {

namespace {
void require_same_size(const DimVector& a, const DimVector& b)
{
    if (a.size() != b.size())
        throw DomainError("dimension vector length mismatch: " + a.to_string() + " vs " +
                          b.to_string());
}
} // namespace

bool DimVector::is_zero() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

bool DimVector::is_nonnegative() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x >= 0; });
}

int DimVector::height() const noexcept
{
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool DimVector::le(const DimVector& other) const
{
    require_same_size(*this, other);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > other.entries_[i])
            return false;
    return true;
}

int DimVector::content() const noexcept
{
    int g = 0;
    for (int x : entries_)
        g = std::gcd(g, x);
    return g;
}

DimVector& DimVector::operator+=(const DimVector& o)
{
    require_same_size(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += o.entries_[i];
    return *this;
}

DimVector& DimVector::operator-=(const DimVector& o)
{
    require_same_size(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= o.entries_[i];
    return *this;
}

DimVector& DimVector::operator*=(int k)
{
    for (int& x : entries_)
        x *= k;
    return *this;
}

DimVector DimVector::divided_by(int k) const
{
    DimVector r = *this;
    for (int& x : r.entries_)
        x /= k;
    return r;
}

DimVector DimVector::appended(int value) const
{
    DimVector r = *this;
    r.entries_.push_back(value);
    return r;
}

DimVector DimVector::without_last() const
{
    DimVector r = *this;
    if (!r.entries_.empty())
        r.entries_.pop_back();
    return r;
}

std::string DimVector::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

long dot(const DimVector& a, const DimVector& b)
{
    require_same_size(a, b);
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long>(a[i]) * b[i];
    return s;
}

std::ostream& operator<<(std::ostream& os, const DimVector& v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os << ')';
}

std::vector<DimVector> vectors_in_box(const DimVector& bound)
{
    if (!bound.is_nonnegative())
        throw DomainError("box bound must be non-negative: " + bound.to_string());
    std::vector<DimVector> out;
    DimVector e(bound.size(), 0);
    for (;;) {
        out.push_back(e);
        std::size_t i = bound.size();
        while (i > 0) {
            --i;
            if (e[i] < bound[i]) {
                ++e[i];
                break;
            }
            e[i] = 0;
            if (i == 0)
                return out;
        }
        if (bound.size() == 0)
            return out;
    }
}

std::vector<DimVector> vectors_by_height(const DimVector& bound)
{
    auto out = vectors_in_box(bound);
    std::stable_sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        return a.height() < b.height();
    });
    return out;
}

std::size_t DimVectorHash::operator()(const DimVector& v) const noexcept
{
    std::size_t h = v.size();
    for (int x : v)
        h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace kacpoly
