#include "kacpoly/fforacle.hpp"

#include "kacpoly/errors.hpp"

#include <numeric>
#include <string>

namespace kacpoly {

namespace {

int mul_mod(int a, int b, int p)
{
    return static_cast<int>(static_cast<long long>(a) * b % p);
}

int inv_mod(int a, int p)
{
    // Fermat: a^(p-2).
    int result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1)
            result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return result;
}

int primitive_root(int p)
{
    if (p == 2)
        return 1;
    for (int g = 2; g < p; ++g) {
        int x = 1;
        int order = 0;
        do {
            x = mul_mod(x, g, p);
            ++order;
        } while (x != 1);
        if (order == p - 1)
            return g;
    }
    throw ConsistencyError("no primitive root mod " + std::to_string(p));
}

// p^e, or cap + 1 if that exceeds the cap.
std::uint64_t capped_power(int p, std::uint64_t e, std::uint64_t cap)
{
    std::uint64_t r = 1;
    for (std::uint64_t k = 0; k < e; ++k) {
        if (r > cap / static_cast<std::uint64_t>(p))
            return cap + 1;
        r *= static_cast<std::uint64_t>(p);
    }
    return r;
}

void validate(const Quiver& q, const DimVector& alpha, int p)
{
    require_matches(q, alpha, "dimension vector");
    if (!alpha.is_nonnegative())
        throw DomainError("dimension vector must be non-negative: " + alpha.to_string());
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime; only prime fields are supported");
}

// The affine space R(Gamma, alpha) over F_p with points numbered in base p:
// entry k of the concatenated arrow matrices is digit k.
class RepSpace {
public:
    RepSpace(const Quiver& q, const DimVector& alpha, int p, std::uint64_t cap)
        : quiver_(q), alpha_(alpha), p_(p)
    {
        for (const Arrow& h : q.arrows()) {
            offsets_.push_back(entries_);
            entries_ += static_cast<std::size_t>(alpha[h.target]) * alpha[h.source];
        }
        count_ = capped_power(p, entries_, cap);
        if (count_ > cap)
            throw DomainError("oracle search space " + std::to_string(p) + "^" +
                              std::to_string(entries_) + " exceeds the cap of " +
                              std::to_string(cap) + " representations");
    }

    std::uint64_t count() const noexcept { return count_; }
    std::size_t entries() const noexcept { return entries_; }

    void decode(std::uint64_t x, std::vector<int>& e) const
    {
        e.resize(entries_);
        for (std::size_t k = 0; k < entries_; ++k) {
            e[k] = static_cast<int>(x % p_);
            x /= p_;
        }
    }

    std::uint64_t encode(const std::vector<int>& e) const
    {
        std::uint64_t x = 0;
        for (std::size_t k = entries_; k-- > 0;)
            x = x * p_ + e[k];
        return x;
    }

    FiniteFieldRep rep(std::uint64_t x) const
    {
        std::vector<int> e;
        decode(x, e);
        FiniteFieldRep r{p_, alpha_, {}};
        for (std::size_t h = 0; h < quiver_.arrows().size(); ++h) {
            const Arrow& a = quiver_.arrows()[h];
            FpMatrix m(alpha_[a.target], alpha_[a.source]);
            std::copy(e.begin() + offsets_[h], e.begin() + offsets_[h] + m.a.size(), m.a.begin());
            r.maps.push_back(std::move(m));
        }
        return r;
    }

    // x_h <- g x_h for arrows into v, x_h <- x_h g^{-1} for arrows out of v.
    void act(std::size_t v, const FpMatrix& g, const FpMatrix& ginv, std::vector<int>& e,
             std::vector<int>& scratch) const
    {
        for (std::size_t h = 0; h < quiver_.arrows().size(); ++h) {
            const Arrow& a = quiver_.arrows()[h];
            const int rows = alpha_[a.target], cols = alpha_[a.source];
            int* x = e.data() + offsets_[h];
            if (a.target == v) {
                scratch.assign(static_cast<std::size_t>(rows) * cols, 0);
                for (int i = 0; i < rows; ++i)
                    for (int k = 0; k < rows; ++k) {
                        const int gik = g(i, k);
                        if (!gik)
                            continue;
                        for (int j = 0; j < cols; ++j)
                            scratch[i * cols + j] = (scratch[i * cols + j] + gik * x[k * cols + j]) % p_;
                    }
                std::copy(scratch.begin(), scratch.end(), x);
            } else if (a.source == v) {
                scratch.assign(static_cast<std::size_t>(rows) * cols, 0);
                for (int i = 0; i < rows; ++i)
                    for (int k = 0; k < cols; ++k) {
                        const int xik = x[i * cols + k];
                        if (!xik)
                            continue;
                        for (int j = 0; j < cols; ++j)
                            scratch[i * cols + j] = (scratch[i * cols + j] + xik * ginv(k, j)) % p_;
                    }
                std::copy(scratch.begin(), scratch.end(), x);
            }
        }
    }

private:
    const Quiver& quiver_;
    DimVector alpha_;
    int p_;
    std::vector<std::size_t> offsets_;
    std::size_t entries_ = 0;
    std::uint64_t count_ = 1;
};

struct Generator {
    std::size_t vertex;
    FpMatrix g;
    FpMatrix ginv;
};

// Transvections I + E_ij generate SL_n(F_p); one diagonal scaling by a
// primitive root extends them to GL_n(F_p).
std::vector<Generator> gl_generators(const DimVector& alpha, int p)
{
    std::vector<Generator> gens;
    const int w = primitive_root(p);
    for (std::size_t v = 0; v < alpha.size(); ++v) {
        const int n = alpha[v];
        if (n == 0)
            continue;
        if (w != 1) {
            Generator s{v, FpMatrix::identity(n), FpMatrix::identity(n)};
            s.g(0, 0) = w;
            s.ginv(0, 0) = inv_mod(w, p);
            gens.push_back(std::move(s));
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                Generator t{v, FpMatrix::identity(n), FpMatrix::identity(n)};
                t.g(i, j) = 1;
                t.ginv(i, j) = p - 1;
                gens.push_back(std::move(t));
            }
    }
    return gens;
}

struct OrbitPartition {
    std::vector<std::uint64_t> representatives;
};

OrbitPartition orbit_partition(const Quiver& q, const DimVector& alpha, int p,
                               const OracleOptions& options)
{
    const RepSpace space(q, alpha, p, options.cap);
    const auto gens = gl_generators(alpha, p);
    const std::uint64_t n = space.count();
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::vector<int> e, moved, scratch;
    for (std::uint64_t x = 0; x < n; ++x) {
        space.decode(x, e);
        for (const Generator& gen : gens) {
            moved = e;
            space.act(gen.vertex, gen.g, gen.ginv, moved, scratch);
            const std::uint32_t a = find(static_cast<std::uint32_t>(x));
            const std::uint32_t b = find(static_cast<std::uint32_t>(space.encode(moved)));
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    }
    OrbitPartition out;
    for (std::uint64_t x = 0; x < n; ++x)
        if (find(static_cast<std::uint32_t>(x)) == x)
            out.representatives.push_back(x);
    return out;
}

std::vector<FpMatrix> general_linear_group(int n, int p, std::uint64_t cap)
{
    const std::uint64_t total = capped_power(p, static_cast<std::uint64_t>(n) * n, cap);
    if (total > cap)
        throw DomainError("GL(" + std::to_string(n) + ", F_" + std::to_string(p) +
                          ") enumeration exceeds the cap");
    std::vector<FpMatrix> out;
    FpMatrix m(n, n);
    for (std::uint64_t x = 0; x < total; ++x) {
        std::uint64_t y = x;
        for (auto& entry : m.a) {
            entry = static_cast<int>(y % p);
            y /= p;
        }
        if (rank_mod_p(m, p) == n)
            out.push_back(m);
    }
    return out;
}

} // namespace

FpMatrix FpMatrix::identity(int n)
{
    FpMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool FpMatrix::is_zero() const
{
    for (int x : a)
        if (x)
            return false;
    return true;
}

FpMatrix multiply(const FpMatrix& x, const FpMatrix& y, int p)
{
    FpMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const int xik = x(i, k);
            if (!xik)
                continue;
            for (int j = 0; j < y.cols; ++j)
                r(i, j) = (r(i, j) + mul_mod(xik, y(k, j), p)) % p;
        }
    return r;
}

namespace {
// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(FpMatrix& m, int p)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int i = row; i < m.rows; ++i)
            if (m(i, col)) {
                sel = i;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != row)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m(sel, j), m(row, j));
        const int inv = inv_mod(m(row, col), p);
        for (int j = 0; j < m.cols; ++j)
            m(row, j) = mul_mod(m(row, j), inv, p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || !m(i, col))
                continue;
            const int f = m(i, col);
            for (int j = 0; j < m.cols; ++j)
                m(i, j) = ((m(i, j) - mul_mod(f, m(row, j), p)) % p + p) % p;
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}
} // namespace

int rank_mod_p(FpMatrix m, int p)
{
    return static_cast<int>(rref(m, p).size());
}

std::vector<std::vector<int>> nullspace_mod_p(FpMatrix m, int p)
{
    const auto pivots = rref(m, p);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<int> v(static_cast<std::size_t>(m.cols), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (p - m(static_cast<int>(r), free)) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::vector<std::vector<int>> endomorphism_basis(const Quiver& q, const FiniteFieldRep& rep)
{
    const DimVector& alpha = rep.alpha;
    const int p = rep.p;
    std::vector<int> block(alpha.size());
    int unknowns = 0;
    for (std::size_t v = 0; v < alpha.size(); ++v) {
        block[v] = unknowns;
        unknowns += alpha[v] * alpha[v];
    }
    int equations = 0;
    for (const Arrow& h : q.arrows())
        equations += alpha[h.target] * alpha[h.source];

    FpMatrix sys(equations, unknowns);
    int row = 0;
    for (std::size_t hi = 0; hi < q.arrows().size(); ++hi) {
        const Arrow& h = q.arrows()[hi];
        const FpMatrix& x = rep.maps[hi];
        const int nt = alpha[h.target], ns = alpha[h.source];
        // (f_t x - x f_s)_{ij} = sum_a f_t(i,a) x(a,j) - sum_b x(i,b) f_s(b,j)
        for (int i = 0; i < nt; ++i)
            for (int j = 0; j < ns; ++j, ++row) {
                for (int a = 0; a < nt; ++a) {
                    int& cell = sys(row, block[h.target] + i * nt + a);
                    cell = (cell + x(a, j)) % p;
                }
                for (int b = 0; b < ns; ++b) {
                    int& cell = sys(row, block[h.source] + b * ns + j);
                    cell = ((cell - x(i, b)) % p + p) % p;
                }
            }
    }
    return nullspace_mod_p(std::move(sys), p);
}

bool is_absolutely_indecomposable(const Quiver& q, const FiniteFieldRep& rep, std::uint64_t cap)
{
    const DimVector& alpha = rep.alpha;
    const int p = rep.p;
    if (alpha.height() == 0)
        return false;
    const auto basis = endomorphism_basis(q, rep);
    // The identity always lies in End(M).
    if (basis.size() == 1)
        return true;
    const std::uint64_t total = capped_power(p, basis.size(), cap);
    if (total > cap)
        throw DomainError("endomorphism algebra of dimension " + std::to_string(basis.size()) +
                          " is too large to enumerate");

    const std::size_t len = basis.front().size();
    std::vector<int> coeff(basis.size(), 0);
    std::vector<int> element(len);
    for (std::uint64_t x = 0; x < total; ++x) {
        std::uint64_t y = x;
        for (auto& c : coeff) {
            c = static_cast<int>(y % p);
            y /= p;
        }
        std::fill(element.begin(), element.end(), 0);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (coeff[k])
                for (std::size_t t = 0; t < len; ++t)
                    element[t] = (element[t] + coeff[k] * basis[k][t]) % p;

        // Every block of element - c must be nilpotent for one common c.
        bool found = false;
        for (int c = 0; c < p && !found; ++c) {
            bool nilpotent = true;
            int offset = 0;
            for (std::size_t v = 0; v < alpha.size() && nilpotent; ++v) {
                const int n = alpha[v];
                if (n == 0)
                    continue;
                FpMatrix f(n, n);
                std::copy(element.begin() + offset, element.begin() + offset + n * n, f.a.begin());
                offset += n * n;
                for (int i = 0; i < n; ++i)
                    f(i, i) = ((f(i, i) - c) % p + p) % p;
                FpMatrix power = f;
                for (int k = 1; k < n; ++k)
                    power = multiply(power, f, p);
                nilpotent = power.is_zero();
            }
            found = nilpotent;
        }
        if (!found)
            return false;
    }
    return true;
}

std::uint64_t count_absolutely_indecomposable(const Quiver& q, const DimVector& alpha, int p,
                                              OracleOptions options)
{
    validate(q, alpha, p);
    const RepSpace space(q, alpha, p, options.cap);
    const OrbitPartition orbits = orbit_partition(q, alpha, p, options);
    std::uint64_t count = 0;
    for (std::uint64_t x : orbits.representatives)
        if (is_absolutely_indecomposable(q, space.rep(x), options.cap))
            ++count;
    return count;
}

mpz_class burnside_iso_classes(const Quiver& q, const DimVector& alpha, int p,
                               OracleOptions options)
{
    validate(q, alpha, p);
    std::vector<std::vector<FpMatrix>> groups;
    std::uint64_t order = 1;
    for (int n : alpha) {
        groups.push_back(general_linear_group(n, p, options.cap));
        order *= groups.back().size();
        if (order > options.cap)
            throw DomainError("group order exceeds the cap for the Burnside count");
    }

    // Fixed points of g: for each arrow, the kernel of X -> g_t X - X g_s.
    mpz_class sum = 0;
    std::vector<std::size_t> pick(alpha.size(), 0);
    for (std::uint64_t step = 0; step < order; ++step) {
        unsigned long kernel = 0;
        for (const Arrow& h : q.arrows()) {
            const int m = alpha[h.target], n = alpha[h.source];
            if (m == 0 || n == 0)
                continue;
            const FpMatrix& gt = groups[h.target][pick[h.target]];
            const FpMatrix& gs = groups[h.source][pick[h.source]];
            FpMatrix lin(m * n, m * n);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < n; ++b) {
                    const int col = a * n + b;
                    for (int i = 0; i < m; ++i)
                        lin(i * n + b, col) = (lin(i * n + b, col) + gt(i, a)) % p;
                    for (int j = 0; j < n; ++j)
                        lin(a * n + j, col) = ((lin(a * n + j, col) - gs(b, j)) % p + p) % p;
                }
            kernel += static_cast<unsigned long>(m * n - rank_mod_p(std::move(lin), p));
        }
        mpz_class fixed;
        mpz_ui_pow_ui(fixed.get_mpz_t(), static_cast<unsigned long>(p), kernel);
        sum += fixed;
        for (std::size_t v = 0; v < pick.size(); ++v) {
            if (++pick[v] < groups[v].size())
                break;
            pick[v] = 0;
        }
    }
    mpz_class ord = static_cast<unsigned long>(order);
    if (!mpz_divisible_p(sum.get_mpz_t(), ord.get_mpz_t()))
        throw ConsistencyError("Burnside sum is not divisible by the group order");
    return sum / ord;
}

std::uint64_t count_all_iso_classes(const Quiver& q, const DimVector& alpha, int p,
                                    OracleOptions options)
{
    validate(q, alpha, p);
    const OrbitPartition orbits = orbit_partition(q, alpha, p, options);
    const std::uint64_t count = orbits.representatives.size();
    const mpz_class burnside = burnside_iso_classes(q, alpha, p, options);
    if (burnside != static_cast<unsigned long>(count))
        throw ConsistencyError("orbit partition found " + std::to_string(count) +
                               " classes, Burnside's lemma gives " + burnside.get_str());
    return count;
}

} // namespace kacpoly
