#pragma once

#include "kacpoly/dimvector.hpp"
#include "kacpoly/quiver.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace kacpoly {

/// Dense matrix over the prime field F_p, entries in [0, p).
struct FpMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    FpMatrix() = default;
    FpMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    static FpMatrix identity(int n);

    int& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    int operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    bool is_zero() const;
    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

FpMatrix multiply(const FpMatrix& x, const FpMatrix& y, int p);
/// Rank by Gaussian elimination mod p.
int rank_mod_p(FpMatrix m, int p);
/// Basis of {v : m v = 0}, one vector per row of the result.
std::vector<std::vector<int>> nullspace_mod_p(FpMatrix m, int p);

/// A representation of a quiver over F_p: one (dim target) x (dim source)
/// matrix per arrow, in arrow order.
struct FiniteFieldRep {
    int p = 2;
    DimVector alpha;
    std::vector<FpMatrix> maps;
};

/// Basis of End(M) as block-diagonal tuples (f_i)_i solving f_t x_h = x_h f_s
/// for every arrow h; each basis element is stored as its concatenated blocks.
std::vector<std::vector<int>> endomorphism_basis(const Quiver& q, const FiniteFieldRep& rep);

/// End(M) is local with residue field F_p, i.e. every endomorphism is a
/// scalar plus a nilpotent. Enumerates End(M), bounded by `cap` elements.
bool is_absolutely_indecomposable(const Quiver& q, const FiniteFieldRep& rep,
                                  std::uint64_t cap = std::uint64_t{1} << 24);

struct OracleOptions {
    /// Largest number of representations (or group elements) enumerated.
    std::uint64_t cap = std::uint64_t{1} << 24;
};

/// Number of isomorphism classes of absolutely indecomposable representations
/// of dimension alpha over F_p, by brute-force orbit enumeration.
/// Throws DomainError if p is not prime or the search space exceeds the cap.
std::uint64_t count_absolutely_indecomposable(const Quiver& q, const DimVector& alpha, int p,
                                              OracleOptions options = {});

/// Number of isomorphism classes of representations of dimension alpha over
/// F_p. The orbit partition is checked against Burnside's lemma.
std::uint64_t count_all_iso_classes(const Quiver& q, const DimVector& alpha, int p,
                                    OracleOptions options = {});

/// Burnside count (1/|G|) sum_g |Fix(g)| over G = prod_i GL(alpha_i, F_p).
mpz_class burnside_iso_classes(const Quiver& q, const DimVector& alpha, int p,
                               OracleOptions options = {});

bool is_prime(int p);

} // namespace kacpoly
