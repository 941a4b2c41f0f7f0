#pragma once

#include "kacpoly/dimvector.hpp"
#include "kacpoly/quiver.hpp"
#include "kacpoly/series.hpp"

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace kacpoly {

/// How the convolution over beta' + beta'' = beta is evaluated. Both give
/// identical tables; `naive` exists so tests can check the halved form.
enum class PetersonSum { halved, naive };

/// Root multiplicities dim g(Gamma)_beta for 0 < beta <= bound, together with
/// the Peterson auxiliaries c_beta = sum_{k | beta} mult(beta/k)/k.
class RootTable {
public:
    RootTable(Quiver q, DimVector bound);

    const Quiver& quiver() const noexcept { return quiver_; }
    const DimVector& bound() const noexcept { return box_.bound(); }
    const Box& box() const noexcept { return box_; }

    /// Zero for beta = 0 or beta outside the bound.
    const mpz_class& mult(const DimVector& beta) const;
    const mpq_class& c(const DimVector& beta) const;

    /// (beta, mult) for every beta with mult > 0, by height.
    std::vector<std::pair<DimVector, mpz_class>> roots() const;

private:
    friend RootTable peterson(const Quiver&, const DimVector&, PetersonSum);
    Quiver quiver_;
    Box box_;
    std::vector<mpz_class> mult_;
    std::vector<mpq_class> c_;
};

/// Peterson's recursion
///   ((beta,beta) - 2 ht(beta)) c_beta = sum_{beta'+beta''=beta} (beta',beta'') c_beta' c_beta''
/// by increasing height, then mult(beta) = c_beta - sum_{k>=2} mult(beta/k)/k.
/// Throws ConsistencyError on a non-integral or negative multiplicity, or on a
/// zero left coefficient with a nonzero right side.
RootTable peterson(const Quiver& q, const DimVector& bound,
                   PetersonSum mode = PetersonSum::halved);

/// mult(beta) > 0 and T(beta) = 1.
bool is_real_root(const Quiver& q, const DimVector& beta, const RootTable& table);

/// Pairings <lambda-bar, alpha_i^vee> = lambda_i of a dominant integral weight.
struct HighestWeight {
    DimVector lambda;
};

/// dim L(lambda)_{lambda - beta} for 0 <= beta <= bound.
class WeightMultTable {
public:
    WeightMultTable(HighestWeight lambda, DimVector bound);

    const HighestWeight& highest_weight() const noexcept { return lambda_; }
    const DimVector& bound() const noexcept { return box_.bound(); }
    const mpz_class& mult(const DimVector& beta) const;
    void set(const DimVector& beta, mpz_class m) { mult_[box_.index(beta)] = std::move(m); }

private:
    HighestWeight lambda_;
    Box box_;
    std::vector<mpz_class> mult_;
};

/// dim g(Gamma_*)_{(beta,1)}, the weight multiplicity via the framed quiver.
mpz_class weight_mult_theorem1(const Quiver& q, const HighestWeight& lambda,
                               const DimVector& beta, const DimVector& bound);

/// Freudenthal's recursion over the drop vectors beta <= bound, using root
/// multiplicities from `roots` (which must cover `bound`).
WeightMultTable weight_mult_freudenthal(const Quiver& q, const HighestWeight& lambda,
                                        const DimVector& bound, const RootTable& roots);
WeightMultTable weight_mult_freudenthal(const Quiver& q, const HighestWeight& lambda,
                                        const DimVector& bound);

/// beta -> dim g(Gamma_*)_{(beta,1)} for all beta <= bound, from one framed
/// Peterson table.
std::map<DimVector, mpz_class> character_level_one(const Quiver& q, const HighestWeight& lambda,
                                                   const DimVector& bound);

} // namespace kacpoly
