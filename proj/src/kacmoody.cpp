#include "kacpoly/kacmoody.hpp"

#include "kacpoly/errors.hpp"

namespace kacpoly {

namespace {
const mpz_class zero_z = 0;
const mpq_class zero_q = 0;

// Largest k dividing every entry of beta; the divisors k >= 2 of that index
// the sub-multiples beta/k.
std::vector<int> proper_divisors(const DimVector& beta)
{
    std::vector<int> out;
    const int g = beta.content();
    for (int k = 2; k <= g; ++k)
        if (g % k == 0)
            out.push_back(k);
    return out;
}
} // namespace

RootTable::RootTable(Quiver q, DimVector bound)
    : quiver_(std::move(q)), box_(std::move(bound)), mult_(box_.size()), c_(box_.size())
{
    require_matches(quiver_, box_.bound(), "bound");
}

const mpz_class& RootTable::mult(const DimVector& beta) const
{
    if (!box_.contains(beta))
        return zero_z;
    return mult_[box_.index(beta)];
}

const mpq_class& RootTable::c(const DimVector& beta) const
{
    if (!box_.contains(beta))
        return zero_q;
    return c_[box_.index(beta)];
}

std::vector<std::pair<DimVector, mpz_class>> RootTable::roots() const
{
    std::vector<std::pair<DimVector, mpz_class>> out;
    for (const auto& beta : vectors_by_height(box_.bound())) {
        const auto& m = mult_[box_.index(beta)];
        if (m > 0)
            out.emplace_back(beta, m);
    }
    return out;
}

RootTable peterson(const Quiver& q, const DimVector& bound, PetersonSum mode)
{
    RootTable table(q, bound);
    const Box& box = table.box_;
    for (const DimVector& beta : vectors_by_height(bound)) {
        const int ht = beta.height();
        if (ht == 0)
            continue;
        const std::size_t idx = box.index(beta);
        if (ht == 1) {
            table.c_[idx] = 1;
            table.mult_[idx] = 1;
            continue;
        }

        mpq_class rhs = 0;
        for (const DimVector& left : vectors_in_box(beta)) {
            if (left.is_zero() || left == beta)
                continue;
            const DimVector right = beta - left;
            const std::size_t li = box.index(left);
            const std::size_t ri = box.index(right);
            if (mode == PetersonSum::halved && li > ri)
                continue;
            const mpq_class& cl = table.c_[li];
            const mpq_class& cr = table.c_[ri];
            if (cl == 0 || cr == 0)
                continue;
            mpq_class term = cl * cr * bilinear_form(q, left, right);
            if (mode == PetersonSum::halved && li < ri)
                term *= 2;
            rhs += term;
        }

        mpq_class divisible = 0;
        for (int k : proper_divisors(beta))
            divisible += mpq_class(table.mult_[box.index(beta.divided_by(k))], k);

        const long lhs = bilinear_form(q, beta, beta) - 2L * ht;
        mpq_class c;
        if (lhs != 0) {
            c = rhs / lhs;
        } else if (rhs == 0) {
            c = divisible;
        } else {
            throw ConsistencyError("Peterson recursion at " + beta.to_string() +
                                   ": zero left coefficient but right side " + rhs.get_str());
        }
        mpq_class m = c - divisible;
        m.canonicalize();
        if (m.get_den() != 1 || m < 0)
            throw ConsistencyError("Peterson recursion produced multiplicity " + m.get_str() +
                                   " at " + beta.to_string());
        table.c_[idx] = c;
        table.mult_[idx] = m.get_num();
    }
    return table;
}

bool is_real_root(const Quiver& q, const DimVector& beta, const RootTable& table)
{
    if (!table.box().contains(beta))
        throw DomainError("vector " + beta.to_string() + " outside the root table bound");
    return table.mult(beta) > 0 && tits_form(q, beta) == 1;
}

WeightMultTable::WeightMultTable(HighestWeight lambda, DimVector bound)
    : lambda_(std::move(lambda)), box_(std::move(bound)), mult_(box_.size())
{
}

const mpz_class& WeightMultTable::mult(const DimVector& beta) const
{
    if (!box_.contains(beta))
        return zero_z;
    return mult_[box_.index(beta)];
}

namespace {
void require_dominant(const Quiver& q, const HighestWeight& lambda)
{
    require_matches(q, lambda.lambda, "highest weight");
    if (!lambda.lambda.is_nonnegative())
        throw DomainError("highest weight must be dominant: " + lambda.lambda.to_string());
}
} // namespace

mpz_class weight_mult_theorem1(const Quiver& q, const HighestWeight& lambda,
                               const DimVector& beta, const DimVector& bound)
{
    require_dominant(q, lambda);
    require_matches(q, beta, "drop vector");
    if (!beta.is_nonnegative() || !beta.le(bound))
        throw DomainError("drop vector " + beta.to_string() + " outside bound " + bound.to_string());
    const RootTable framed = peterson(frame(q, lambda.lambda), framed_vector(bound, 1));
    return framed.mult(framed_vector(beta, 1));
}

WeightMultTable weight_mult_freudenthal(const Quiver& q, const HighestWeight& lambda,
                                        const DimVector& bound, const RootTable& roots)
{
    require_dominant(q, lambda);
    require_matches(q, bound, "bound");
    if (!bound.le(roots.bound()))
        throw DomainError("root table bound " + roots.bound().to_string() +
                          " does not cover " + bound.to_string());
    const auto positive = roots.roots();
    WeightMultTable table(lambda, bound);
    for (const DimVector& beta : vectors_by_height(bound)) {
        if (beta.is_zero()) {
            table.set(beta, 1);
            continue;
        }
        mpz_class rhs = 0;
        for (const auto& [alpha, mult] : positive) {
            if (!alpha.le(beta))
                continue;
            const long lambda_alpha = dot(lambda.lambda, alpha);
            const long beta_alpha = bilinear_form(q, beta, alpha);
            const long alpha_alpha = bilinear_form(q, alpha, alpha);
            mpz_class inner = 0;
            DimVector rest = beta - alpha;
            for (long k = 1; rest.is_nonnegative(); ++k, rest -= alpha) {
                const mpz_class& m = table.mult(rest);
                if (m != 0)
                    inner += m * (lambda_alpha - beta_alpha + k * alpha_alpha);
            }
            rhs += mult * inner;
        }
        rhs *= 2;
        const long lhs = 2 * (dot(lambda.lambda, beta) + beta.height()) - bilinear_form(q, beta, beta);
        if (lhs <= 0) {
            if (rhs != 0)
                throw ConsistencyError("Freudenthal recursion at " + beta.to_string() +
                                       ": left coefficient " + std::to_string(lhs) +
                                       " with right side " + rhs.get_str());
            table.set(beta, 0);
            continue;
        }
        if (!mpz_divisible_ui_p(rhs.get_mpz_t(), static_cast<unsigned long>(lhs)) || rhs < 0)
            throw ConsistencyError("Freudenthal recursion produced " + rhs.get_str() + "/" +
                                   std::to_string(lhs) + " at " + beta.to_string());
        table.set(beta, rhs / lhs);
    }
    return table;
}

WeightMultTable weight_mult_freudenthal(const Quiver& q, const HighestWeight& lambda,
                                        const DimVector& bound)
{
    return weight_mult_freudenthal(q, lambda, bound, peterson(q, bound));
}

std::map<DimVector, mpz_class> character_level_one(const Quiver& q, const HighestWeight& lambda,
                                                   const DimVector& bound)
{
    require_dominant(q, lambda);
    require_matches(q, bound, "bound");
    const RootTable framed = peterson(frame(q, lambda.lambda), framed_vector(bound, 1));
    std::map<DimVector, mpz_class> out;
    for (const DimVector& beta : vectors_in_box(bound))
        out.emplace(beta, framed.mult(framed_vector(beta, 1)));
    return out;
}

} // namespace kacpoly
