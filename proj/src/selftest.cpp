#include "kacpoly/selftest.hpp"

#include "kacpoly/fforacle.hpp"
#include "kacpoly/io.hpp"
#include "kacpoly/kac.hpp"
#include "kacpoly/kacmoody.hpp"
#include "kacpoly/varieties.hpp"

#include <functional>
#include <sstream>

namespace kacpoly {

namespace {

Quiver named(const char* name)
{
    return *builtin_quiver(name);
}

// Returns an empty string on success, otherwise a description of the failure.
using Check = std::function<std::string(int)>;

std::string kac_matches_oracle([[maybe_unused]] int jobs)
{
    std::ostringstream fail;
    for (const char* name : {"a2", "kronecker2", "kronecker3"}) {
        const Quiver q = named(name);
        const KacCalculator calc(q, jobs);
        const Box box(DimVector{1, 1});
        const TruncatedSeries a = calc.a_series(box);
        for (const auto& alpha : vectors_in_box(DimVector{1, 1}))
            for (int p : {2, 3}) {
                const mpq_class expected = a.coeff(alpha).eval_at(p);
                const auto counted = count_absolutely_indecomposable(q, alpha, p);
                if (expected != static_cast<unsigned long>(counted))
                    fail << name << " " << alpha << " p=" << p << ": a=" << expected.get_str()
                         << " count=" << counted << "; ";
            }
    }
    return fail.str();
}

std::string finite_type_roots([[maybe_unused]] int jobs)
{
    std::ostringstream fail;
    const std::vector<std::tuple<const char*, DimVector, std::size_t>> cases = {
        {"a2", DimVector{1, 1}, 3}, {"a3", DimVector{1, 1, 1}, 6}, {"d4", DimVector{1, 1, 1, 2}, 12}};
    for (const auto& [name, highest, expected] : cases) {
        const Quiver q = named(name);
        const TruncatedSeries a = KacCalculator(q, jobs).a_series(Box(highest));
        const RootTable roots = peterson(q, highest);
        std::size_t count = 0;
        for (const auto& [alpha, coeff] : a.terms()) {
            ++count;
            if (!coeff.is_one() || roots.mult(alpha) != 1)
                fail << name << " " << alpha << " a=" << coeff.to_string() << "; ";
        }
        if (count != expected || roots.roots().size() != expected)
            fail << name << " has " << count << " roots; ";
    }
    return fail.str();
}

std::string weight_paths_agree([[maybe_unused]] int jobs)
{
    std::ostringstream fail;
    const Quiver q = named("a2");
    const HighestWeight hw{DimVector{1, 1}};
    const DimVector bound{2, 2};
    const auto via_theorem1 = character_level_one(q, hw, bound);
    const WeightMultTable via_freudenthal = weight_mult_freudenthal(q, hw, bound);
    for (const auto& [beta, m] : via_theorem1)
        if (m != via_freudenthal.mult(beta))
            fail << beta << ": " << m.get_str() << " vs " << via_freudenthal.mult(beta).get_str() << "; ";
    if (via_theorem1.at(DimVector{1, 1}) != 2)
        fail << "adjoint zero weight is not 2; ";
    return fail.str();
}

std::string betti_methods_agree([[maybe_unused]] int jobs)
{
    std::ostringstream fail;
    const Quiver q = named("a1");
    for (int w : {2, 3}) {
        const DimVector lambda{w};
        const Box box(DimVector{3});
        const auto hausel = poincare_via_hausel(q, lambda, box, jobs);
        for (const auto& [alpha, p] : hausel) {
            const BettiProfile kac = poincare_via_kac(q, alpha, lambda, box, jobs);
            if (kac.p != p)
                fail << "w=" << w << " " << alpha << ": " << kac.p.to_string() << " vs "
                     << p.to_string() << "; ";
        }
    }
    return fail.str();
}

std::string plethystic_round_trip([[maybe_unused]] int jobs)
{
    const Box box(DimVector{2, 2});
    TruncatedSeries f(box);
    f.set(DimVector{1, 0}, RationalFunction(Polynomial{0, 1}));
    f.set(DimVector{0, 1}, RationalFunction(Polynomial{1}, Polynomial{-1, 1}));
    f.set(DimVector{1, 1}, 3);
    if (plethystic_log(plethystic_exp(f)) != f)
        return "Log(Exp(f)) != f";
    return {};
}

std::string orientation_independent([[maybe_unused]] int jobs)
{
    std::ostringstream fail;
    for (const char* name : {"a2", "kronecker3"}) {
        const Quiver q = named(name);
        const Box box(DimVector{2, 2});
        if (KacCalculator(q, jobs).a_series(box) != KacCalculator(q.opposite(), jobs).a_series(box))
            fail << name << "; ";
    }
    return fail.str();
}

} // namespace

std::vector<CheckResult> run_selftest(int jobs)
{
    const std::vector<std::pair<std::string, Check>> checks = {
        {"kac_polynomials_match_finite_field_counts", kac_matches_oracle},
        {"finite_type_root_systems", finite_type_roots},
        {"weight_multiplicity_paths_agree", weight_paths_agree},
        {"betti_methods_agree", betti_methods_agree},
        {"plethystic_exp_log_round_trip", plethystic_round_trip},
        {"orientation_independence", orientation_independent},
    };
    std::vector<CheckResult> out;
    for (const auto& [name, check] : checks) {
        CheckResult r{name, false, {}};
        try {
            r.detail = check(jobs);
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace kacpoly
