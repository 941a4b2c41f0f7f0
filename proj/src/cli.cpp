#include "kacpoly/cli.hpp"

#include "kacpoly/errors.hpp"
#include "kacpoly/fforacle.hpp"
#include "kacpoly/io.hpp"
#include "kacpoly/kac.hpp"
#include "kacpoly/kacmoody.hpp"
#include "kacpoly/parallel.hpp"
#include "kacpoly/selftest.hpp"
#include "kacpoly/varieties.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace kacpoly::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    int jobs = 0;
    std::string quiver;
    std::string dim, v, w, hw, drop, bound, all_upto;
    std::string method;
    int p = 2;
    std::uint64_t cap = std::uint64_t{1} << 24;
};

DimVector parse_vector(const std::string& text, const char* flag)
{
    try {
        return parse_dim_list(text);
    } catch (const DomainError& e) {
        throw UsageError(std::string("--") + flag + ": " + e.what());
    }
}

DimVector vector_for(const Quiver& q, const std::string& text, const char* flag)
{
    DimVector v = parse_vector(text, flag);
    if (v.size() != q.vertex_count())
        throw DomainError(std::string("--") + flag + " has " + std::to_string(v.size()) +
                          " entries but the quiver has " + std::to_string(q.vertex_count()) +
                          " vertices");
    return v;
}

// Box bound from --bound if given, else the fallback; must dominate `need`.
DimVector bound_for(const Quiver& q, const Options& o, const DimVector& fallback,
                    const DimVector& need)
{
    DimVector b = o.bound.empty() ? fallback : vector_for(q, o.bound, "bound");
    if (!need.le(b))
        throw DomainError("box bound " + b.to_string() + " does not dominate " + need.to_string());
    return b;
}

std::string join(const std::vector<std::string>& items, char sep)
{
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i)
        s += (i ? std::string(1, sep) : std::string()) + items[i];
    return s;
}

std::string csv_vector(const DimVector& v)
{
    std::vector<std::string> items;
    for (int x : v)
        items.push_back(std::to_string(x));
    return join(items, ';');
}

std::string csv_poly(const Polynomial& p)
{
    std::vector<std::string> items;
    for (const auto& c : p.coefficients())
        items.push_back(c.get_str());
    return join(items, ';');
}

// Output sink: JSON document or CSV rows, chosen by --format.
struct Emitter {
    bool csv = false;
    Json doc = Json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& out) const
    {
        if (!csv) {
            out << doc.dump() << '\n';
            return;
        }
        out << join(header, ',') << '\n';
        for (const auto& r : rows)
            out << join(r, ',') << '\n';
    }
};

void kac_command(const Options& o, Emitter& em)
{
    const Quiver q = load_quiver(o.quiver);
    if (o.dim.empty() == o.all_upto.empty())
        throw UsageError("kac needs exactly one of --dim or --all-upto");
    const KacCalculator calc(q, o.jobs);
    em.header = {"alpha", "num", "den"};
    if (!o.dim.empty()) {
        const DimVector alpha = vector_for(q, o.dim, "dim");
        const DimVector b = bound_for(q, o, alpha, alpha);
        const KacPolynomial a = calc.kac_polynomial(alpha, Box(b));
        const RationalFunction f(a.poly);
        em.doc["alpha"] = dimvector_to_json(alpha);
        em.doc["polynomial"] = ratfunc_to_json(f);
        em.rows.push_back({csv_vector(alpha), csv_poly(f.numerator()), csv_poly(f.denominator())});
        return;
    }
    const DimVector b = vector_for(q, o.all_upto, "all-upto");
    const TruncatedSeries a = calc.a_series(Box(b));
    Json list = Json::array();
    for (const auto& [alpha, coeff] : a.terms()) {
        list.push_back({{"alpha", dimvector_to_json(alpha)}, {"polynomial", ratfunc_to_json(coeff)}});
        em.rows.push_back({csv_vector(alpha), csv_poly(coeff.numerator()),
                           csv_poly(coeff.denominator())});
    }
    em.doc["box"] = dimvector_to_json(b);
    em.doc["polynomials"] = std::move(list);
}

void roots_command(const Options& o, Emitter& em)
{
    const Quiver q = load_quiver(o.quiver);
    if (o.bound.empty())
        throw UsageError("roots needs --bound");
    const DimVector b = vector_for(q, o.bound, "bound");
    const RootTable table = peterson(q, b);
    Json list = Json::array();
    em.header = {"beta", "mult", "real"};
    for (const auto& [beta, m] : table.roots()) {
        const bool real = is_real_root(q, beta, table);
        list.push_back({{"beta", dimvector_to_json(beta)}, {"mult", m.get_str()}, {"real", real}});
        em.rows.push_back({csv_vector(beta), m.get_str(), real ? "true" : "false"});
    }
    em.doc["bound"] = dimvector_to_json(b);
    em.doc["roots"] = std::move(list);
}

void weightmult_command(const Options& o, Emitter& em)
{
    const Quiver q = load_quiver(o.quiver);
    if (o.hw.empty() || o.drop.empty())
        throw UsageError("weightmult needs --hw and --drop");
    const HighestWeight hw{vector_for(q, o.hw, "hw")};
    const DimVector drop = vector_for(q, o.drop, "drop");
    const DimVector b = bound_for(q, o, drop, drop);
    const std::string method = o.method.empty() ? "both" : o.method;

    em.doc["hw"] = dimvector_to_json(hw.lambda);
    em.doc["drop"] = dimvector_to_json(drop);
    em.header = {"hw", "drop", "method", "mult"};
    std::optional<mpz_class> t1, fr;
    if (method == "theorem1" || method == "both") {
        t1 = weight_mult_theorem1(q, hw, drop, b);
        em.doc["theorem1"] = t1->get_str();
        em.rows.push_back({csv_vector(hw.lambda), csv_vector(drop), "theorem1", t1->get_str()});
    }
    if (method == "freudenthal" || method == "both") {
        fr = weight_mult_freudenthal(q, hw, b).mult(drop);
        em.doc["freudenthal"] = fr->get_str();
        em.rows.push_back({csv_vector(hw.lambda), csv_vector(drop), "freudenthal", fr->get_str()});
    }
    if (t1 && fr) {
        em.doc["methods_agree"] = (*t1 == *fr);
        if (*t1 != *fr)
            throw ConsistencyError("weight multiplicity methods disagree: theorem1 " +
                                   t1->get_str() + ", freudenthal " + fr->get_str());
    }
    em.doc["multiplicity"] = (t1 ? *t1 : *fr).get_str();
}

void character_command(const Options& o, Emitter& em)
{
    const Quiver q = load_quiver(o.quiver);
    if (o.hw.empty() || o.bound.empty())
        throw UsageError("character needs --hw and --bound");
    const HighestWeight hw{vector_for(q, o.hw, "hw")};
    const DimVector b = vector_for(q, o.bound, "bound");
    Json list = Json::array();
    em.header = {"drop", "mult"};
    for (const auto& [beta, m] : character_level_one(q, hw, b)) {
        list.push_back({{"drop", dimvector_to_json(beta)}, {"mult", m.get_str()}});
        em.rows.push_back({csv_vector(beta), m.get_str()});
    }
    em.doc["hw"] = dimvector_to_json(hw.lambda);
    em.doc["bound"] = dimvector_to_json(b);
    em.doc["character"] = std::move(list);
}

void betti_command(const Options& o, Emitter& em)
{
    const Quiver q = load_quiver(o.quiver);
    if (o.v.empty() || o.w.empty())
        throw UsageError("betti needs --v and --w");
    const DimVector alpha = vector_for(q, o.v, "v");
    const DimVector lambda = vector_for(q, o.w, "w");
    const DimVector b = bound_for(q, o, alpha, alpha);
    const Box box(b);
    const std::string method = o.method.empty() ? "both" : o.method;

    std::optional<BettiProfile> via_kac, via_hausel;
    if (method == "kac" || method == "both")
        via_kac = poincare_via_kac(q, alpha, lambda, box, o.jobs);
    if (method == "hausel" || method == "both")
        via_hausel = profile_from_polynomial(q, alpha, lambda,
                                             poincare_via_hausel(q, lambda, box, o.jobs).at(alpha));
    const BettiProfile& prof = via_kac ? *via_kac : *via_hausel;

    em.doc["alpha"] = dimvector_to_json(alpha);
    em.doc["lambda"] = dimvector_to_json(lambda);
    em.doc["method"] = method;
    em.doc["d"] = prof.d;
    em.doc["empty"] = prof.empty;
    em.doc["p"] = polynomial_to_json(prof.p);
    Json betti = Json::array();
    em.header = {"degree", "betti"};
    for (const auto& [deg, dim] : prof.betti()) {
        betti.push_back({{"degree", deg}, {"dim", dim.get_str()}});
        em.rows.push_back({std::to_string(deg), dim.get_str()});
    }
    em.doc["betti"] = std::move(betti);
    em.doc["euler_characteristic"] = euler_characteristic(prof).get_str();
    em.doc["weight_multiplicity"] = weight_mult_via_betti(prof).get_str();
    if (via_kac && via_hausel) {
        const bool agree = via_kac->p == via_hausel->p;
        em.doc["methods_agree"] = agree;
        if (!agree)
            throw ConsistencyError("Poincare polynomial methods disagree: kac " +
                                   via_kac->p.to_string() + ", hausel " +
                                   via_hausel->p.to_string());
    }
}

void oracle_command(const Options& o, Emitter& em, bool absolutely_indecomposable)
{
    const Quiver q = load_quiver(o.quiver);
    if (o.dim.empty())
        throw UsageError("oracle needs --dim");
    const DimVector alpha = vector_for(q, o.dim, "dim");
    const OracleOptions opts{o.cap};
    const std::uint64_t count = absolutely_indecomposable
                                    ? count_absolutely_indecomposable(q, alpha, o.p, opts)
                                    : count_all_iso_classes(q, alpha, o.p, opts);
    em.doc["alpha"] = dimvector_to_json(alpha);
    em.doc["p"] = o.p;
    em.doc["count"] = std::to_string(count);
    em.header = {"alpha", "p", "count"};
    em.rows.push_back({csv_vector(alpha), std::to_string(o.p), std::to_string(count)});
}

bool selftest_command(const Options& o, Emitter& em)
{
    bool all = true;
    Json list = Json::array();
    em.header = {"check", "passed", "detail"};
    for (const auto& r : run_selftest(o.jobs)) {
        all = all && r.passed;
        list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        em.rows.push_back({r.name, r.passed ? "true" : "false", r.detail});
    }
    em.doc["checks"] = std::move(list);
    em.doc["passed"] = all;
    return all;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Kac polynomials, root and weight multiplicities, quiver variety Betti numbers"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", o.jobs, "Worker threads (default: number of processors)");

    auto quiver_opt = [&](CLI::App* sub) {
        sub->add_option("--quiver", o.quiver, "Quiver JSON file or built-in name")->required();
    };

    auto* kac = app.add_subcommand("kac", "Kac polynomials");
    quiver_opt(kac);
    kac->add_option("--dim", o.dim, "Dimension vector, e.g. 1,1");
    kac->add_option("--all-upto", o.all_upto, "Sweep every vector in this box");
    kac->add_option("--bound", o.bound, "Truncation box (default: --dim)");

    auto* roots = app.add_subcommand("roots", "Peterson root multiplicities");
    quiver_opt(roots);
    roots->add_option("--bound", o.bound, "Largest root considered")->required();

    auto* wm = app.add_subcommand("weightmult", "Weight multiplicity of L(lambda)");
    quiver_opt(wm);
    wm->add_option("--hw", o.hw, "Highest weight pairings")->required();
    wm->add_option("--drop", o.drop, "Drop vector beta of the weight lambda - beta")->required();
    wm->add_option("--bound", o.bound, "Recursion bound (default: --drop)");
    wm->add_option("--method", o.method, "theorem1|freudenthal|both")
        ->check(CLI::IsMember({"theorem1", "freudenthal", "both"}));

    auto* ch = app.add_subcommand("character", "Level-one character table");
    quiver_opt(ch);
    ch->add_option("--hw", o.hw, "Highest weight pairings")->required();
    ch->add_option("--bound", o.bound, "Largest drop vector")->required();

    auto* betti = app.add_subcommand("betti", "Betti numbers of the quiver variety M(v, w)");
    quiver_opt(betti);
    betti->add_option("--v", o.v, "Dimension vector alpha")->required();
    betti->add_option("--w", o.w, "Framing vector lambda")->required();
    betti->add_option("--bound", o.bound, "Truncation box (default: --v)");
    betti->add_option("--method", o.method, "kac|hausel|both")
        ->check(CLI::IsMember({"kac", "hausel", "both"}));

    auto* oracle = app.add_subcommand("oracle", "Finite-field brute-force counts");
    oracle->require_subcommand(1);
    auto oracle_sub = [&](const char* name, const char* desc) {
        auto* sub = oracle->add_subcommand(name, desc);
        quiver_opt(sub);
        sub->add_option("--dim", o.dim, "Dimension vector")->required();
        sub->add_option("--p", o.p, "Prime field size")->required();
        sub->add_option("--cap", o.cap, "Largest enumerated search space");
        return sub;
    };
    auto* ai = oracle_sub("ai-count", "Absolutely indecomposable representations");
    auto* iso = oracle_sub("iso-count", "All isomorphism classes (Burnside-checked)");

    auto* selftest = app.add_subcommand("selftest", "Run the invariant suite on built-in quivers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    Emitter em;
    em.csv = o.format == "csv";
    int code = ok;
    try {
        if (*kac)
            kac_command(o, em);
        else if (*roots)
            roots_command(o, em);
        else if (*wm)
            weightmult_command(o, em);
        else if (*ch)
            character_command(o, em);
        else if (*betti)
            betti_command(o, em);
        else if (*ai)
            oracle_command(o, em, true);
        else if (*iso)
            oracle_command(o, em, false);
        else if (*selftest)
            code = selftest_command(o, em) ? ok : consistency;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return domain;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return consistency;
    }
    em.write(out);
    return code;
}

} // namespace kacpoly::cli
