// specvol: exact topological-recursion volumes from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cache error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "specvol/cache.hpp"
#include "specvol/extract.hpp"
#include "specvol/io.hpp"
#include "specvol/mirzakhani.hpp"
#include "specvol/oracle.hpp"
#include "specvol/trec.hpp"
#include "specvol/verify.hpp"

using namespace specvol;
using nlohmann::ordered_json;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCache = 3;

struct Options {
    std::string format = "text";
    std::optional<std::string> cache_dir;
    std::string curve;
    std::string kind;
    std::string theorem;
    int g = -1;
    int n = -1;
    int max = 4;
    int k = 1;
    long double q = 0.5L;
    long double tol = 1e-12L;
};

class Session {
public:
    explicit Session(const Options& opt) : opt_(opt), format_(parse_format(opt.format)) {}

    OutputFormat format() const { return format_; }

    CorrelatorCache& cache()
    {
        if (!cache_) cache_ = std::make_unique<CorrelatorCache>(CorrelatorCache::resolve_directory(opt_.cache_dir));
        return *cache_;
    }

private:
    const Options& opt_;
    OutputFormat format_;
    std::unique_ptr<CorrelatorCache> cache_;
};

void require_gn(const Options& o)
{
    if (o.g < 0 || o.n < 1) throw std::invalid_argument("need -g >= 0 and -n >= 1");
    if (!is_stable(o.g, o.n))
        throw std::invalid_argument("unstable (g,n) = (" + std::to_string(o.g) + "," + std::to_string(o.n) + ")");
}

int cmd_correlator(const Options& o, Session& s)
{
    CurveId curve = parse_curve(o.curve);
    require_gn(o);
    RecursionEngine engine(curve, &s.cache());
    std::cout << format_differential(*engine.correlator(o.g, o.n), s.format());
    return 0;
}

int cmd_volume(const Options& o, Session& s)
{
    require_gn(o);
    if (o.kind == "discrete") {
        RecursionEngine engine(CurveId::Okuyama, &s.cache());
        std::cout << format_quasi(discrete_volume(*engine.correlator(o.g, o.n)), s.format());
        return 0;
    }
    MirzakhaniEngine engine = o.kind == "q" ? MirzakhaniEngine::q_deformed() : MirzakhaniEngine::classical();
    std::cout << format_polynomial(engine.volume(o.g, o.n), s.format());
    return 0;
}

int cmd_verify(const Options& o, Session& s)
{
    Verifier verifier(&s.cache());
    VerifyReport report = verifier.run(o.theorem, o.max);
    switch (s.format()) {
    case OutputFormat::Json: {
        ordered_json j;
        j["sweep"] = report.name;
        j["ok"] = report.ok();
        j["results"] = ordered_json::array();
        for (const auto& r : report.results)
            j["results"].push_back({{"g", r.instance.g},
                                    {"n", r.instance.n},
                                    {"passed", r.passed},
                                    {"detail", r.detail},
                                    {"seconds", r.seconds}});
        std::cout << j.dump() << '\n';
        break;
    }
    case OutputFormat::Csv:
        std::cout << "g,n,passed,seconds,detail\n";
        for (const auto& r : report.results)
            std::cout << r.instance.g << ',' << r.instance.n << ',' << (r.passed ? 1 : 0) << ',' << r.seconds
                      << ",\"" << r.detail << "\"\n";
        break;
    default: std::cout << report.render();
    }
    return report.ok() ? 0 : kExitVerify;
}

int cmd_s_coeffs(const Options& o, Session& s)
{
    if (o.max < 1 || o.max > kMaxGenerators - 1) throw std::invalid_argument("--max out of range");
    std::vector<std::pair<std::string, GradedCoefficient>> items;
    auto values = s_coefficients(o.max);
    for (std::size_t m = 0; m < values.size(); ++m) items.emplace_back("s" + std::to_string(m + 1), values[m]);
    std::cout << format_coefficients(items, s.format());
    return 0;
}

int cmd_moments(const Options& o, Session& s)
{
    auto c = chord_moment(o.k);
    switch (s.format()) {
    case OutputFormat::Json: {
        ordered_json j;
        j["k"] = o.k;
        j["coefficients"] = ordered_json::array();
        for (const auto& x : c) j["coefficients"].push_back(x.get_str());
        std::cout << j.dump() << '\n';
        break;
    }
    case OutputFormat::Csv:
        std::cout << "crossings,count\n";
        for (std::size_t i = 0; i < c.size(); ++i) std::cout << i << ',' << c[i].get_str() << '\n';
        break;
    default: {
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += " + ";
            std::string coeff = c[i].get_str();
            if (i == 0) out += coeff;
            else {
                if (c[i] != 1) out += coeff + "*";
                out += i == 1 ? "q" : "q^" + std::to_string(i);
            }
        }
        std::cout << (out.empty() ? "0" : out) << '\n';
    }
    }
    return 0;
}

int cmd_zeta_q(const Options& o, Session& s)
{
    ZetaQValue v = zeta_q_numeric(o.k, o.q, o.tol);
    char value[64], bound[64];
    std::snprintf(value, sizeof value, "%.21Lg", v.value);
    std::snprintf(bound, sizeof bound, "%.3Lg", v.error_bound);
    switch (s.format()) {
    case OutputFormat::Json: {
        ordered_json j;
        j["k"] = o.k;
        j["value"] = value;
        j["error_bound"] = bound;
        j["terms"] = v.terms;
        std::cout << j.dump() << '\n';
        break;
    }
    case OutputFormat::Csv:
        std::cout << "k,value,error_bound,terms\n" << o.k << ',' << value << ',' << bound << ',' << v.terms << '\n';
        break;
    default: std::cout << value << " +- " << bound << " (" << v.terms << " terms)\n";
    }
    return 0;
}

int cmd_vg_limit(const Options& o, Session& s)
{
    if (o.g != 2 && o.g != 3) throw std::invalid_argument("vg-limit supports -g 2 or -g 3");
    LimitCheck c = vg_limit_check(o.g);
    bool match = c.limit == c.expected;
    std::cout << format_coefficients({{"stored", c.stored}, {"limit", c.limit}, {"expected", c.expected}}, s.format());
    if (s.format() == OutputFormat::Text) std::cout << (match ? "match" : "MISMATCH") << '\n';
    return match ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Exact topological-recursion volumes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cache-dir", o.cache_dir, "Correlator cache directory (default $SPECVOL_CACHE or ./.specvol-cache)");

    auto add_gn = [&o](CLI::App* sub) {
        sub->add_option("-g", o.g, "Genus")->required();
        sub->add_option("-n", o.n, "Number of boundaries")->required();
    };

    auto* correlator = app.add_subcommand("correlator", "Correlation differential of a curve");
    correlator->add_option("--curve", o.curve, "okuyama | topq | wpclassical | airy")->required();
    add_gn(correlator);

    auto* volume = app.add_subcommand("volume", "Discrete, q-deformed or classical volume");
    volume->add_option("--kind", o.kind, "discrete | q | classical")
        ->required()
        ->check(CLI::IsMember({"discrete", "q", "classical"}));
    add_gn(volume);

    auto* verify = app.add_subcommand("verify", "Run an identity over all (g,n) up to a complexity bound");
    verify->add_option("--theorem", o.theorem, "1 | 2 | 3 | specialization | crossengine")
        ->required()
        ->check(CLI::IsMember(Verifier::sweep_names()));
    verify->add_option("--max", o.max, "Bound on 2g-2+n")->capture_default_str()->check(CLI::Range(1, 8));

    auto* scoeffs = app.add_subcommand("s-coeffs", "Kappa-class coupling coefficients s_1..s_max");
    scoeffs->add_option("--max", o.max, "Number of coefficients")->capture_default_str();

    auto* moments = app.add_subcommand("moments", "Chord-diagram crossing polynomial");
    moments->add_option("-k", o.k, "Number of chords")->required()->check(CLI::Range(0, kMaxChords));

    auto* zeta = app.add_subcommand("zeta-q", "Numeric zeta_q(2k) with a certified error bound");
    zeta->add_option("-k", o.k, "Half the argument")->required();
    zeta->add_option("-q", o.q, "Deformation parameter in (0,1)")->required();
    zeta->add_option("--tol", o.tol, "Relative tolerance")->capture_default_str();

    auto* vg = app.add_subcommand("vg-limit", "Classical limit of the stored V_g(q)");
    vg->add_option("-g", o.g, "Genus (2 or 3)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Session session(o);
        if (*correlator) return cmd_correlator(o, session);
        if (*volume) return cmd_volume(o, session);
        if (*verify) return cmd_verify(o, session);
        if (*scoeffs) return cmd_s_coeffs(o, session);
        if (*moments) return cmd_moments(o, session);
        if (*zeta) return cmd_zeta_q(o, session);
        if (*vg) return cmd_vg_limit(o, session);
    } catch (const CacheError& e) {
        std::cerr << "cache error: " << e.what() << '\n';
        return kExitCache;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return kExitUsage;
}
