#include "specvol/verify.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "specvol/extract.hpp"

namespace specvol {

std::vector<Instance> sweep_instances(int max_complexity)
{
    std::vector<Instance> out;
    for (int c = 1; c <= max_complexity; ++c)
        for (int g = 0; 2 * g - 2 < c; ++g) {
            int n = c - 2 * g + 2;
            if (n >= 1) out.push_back({g, n});
        }
    return out;
}

bool VerifyReport::ok() const
{
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

std::string VerifyReport::render() const
{
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << " " << name << " (g,n) = (" << r.instance.g << "," << r.instance.n
            << ")";
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.3fs", r.seconds);
        out << buf;
        if (!r.passed) out << ": " << r.detail;
        out << '\n';
    }
    int passed = 0;
    for (const auto& r : results) passed += r.passed;
    out << name << ": " << passed << "/" << results.size() << " passed\n";
    return out.str();
}

Verifier::Verifier(CorrelatorStore* store) : store_(store) {}

const std::vector<std::string>& Verifier::sweep_names()
{
    static const std::vector<std::string> names{"1", "2", "3", "specialization", "crossengine"};
    return names;
}

RecursionEngine& Verifier::okuyama()
{
    if (!okuyama_) okuyama_ = std::make_unique<RecursionEngine>(CurveId::Okuyama, store_);
    return *okuyama_;
}

RecursionEngine& Verifier::topq()
{
    if (!topq_) topq_ = std::make_unique<RecursionEngine>(CurveId::TopQ, store_);
    return *topq_;
}

RecursionEngine& Verifier::wp()
{
    if (!wp_) wp_ = std::make_unique<RecursionEngine>(CurveId::WPClassical, store_);
    return *wp_;
}

MirzakhaniEngine& Verifier::q_mirzakhani()
{
    if (!q_mirz_) q_mirz_.reset(new MirzakhaniEngine(MirzakhaniEngine::q_deformed()));
    return *q_mirz_;
}

MirzakhaniEngine& Verifier::classical_mirzakhani()
{
    if (!classical_mirz_) classical_mirz_.reset(new MirzakhaniEngine(MirzakhaniEngine::classical()));
    return *classical_mirz_;
}

namespace {

Rational power_of_two(int e)
{
    Rational r(1);
    if (e >= 0)
        r.get_num() <<= e;
    else
        r.get_den() <<= -e;
    return r;
}

std::string compare(const BoundaryPolynomial& got, const BoundaryPolynomial& want, const std::string& what)
{
    std::string diff = first_difference(got, want);
    return diff.empty() ? std::string{} : what + ": " + diff;
}

}  // namespace

std::string Verifier::check_structure(int g, int n)
{
    auto w = okuyama().correlator(g, n);
    ValidationReport report = validate(*w);
    if (!report.ok()) return report.summary();
    ParityQuasiPolynomial N = discrete_volume(*w);  // throws on odd powers
    const int bound = 6 * g - 6 + 2 * n;
    for (const auto& [parity, poly] : N.classes()) {
        if (!poly.only_even_exponents()) return "odd exponent in class " + render_parity(parity);
        if (!poly.is_zero() && poly.total_degree() > bound)
            return "class " + render_parity(parity) + " has degree " + std::to_string(poly.total_degree()) +
                   " > " + std::to_string(bound);
    }
    // Symmetry under simultaneous permutation of variables and parity labels:
    // checked through adjacent transpositions.
    for (int i = 0; i + 1 < n; ++i)
        for (const auto& [parity, poly] : N.classes()) {
            Parity swapped = parity;
            std::swap(swapped[i], swapped[i + 1]);
            BoundaryPolynomial moved(n, poly.family(), poly.symbol());
            for (const auto& [e, c] : poly.terms()) {
                Exponents f = e;
                std::swap(f[i], f[i + 1]);
                moved.add_term(f, c);
            }
            std::string diff = first_difference(moved, N.at(swapped));
            if (!diff.empty())
                return "not symmetric under b" + std::to_string(i + 1) + " <-> b" + std::to_string(i + 2) + ": " + diff;
        }
    return {};
}

std::string Verifier::check_wp_limit(int g, int n)
{
    BoundaryPolynomial got = wp_limit(discrete_volume(*okuyama().correlator(g, n)), g, n);
    BoundaryPolynomial want = classical_mirzakhani().volume(g, n) * power_of_two(3 - 2 * g - n);
    return compare(got, want, "wp_limit(N) vs 2^(3-2g-n) V");
}

std::string Verifier::check_top_degree(int g, int n)
{
    BoundaryPolynomial got = top_degree_volume(discrete_volume(*okuyama().correlator(g, n)), g, n);
    BoundaryPolynomial want = inverse_laplace_volume(*topq().correlator(g, n)) * power_of_two(3 - 2 * g - n);
    return compare(got, want, "top degree of N vs 2^(3-2g-n) V^q");
}

std::string Verifier::check_specialization(int g, int n)
{
    std::string diff = compare(specialize(q_mirzakhani().volume(g, n), SpecializeTarget::ClassicalZeta),
                               classical_mirzakhani().volume(g, n), "specialized V^q vs V");
    if (!diff.empty()) return diff;
    auto w = specialize(*topq().correlator(g, n), SpecializeTarget::ClassicalZeta, CurveId::WPClassical);
    if (!(w == *wp().correlator(g, n))) return "specialized TopQ correlator differs from the WPClassical one";
    return {};
}

std::string Verifier::check_crossengine(int g, int n)
{
    std::string diff = compare(inverse_laplace_volume(*topq().correlator(g, n)), q_mirzakhani().volume(g, n),
                               "TopQ vs Mirzakhani(beta_q)");
    if (!diff.empty()) return diff;
    return compare(inverse_laplace_volume(*wp().correlator(g, n)), classical_mirzakhani().volume(g, n),
                   "WPClassical vs classical Mirzakhani");
}

VerifyReport Verifier::run(std::string_view name, int max_complexity)
{
    std::string (Verifier::*check)(int, int) = nullptr;
    if (name == "1") check = &Verifier::check_structure;
    else if (name == "2") check = &Verifier::check_wp_limit;
    else if (name == "3") check = &Verifier::check_top_degree;
    else if (name == "specialization") check = &Verifier::check_specialization;
    else if (name == "crossengine") check = &Verifier::check_crossengine;
    else throw std::invalid_argument("unknown sweep '" + std::string(name) + "'");
    if (max_complexity < 1) throw std::invalid_argument("max complexity must be at least 1");

    VerifyReport report{std::string(name), {}};
    for (Instance inst : sweep_instances(max_complexity)) {
        auto start = std::chrono::steady_clock::now();
        InstanceResult r{inst, false, {}, 0};
        try {
            r.detail = (this->*check)(inst.g, inst.n);
            r.passed = r.detail.empty();
        } catch (const ExtractError& e) {
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.results.push_back(std::move(r));
    }
    return report;
}

}  // namespace specvol
