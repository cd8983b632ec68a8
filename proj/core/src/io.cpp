#include "specvol/io.hpp"

#include <json.hpp>

#include <sstream>

namespace specvol {

using nlohmann::ordered_json;

namespace {

ordered_json coeff_json(const Monomial& m, const Rational& r, GeneratorFamily family)
{
    ordered_json gens = ordered_json::object();
    for (int i = 0; i < kMaxGenerators; ++i) {
        if (!m.exponent(i)) continue;
        std::string key = family == GeneratorFamily::PiSquared ? "pi2" : std::to_string(2 * (i + 1));
        gens[key] = m.exponent(i);
    }
    ordered_json c;
    c["gens"] = gens;
    c["num"] = r.get_num().get_str();
    c["den"] = r.get_den().get_str();
    return c;
}

GradedCoefficient coeff_from_json(const ordered_json& c, GeneratorFamily family)
{
    Monomial m;
    for (const auto& [key, value] : c.at("gens").items()) {
        int index;
        if (key == "pi2") {
            if (family != GeneratorFamily::PiSquared) throw FormatError("pi2 generator in a ZetaQ coefficient");
            index = 0;
        } else {
            int arg = std::stoi(key);
            if (family != GeneratorFamily::ZetaQ || arg < 2 || arg % 2 || arg > 2 * kMaxGenerators)
                throw FormatError("bad generator key '" + key + "'");
            index = arg / 2 - 1;
        }
        int e = value.get<int>();
        if (e < 0 || e > 255) throw FormatError("bad generator exponent");
        m.set_exponent(index, static_cast<unsigned>(e));
    }
    Integer num(c.at("num").get<std::string>()), den(c.at("den").get<std::string>());
    if (den <= 0) throw FormatError("non-positive denominator");
    Rational r = make_rational(num, den);
    if (r.get_den() != den) throw FormatError("rational not in lowest terms");
    return GradedCoefficient::from_terms(family, {{m, r}});
}

std::string csv_gens(const Monomial& m, GeneratorFamily family)
{
    std::string s = render_monomial(m, family);
    return s.empty() ? "1" : s;
}

std::string join(const std::vector<int>& v, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

ordered_json poly_terms_json(const BoundaryPolynomial& p)
{
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms())
        for (const auto& [m, r] : c.terms()) {
            ordered_json t;
            t["exponents"] = e;
            t["coeff"] = coeff_json(m, r, c.family());
            terms.push_back(t);
        }
    return terms;
}

}  // namespace

OutputFormat parse_format(std::string_view name)
{
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string to_json(const CorrelationDifferential& w)
{
    ordered_json j;
    j["curve"] = curve_name(w.curve);
    j["g"] = w.g;
    j["n"] = w.n;
    ordered_json terms = ordered_json::array();
    for (const auto& [key, c] : w.terms) {
        std::vector<int> branches, orders;
        for (const auto& slot : key) {
            branches.push_back(slot.branch);
            orders.push_back(slot.order);
        }
        for (const auto& [m, r] : c.terms()) {
            ordered_json t;
            t["branches"] = branches;
            t["orders"] = orders;
            t["coeff"] = coeff_json(m, r, c.family());
            terms.push_back(t);
        }
    }
    j["terms"] = terms;
    return j.dump();
}

CorrelationDifferential differential_from_json(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    try {
        CorrelationDifferential w;
        w.curve = parse_curve(j.at("curve").get<std::string>());
        w.g = j.at("g").get<int>();
        w.n = j.at("n").get<int>();
        GeneratorFamily family = curve_descriptor(w.curve).family;
        for (const auto& t : j.at("terms")) {
            auto branches = t.at("branches").get<std::vector<int>>();
            auto orders = t.at("orders").get<std::vector<int>>();
            if (static_cast<int>(branches.size()) != w.n || orders.size() != branches.size())
                throw FormatError("term arity does not match n");
            BasisKey key;
            for (std::size_t i = 0; i < branches.size(); ++i) {
                if (branches[i] < -1 || branches[i] > 1 || orders[i] < 0 || orders[i] > 120)
                    throw FormatError("slot out of range");
                key.push_back(Slot{static_cast<std::int8_t>(branches[i]), static_cast<std::int8_t>(orders[i])});
            }
            w.add(key, coeff_from_json(t.at("coeff"), family));
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("schema violation: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

std::string to_csv(const CorrelationDifferential& w)
{
    std::ostringstream out;
    out << "branches,orders,gens,num,den\n";
    for (const auto& [key, c] : w.terms) {
        std::vector<int> branches, orders;
        for (const auto& slot : key) {
            branches.push_back(slot.branch);
            orders.push_back(slot.order);
        }
        for (const auto& [m, r] : c.terms())
            out << join(branches, ';') << ',' << join(orders, ';') << ',' << csv_gens(m, c.family()) << ','
                << r.get_num().get_str() << ',' << r.get_den().get_str() << '\n';
    }
    return out.str();
}

std::string to_json(const BoundaryPolynomial& p)
{
    ordered_json j;
    j["variables"] = std::string(1, p.symbol());
    j["n"] = p.variables();
    j["terms"] = poly_terms_json(p);
    return j.dump();
}

std::string to_csv(const BoundaryPolynomial& p)
{
    std::ostringstream out;
    out << "exponents,gens,num,den\n";
    for (const auto& [e, c] : p.terms())
        for (const auto& [m, r] : c.terms())
            out << join(e, ';') << ',' << csv_gens(m, c.family()) << ',' << r.get_num().get_str() << ','
                << r.get_den().get_str() << '\n';
    return out.str();
}

std::string to_json(const ParityQuasiPolynomial& p)
{
    ordered_json j;
    j["n"] = p.variables();
    ordered_json classes = ordered_json::array();
    for (const auto& [parity, poly] : p.classes()) {
        ordered_json c;
        c["parity"] = std::vector<int>(parity.begin(), parity.end());
        c["terms"] = poly_terms_json(poly);
        classes.push_back(c);
    }
    j["classes"] = classes;
    return j.dump();
}

std::string to_csv(const ParityQuasiPolynomial& p)
{
    std::ostringstream out;
    out << "parity,exponents,gens,num,den\n";
    for (const auto& [parity, poly] : p.classes())
        for (const auto& [e, c] : poly.terms())
            for (const auto& [m, r] : c.terms())
                out << join(std::vector<int>(parity.begin(), parity.end()), ';') << ',' << join(e, ';') << ','
                    << csv_gens(m, c.family()) << ',' << r.get_num().get_str() << ',' << r.get_den().get_str() << '\n';
    return out.str();
}

std::string render(const ParityQuasiPolynomial& p)
{
    std::string out;
    for (const auto& [parity, poly] : p.classes()) out += render_parity(parity) + ": " + render(poly) + "\n";
    return out;
}

std::string format_differential(const CorrelationDifferential& w, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Json: return to_json(w) + "\n";
    case OutputFormat::Csv: return to_csv(w);
    default: return render(w) + "\n";
    }
}

std::string format_polynomial(const BoundaryPolynomial& p, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Json: return to_json(p) + "\n";
    case OutputFormat::Csv: return to_csv(p);
    default: return render(p) + "\n";
    }
}

std::string format_quasi(const ParityQuasiPolynomial& p, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Json: return to_json(p) + "\n";
    case OutputFormat::Csv: return to_csv(p);
    default: return render(p);
    }
}

std::string format_coefficients(const std::vector<std::pair<std::string, GradedCoefficient>>& items,
                                OutputFormat format)
{
    if (format == OutputFormat::Json) {
        ordered_json j = ordered_json::object();
        for (const auto& [label, c] : items) {
            ordered_json terms = ordered_json::array();
            for (const auto& [m, r] : c.terms()) terms.push_back(coeff_json(m, r, c.family()));
            j[label] = terms;
        }
        return j.dump() + "\n";
    }
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "label,gens,num,den\n";
        for (const auto& [label, c] : items)
            for (const auto& [m, r] : c.terms())
                out << label << ',' << csv_gens(m, c.family()) << ',' << r.get_num().get_str() << ','
                    << r.get_den().get_str() << '\n';
        return out.str();
    }
    for (const auto& [label, c] : items) out << label << " = " << render(c) << '\n';
    return out.str();
}

}  // namespace specvol
