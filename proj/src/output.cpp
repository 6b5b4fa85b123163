#include "realhiggs/output.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "realhiggs/errors.hpp"
#include "realhiggs/version.hpp"

namespace realhiggs {

using ojson = nlohmann::ordered_json;

std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Latex: return "latex";
        case OutputFormat::Text: return "text";
    }
    return "text";
}

OutputFormat parse_output_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "latex") return OutputFormat::Latex;
    if (s == "text") return OutputFormat::Text;
    throw InvalidInput("unknown format '" + s + "' (expected json, csv, latex or text)");
}

OutputRecord OutputRecord::from(const BettiResult& res, int d) {
    OutputRecord rec;
    rec.g = res.curve.g;
    rec.b = res.field == FieldCase::Real ? res.curve.b : std::nullopt;
    rec.r = res.r;
    rec.d = d;
    rec.field = res.field;
    rec.pipeline = res.pipeline;
    rec.poly = res.poly;
    rec.engine_version = kEngineVersion;
    return rec;
}

namespace {

ojson params_json(const OutputRecord& rec) {
    ojson p;
    p["g"] = rec.g;
    p["b"] = rec.b ? ojson(*rec.b) : ojson(nullptr);
    p["r"] = rec.r;
    p["d"] = rec.d;
    p["field"] = to_string(rec.field);
    return p;
}

ojson record_json(const OutputRecord& rec) {
    ojson j;
    j["params"] = params_json(rec);
    if (!rec.ok()) {
        j["error"] = rec.error;
        return j;
    }
    ojson poly = ojson::array();
    for (const auto& [k, c] : rec.poly.terms()) poly.push_back(ojson::array({k, c.to_short_string()}));
    j["poly"] = std::move(poly);
    j["pipeline"] = to_string(rec.pipeline);
    j["engine_version"] = rec.engine_version;
    if (rec.wall_ms) j["wall_ms"] = *rec.wall_ms;
    return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
    OutputRecord rec;
    try {
        const auto& p = j.at("params");
        rec.g = p.at("g").get<int>();
        if (!p.at("b").is_null()) rec.b = p.at("b").get<int>();
        rec.r = p.at("r").get<int>();
        rec.d = p.at("d").get<int>();
        rec.field = parse_field_case(p.at("field").get<std::string>());
        if (j.contains("error")) {
            rec.error = j.at("error").get<std::string>();
            return rec;
        }
        std::vector<Rational> coeffs;
        for (const auto& term : j.at("poly")) {
            int k = term.at(0).get<int>();
            if (k < 0) throw InvalidInput("negative exponent in poly");
            if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(k + 1);
            coeffs[k] = Rational::parse(term.at(1).get<std::string>());
        }
        rec.poly = UPoly(std::move(coeffs));
        rec.pipeline = parse_pipeline(j.at("pipeline").get<std::string>());
        rec.engine_version = j.at("engine_version").get<std::string>();
        if (j.contains("wall_ms")) rec.wall_ms = j.at("wall_ms").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed record: ") + e.what());
    }
    return rec;
}

std::string latex_coef(const Rational& c) {
    if (c.is_integer()) return c.to_short_string();
    std::string s = c.to_short_string();
    auto slash = s.find('/');
    bool neg = s[0] == '-';
    std::string num = s.substr(neg ? 1 : 0, slash - (neg ? 1 : 0));
    return std::string(neg ? "-" : "") + "\\frac{" + num + "}{" + s.substr(slash + 1) + "}";
}

std::string t_power(int k) {
    if (k == 0) return "";
    if (k == 1) return "t";
    return "t^{" + std::to_string(k) + "}";
}

// Integer content of p with the sign of its leading coefficient.
Rational signed_content(const UPoly& p) {
    std::int64_t g = 0;
    for (const auto& c : p.coefficients()) {
        if (c.is_zero()) continue;
        if (!c.is_integer()) return Rational(1);
        mpz_class v = c.to_mpq().get_num();
        if (!v.fits_slong_p()) return Rational(1);
        g = std::gcd(g, std::abs(v.get_si()));
    }
    if (g == 0) return Rational(1);
    Rational lead = p.coefficient(p.degree());
    return lead.sign() < 0 ? Rational(-g) : Rational(g);
}

}  // namespace

std::string render_json(const OutputRecord& rec) { return record_json(rec).dump() + "\n"; }

OutputRecord parse_json_record(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return record_from_json(j);
}

std::vector<OutputRecord> parse_json_table(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_array()) throw InvalidInput("expected a JSON array of records");
    std::vector<OutputRecord> out;
    for (const auto& item : j) out.push_back(record_from_json(item));
    return out;
}

std::string latex_poly(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        std::string coef = latex_coef(mag);
        if (k == 0) {
            out += coef;
        } else {
            if (!mag.is_one()) out += coef + " ";
            out += t_power(k);
        }
    }
    return out;
}

std::string render_text(const OutputRecord& rec) {
    return rec.ok() ? rec.poly.to_string() : "error: " + rec.error;
}

std::string render_latex(const OutputRecord& rec) {
    if (!rec.ok()) return "\\text{error}";
    if (rec.field != FieldCase::Real || !rec.b || rec.poly.is_zero()) return latex_poly(rec.poly);
    UPoly rest;
    try {
        rest = exact_divide(rec.poly, divisibility_factor(rec.g, *rec.b));
    } catch (const NotDivisible&) {
        return latex_poly(rec.poly);
    }
    Rational scalar = Rational(std::int64_t{1} << *rec.b);
    int k = rest.low_degree();
    rest = exact_divide(rest, UPoly::monomial(Rational(1), k));
    int m = rec.g;
    const UPoly one_minus_t{1, -1};
    while (rest.degree() > 0 && rest.evaluate(Rational(1)).is_zero()) {
        rest = exact_divide(rest, one_minus_t);
        ++m;
    }
    Rational content = signed_content(rest);
    scalar *= content;
    rest = rest * (Rational(1) / content);

    std::string out;
    if (rest.degree() == 0) {
        scalar *= rest.coefficient(0);
        rest = UPoly();
    }
    if (scalar == Rational(-1)) {
        out = "-";
    } else if (!scalar.is_one()) {
        out = latex_coef(scalar) + " ";
    }
    if (k > 0) out += t_power(k) + " ";
    if (m > 0) out += m == 1 ? "(1-t) " : "(1-t)^{" + std::to_string(m) + "} ";
    if (!rest.is_zero()) out += "\\left(" + latex_poly(rest) + "\\right)";
    while (!out.empty() && out.back() == ' ') out.pop_back();
    if (out.empty() || out == "-") out += "1";
    return out;
}

std::string render_single(const OutputRecord& rec, OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return render_json(rec);
        case OutputFormat::Text: return render_text(rec) + "\n";
        case OutputFormat::Latex: return render_latex(rec) + "\n";
        case OutputFormat::Csv: return render_table({rec}, f);
    }
    return "";
}

std::string render_table(const std::vector<OutputRecord>& recs, OutputFormat f) {
    std::ostringstream os;
    switch (f) {
        case OutputFormat::Json: {
            // One record per line keeps large tables diffable.
            os << "[";
            for (std::size_t i = 0; i < recs.size(); ++i) os << (i ? ",\n " : "\n ") << record_json(recs[i]).dump();
            os << (recs.empty() ? "]\n" : "\n]\n");
            break;
        }
        case OutputFormat::Csv:
            os << "g,b,r,d,field,pipeline,poly,error\n";
            for (const auto& r : recs) {
                os << r.g << ',' << (r.b ? std::to_string(*r.b) : "") << ',' << r.r << ',' << r.d << ','
                   << to_string(r.field) << ',' << (r.ok() ? to_string(r.pipeline) : "") << ','
                   << (r.ok() ? r.poly.to_string() : "") << ",\"";
                for (char c : r.error) os << (c == '"' ? "\"\"" : std::string(1, c));
                os << "\"\n";
            }
            break;
        case OutputFormat::Latex:
            os << "\\begin{tabular}{rrrl}\n$g$ & $b$ & $r$ & $P_t$ \\\\\n\\hline\n";
            for (const auto& r : recs)
                os << r.g << " & " << (r.b ? std::to_string(*r.b) : "--") << " & " << r.r << " & $"
                   << render_latex(r) << "$ \\\\\n";
            os << "\\end{tabular}\n";
            break;
        case OutputFormat::Text:
            for (const auto& r : recs) {
                os << "g=" << r.g;
                if (r.b) os << " b=" << *r.b;
                os << " r=" << r.r << " d=" << r.d << " " << to_string(r.field) << ": " << render_text(r) << "\n";
            }
            break;
    }
    return os.str();
}

}  // namespace realhiggs
