#include "charq/json_io.hpp"

#include <limits>
#include <string>

namespace charq {

namespace {

const Int kInt64Min = std::numeric_limits<long long>::min();
const Int kInt64Max = std::numeric_limits<long long>::max();

Json require(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string(what) + ": missing field \"" + key + "\"");
    return j.at(key);
}

int json_to_small_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw InputError(std::string(what) + ": expected an integer");
    const long long v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw InputError(std::string(what) + ": value out of int range");
    return static_cast<int>(v);
}

std::vector<int> json_to_int_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(json_to_small_int(e, what));
    return out;
}

}  // namespace

Json int_to_json(const Int& v) {
    if (v >= kInt64Min && v <= kInt64Max) return Json(v.convert_to<long long>());
    return Json(v.str());
}

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError("not a decimal integer: \"" + j.get<std::string>() + "\"");
        }
    }
    throw InputError("expected an integer or a decimal string");
}

Json laurent_to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [alpha, c] : p.terms())
        out.push_back({{"coeff", c.str()}, {"alpha", alpha}});
    return out;
}

LaurentPoly laurent_from_json(const Json& j, int expected_vars) {
    if (!j.is_array()) throw InputError("polynomial: expected an array of terms");
    int vars = expected_vars;
    LaurentPoly out(std::max(vars, 0));
    for (const auto& term : j) {
        const Exponents alpha = json_to_int_vector(require(term, "alpha", "polynomial term"),
                                                   "polynomial term alpha");
        if (vars < 0) {
            vars = static_cast<int>(alpha.size());
            out = LaurentPoly(vars);
        }
        if (static_cast<int>(alpha.size()) != vars)
            throw InputError("polynomial: inconsistent exponent lengths");
        out.add_term(alpha, json_to_int(require(term, "coeff", "polynomial term")));
    }
    return out;
}

Json character_series_to_json(const CharacterSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(laurent_to_json(c));
    return {{"vars", s.num_vars()}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

CharacterSeries character_series_from_json(const Json& j) {
    const int vars = json_to_small_int(require(j, "vars", "series"), "series vars");
    const int order = json_to_small_int(require(j, "order", "series"), "series order");
    if (vars < 0 || order < 0) throw InputError("series: vars and order must be nonnegative");
    const Json coeffs = require(j, "coeffs", "series");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
        throw InputError("series: coeffs must hold exactly order + 1 entries");
    CharacterSeries out(vars, order);
    for (int d = 0; d <= order; ++d) out.coeff(d) = laurent_from_json(coeffs.at(d), vars);
    return out;
}

Json int_series_to_json(const IntSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
    return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

IntSeries int_series_from_json(const Json& j) {
    const int order = json_to_small_int(require(j, "order", "series"), "series order");
    if (order < 0) throw InputError("series: order must be nonnegative");
    const Json coeffs = require(j, "coeffs", "series");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
        throw InputError("series: coeffs must hold exactly order + 1 entries");
    std::vector<Int> values;
    values.reserve(coeffs.size());
    for (const auto& c : coeffs) values.push_back(json_to_int(c));
    return IntSeries(std::move(values));
}

Json nice_rational_to_json(const NiceRational& f) {
    Json numerator = Json::array();
    for (const auto& t : f.numerator())
        numerator.push_back({{"coeff", int_to_json(t.coeff)}, {"alpha", t.alpha}, {"qpow", t.qpow}});
    Json denominator = Json::array();
    for (const auto& fac : f.denominator())
        denominator.push_back({{"alpha", fac.alpha}, {"qpow", fac.qpow}, {"mult", fac.mult}});
    return {{"vars", f.num_vars()},
            {"numerator", std::move(numerator)},
            {"denominator", std::move(denominator)}};
}

NiceRational nice_rational_from_json(const Json& j) {
    const int vars = json_to_small_int(require(j, "vars", "rational"), "rational vars");
    if (vars < 0) throw InputError("rational: vars must be nonnegative");
    std::vector<NumTerm> numerator;
    for (const auto& t : require(j, "numerator", "rational")) {
        NumTerm term;
        term.coeff = json_to_int(require(t, "coeff", "numerator term"));
        term.alpha = json_to_int_vector(require(t, "alpha", "numerator term"), "numerator alpha");
        term.qpow = json_to_small_int(require(t, "qpow", "numerator term"), "numerator qpow");
        numerator.push_back(std::move(term));
    }
    std::vector<GeomFactor> denominator;
    for (const auto& fj : require(j, "denominator", "rational")) {
        GeomFactor fac;
        fac.alpha = json_to_int_vector(require(fj, "alpha", "denominator factor"),
                                       "denominator alpha");
        fac.qpow = json_to_small_int(require(fj, "qpow", "denominator factor"),
                                     "denominator qpow");
        fac.mult = fj.contains("mult")
                       ? json_to_small_int(fj.at("mult"), "denominator mult")
                       : 1;
        denominator.push_back(std::move(fac));
    }
    try {
        return NiceRational(vars, std::move(numerator), std::move(denominator));
    } catch (const Error& e) {
        throw InputError(std::string("rational: ") + e.what());
    }
}

Json group_to_json(const GroupSpec& g) {
    Json out;
    out["n"] = group_vars(g);
    if (std::holds_alternative<FullGL>(g)) {
        out["type"] = "gl";
    } else if (std::holds_alternative<SpecialLinear>(g)) {
        out["type"] = "sl";
    } else if (const auto* torus = std::get_if<DiagonalTorus>(&g)) {
        out["type"] = "torus";
        out["weights"] = torus->weights;
    } else if (std::holds_alternative<MaximalUnipotent>(g)) {
        out["type"] = "unipotent";
    } else {
        const auto& cyclic = std::get<CyclicDiagonal>(g);
        out["type"] = "cyclic";
        out["order"] = cyclic.order;
        out["exponents"] = cyclic.exponents;
    }
    return out;
}

GroupSpec group_from_json(const Json& j) {
    const Json type_j = require(j, "type", "group");
    if (!type_j.is_string()) throw InputError("group: type must be a string");
    const std::string type = type_j.get<std::string>();
    const int n = json_to_small_int(require(j, "n", "group"), "group n");

    GroupSpec g;
    if (type == "gl") {
        g = FullGL{n};
    } else if (type == "sl") {
        g = SpecialLinear{n};
    } else if (type == "unipotent") {
        g = MaximalUnipotent{n};
    } else if (type == "torus") {
        DiagonalTorus torus{n, {}};
        for (const auto& w : require(j, "weights", "torus group"))
            torus.weights.push_back(json_to_int_vector(w, "torus weight"));
        g = std::move(torus);
    } else if (type == "cyclic") {
        CyclicDiagonal cyclic;
        cyclic.n = n;
        const Json order = require(j, "order", "cyclic group");
        if (!order.is_number_integer()) throw InputError("cyclic group: order must be an integer");
        cyclic.order = order.get<long long>();
        cyclic.exponents =
            json_to_int_vector(require(j, "exponents", "cyclic group"), "cyclic exponents");
        g = std::move(cyclic);
    } else {
        throw InputError("group: unknown type \"" + type + "\"");
    }
    try {
        validate_group(g);
    } catch (const Error& e) {
        throw InputError(std::string("group: ") + e.what());
    }
    return g;
}

Json schur_expansion_to_json(const SchurExpansion& e) {
    Json out = Json::array();
    for (const auto& term : e)
        out.push_back({{"coeff", int_to_json(term.coeff)}, {"lam", term.lam}});
    return out;
}

SchurExpansion schur_expansion_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expansion: expected an array of terms");
    SchurExpansion out;
    for (const auto& t : j) {
        SchurTerm term;
        term.coeff = json_to_int(require(t, "coeff", "expansion term"));
        term.lam = json_to_int_vector(require(t, "lam", "expansion term"), "expansion lam");
        out.push_back(std::move(term));
    }
    return out;
}

Json decomposition_to_json(const Decomposition& d) {
    Json a = Json::array();
    for (const auto& entry : d.a)
        a.push_back({{"lam", entry.lam}, {"qpow", entry.qpow}, {"mult", entry.mult}});
    Json terms = Json::array();
    for (const auto& term : d.terms)
        terms.push_back(
            {{"coeff", int_to_json(term.coeff)}, {"lam", term.lam}, {"qpow", term.qpow}});
    return {{"a", std::move(a)}, {"terms", std::move(terms)}};
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition out;
    for (const auto& e : require(j, "a", "decomposition")) {
        AEntry entry;
        entry.lam = json_to_int_vector(require(e, "lam", "decomposition entry"), "entry lam");
        entry.qpow = json_to_small_int(require(e, "qpow", "decomposition entry"), "entry qpow");
        entry.mult = json_to_small_int(require(e, "mult", "decomposition entry"), "entry mult");
        out.a.push_back(std::move(entry));
    }
    for (const auto& t : require(j, "terms", "decomposition")) {
        DecompTerm term;
        term.coeff = json_to_int(require(t, "coeff", "decomposition term"));
        term.lam = json_to_int_vector(require(t, "lam", "decomposition term"), "term lam");
        term.qpow = json_to_small_int(require(t, "qpow", "decomposition term"), "term qpow");
        out.terms.push_back(std::move(term));
    }
    return out;
}

Json fit_report_to_json(const std::optional<FittedForm>& fit) {
    if (!fit) return {{"fit", false}};
    Json numerator = Json::array();
    for (const auto& c : fit->numerator) numerator.push_back(int_to_json(c));
    return {{"fit", true},
            {"numerator", std::move(numerator)},
            {"denominator_degrees", fit->denominator_degrees},
            {"verified_to", fit->verified_to}};
}

Json recurrence_to_json(const RecurrenceGuess& guess) {
    Json out;
    out["found"] = guess.found;
    if (!guess.found) return out;
    out["order"] = guess.order;
    Json poly = Json::array();
    for (const auto& coeff : guess.denom_poly) {
        if (denominator(coeff) == 1)
            poly.push_back(numerator(coeff).str());
        else
            poly.push_back(numerator(coeff).str() + "/" + denominator(coeff).str());
    }
    out["denominator_poly"] = std::move(poly);
    return out;
}

}  // namespace charq
