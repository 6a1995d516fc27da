#include "qwalk/json_io.hpp"

#include <fstream>
#include <utility>

namespace qwalk {

namespace {

Json component_to_json(const Scalar& s) {
    if (s.backend() == Backend::Exact) {
        return Json::array({rational_string(s.exact_re()), rational_string(s.exact_im())});
    }
    return Json::array({s.float_re(), s.float_im()});
}

Scalar part_pair(const Json& re, const Json& im) {
    if (re.is_string() && im.is_string()) {
        return Scalar::exact(parse_rational(re.get<std::string>()),
                             parse_rational(im.get<std::string>()));
    }
    if (re.is_number() && im.is_number()) {
        return Scalar::floating(re.get<double>(), im.get<double>());
    }
    throw std::invalid_argument("scalar parts must be two strings or two numbers");
}

LatticePoint point_from_json(const Json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("lattice point must be an integer array");
    }
    LatticePoint x;
    x.reserve(j.size());
    for (const auto& c : j) {
        if (!c.is_number_integer()) {
            throw std::invalid_argument("lattice point must be an integer array");
        }
        x.push_back(c.get<std::int32_t>());
    }
    return x;
}

int dim_field(const Json& j) {
    if (!j.contains("d") || !j.at("d").is_number_integer()) {
        throw std::invalid_argument("missing integer field \"d\"");
    }
    int d = j.at("d").get<int>();
    if (d < 1) {
        throw std::invalid_argument("\"d\" must be >= 1");
    }
    return d;
}

Backend backend_field(const Json& j) {
    if (!j.contains("backend") || !j.at("backend").is_string()) {
        throw std::invalid_argument("missing string field \"backend\"");
    }
    const auto s = j.at("backend").get<std::string>();
    if (s == "exact") {
        return Backend::Exact;
    }
    if (s == "float") {
        return Backend::Float;
    }
    throw std::invalid_argument("backend must be \"exact\" or \"float\"");
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    return component_to_json(s);
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) {
        return Scalar::exact(parse_rational(j.get<std::string>()));
    }
    if (j.is_number()) {
        return Scalar::floating(j.get<double>());
    }
    if (j.is_array() && j.size() == 2) {
        return part_pair(j[0], j[1]);
    }
    throw std::invalid_argument("scalar must be [re, im], a string, or a number");
}

Json state_to_json(const FiniteState& s) {
    Json out;
    out["d"] = s.dim();
    out["backend"] = to_string(s.backend());
    Json entries = Json::array();
    for (const LatticePoint& x : s.support_sorted()) {
        const ChiralVector* v = s.lookup(x);
        Json amp = Json::array();
        for (const Scalar& a : v->amps()) {
            amp.push_back(component_to_json(a));
        }
        entries.push_back(Json{{"x", x}, {"amp", std::move(amp)}});
    }
    out["entries"] = std::move(entries);
    return out;
}

FiniteState state_from_json(const Json& j) {
    const int d = dim_field(j);
    const Backend b = backend_field(j);
    FiniteState out(d, b);
    if (!j.contains("entries") || !j.at("entries").is_array()) {
        throw std::invalid_argument("missing array field \"entries\"");
    }
    for (const auto& e : j.at("entries")) {
        LatticePoint x = point_from_json(e.at("x"));
        const auto& amp = e.at("amp");
        if (!amp.is_array() || amp.size() != static_cast<std::size_t>(2 * d)) {
            throw std::invalid_argument("\"amp\" must hold 2d scalars");
        }
        std::vector<Scalar> comps;
        comps.reserve(amp.size());
        for (const auto& a : amp) {
            Scalar s = scalar_from_json(a);
            if (s.backend() != b) {
                throw BackendError("amplitude does not match the declared backend");
            }
            comps.push_back(std::move(s));
        }
        out.set(x, ChiralVector(std::move(comps)));
    }
    return out;
}

Json measure_to_json(const Measure& m) {
    Json out;
    out["d"] = m.dim();
    Json entries = Json::array();
    for (const LatticePoint& x : m.support_sorted()) {
        const Scalar& v = m.entries().at(x);
        Json value = v.backend() == Backend::Exact ? Json(rational_string(v.exact_re()))
                                                   : Json(v.float_re());
        entries.push_back(Json{{"x", x}, {"value", std::move(value)}});
    }
    out["entries"] = std::move(entries);
    return out;
}

Measure measure_from_json(const Json& j) {
    const int d = dim_field(j);
    if (!j.contains("entries") || !j.at("entries").is_array()) {
        throw std::invalid_argument("missing array field \"entries\"");
    }
    const auto& entries = j.at("entries");
    // The schema carries no backend tag: infer it from the first value.
    Backend b = Backend::Exact;
    if (!entries.empty() && entries.front().at("value").is_number()) {
        b = Backend::Float;
    }
    Measure out(d, b);
    for (const auto& e : entries) {
        Scalar v = scalar_from_json(e.at("value"));
        if (v.backend() != b) {
            throw BackendError("measure values mix backends");
        }
        out.set(point_from_json(e.at("x")), v);
    }
    return out;
}

Json coin_to_json(const Coin& c) {
    Json out;
    out["d"] = c.dim();
    out["kind"] = c.kind();
    Json entries = Json::array();
    for (int i = 0; i < c.size(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < c.size(); ++k) {
            row.push_back(component_to_json(c.at(i, k)));
        }
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

Coin coin_from_json(const Json& j, double tol) {
    const int d = dim_field(j);
    std::string kind = "custom";
    if (j.contains("kind")) {
        kind = j.at("kind").get<std::string>();
    }
    if (!j.contains("entries") || !j.at("entries").is_array()) {
        throw std::invalid_argument("missing array field \"entries\"");
    }
    ScalarMatrix entries;
    for (const auto& row : j.at("entries")) {
        std::vector<Scalar> r;
        if (!row.is_array()) {
            throw std::invalid_argument("coin rows must be arrays");
        }
        r.reserve(row.size());
        for (const auto& e : row) {
            r.push_back(scalar_from_json(e));
        }
        entries.push_back(std::move(r));
    }
    return Coin(d, std::move(entries), std::move(kind), tol);
}

Json weights_to_json(const WeightSequence& w) {
    Json out;
    out["d"] = w.dim();
    Json ws = Json::array();
    for (const LatticePoint& u : w.support_sorted()) {
        ws.push_back(Json{{"u", u}, {"w", component_to_json(w.entries().at(u))}});
    }
    out["weights"] = std::move(ws);
    return out;
}

WeightSequence weights_from_json(const Json& j) {
    const int d = dim_field(j);
    if (!j.contains("weights") || !j.at("weights").is_array()) {
        throw std::invalid_argument("missing array field \"weights\"");
    }
    const auto& ws = j.at("weights");
    Backend b = Backend::Exact;
    if (!ws.empty()) {
        b = scalar_from_json(ws.front().at("w")).backend();
    }
    WeightSequence out(d, b);
    for (const auto& e : ws) {
        Scalar w = scalar_from_json(e.at("w"));
        if (w.backend() != b) {
            throw BackendError("weights mix backends");
        }
        out.set(point_from_json(e.at("u")), w);
    }
    return out;
}

Json poly_to_json(const LaurentPoly& p) {
    Json out;
    out["d"] = p.dim();
    Json terms = Json::array();
    for (const LatticePoint& exp : p.exponents_sorted()) {
        terms.push_back(Json{{"exp", exp}, {"coeff", component_to_json(p.coeff(exp))}});
    }
    out["terms"] = std::move(terms);
    return out;
}

LaurentPoly poly_from_json(const Json& j) {
    const int d = dim_field(j);
    if (!j.contains("terms") || !j.at("terms").is_array()) {
        throw std::invalid_argument("missing array field \"terms\"");
    }
    const auto& terms = j.at("terms");
    Backend b = Backend::Exact;
    if (!terms.empty()) {
        b = scalar_from_json(terms.front().at("coeff")).backend();
    }
    LaurentPoly out(d, b);
    for (const auto& t : terms) {
        Scalar c = scalar_from_json(t.at("coeff"));
        if (c.backend() != b) {
            throw BackendError("polynomial coefficients mix backends");
        }
        out.add_term(point_from_json(t.at("exp")), c);
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace qwalk
