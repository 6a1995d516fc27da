#include "qwalk/evolution.hpp"
#include "qwalk/json_io.hpp"
#include "qwalk/stationary.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

using namespace qwalk;

namespace {

struct Options {
    int dim = 0;
    std::string coin = "grover";
    std::string p;
    std::string coin_file;
    std::string state_file;
    std::string weights_file;
    int steps = -1;  // resolved per command after parsing
    int ksamples = 100;
    double tol = 1e-12;
    std::string mode;
    bool normalize = false;
    std::string emit = "measure";
    std::uint64_t seed = 0;
};

// "[sign]digits[.digits]" as an exact rational, e.g. "0.35" -> 7/20.
Rational decimal_to_rational(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    int frac = 0;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (seen_dot) {
                throw std::invalid_argument("invalid decimal literal: '" + s + "'");
            }
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw std::invalid_argument("invalid decimal literal: '" + s + "'");
        }
        digits += s[i];
        if (seen_dot) {
            ++frac;
        }
    }
    if (digits.empty()) {
        throw std::invalid_argument("invalid decimal literal: '" + s + "'");
    }
    Rational r{BigInt(digits)};
    for (int j = 0; j < frac; ++j) {
        r /= 10;
    }
    return neg ? Rational(-r) : r;
}

struct PValue {
    double value = 0.0;
    std::optional<Rational> exact;
};

PValue parse_p_flag(const std::string& s) {
    if (s.find('/') != std::string::npos) {
        Rational r = parse_rational(s);
        return {r.convert_to<double>(), r};
    }
    PValue out;
    out.value = std::stod(s);  // throws on junk
    try {
        out.exact = decimal_to_rational(s);
    } catch (const std::invalid_argument&) {
        // scientific notation etc.: float-only
    }
    return out;
}

Coin coin_to_backend(const Coin& c, Backend b) {
    if (c.backend() == b) {
        return c;
    }
    if (b == Backend::Float) {
        return c.to_float();
    }
    throw BackendError("cannot promote a float coin to the exact backend");
}

FiniteState state_to_backend(const FiniteState& s, Backend b) {
    if (s.backend() == b) {
        return s;
    }
    if (b == Backend::Float) {
        return s.to_float();
    }
    throw BackendError("cannot promote a float state to the exact backend");
}

WeightSequence weights_to_backend(const WeightSequence& w, Backend b) {
    if (w.backend() == b) {
        return w;
    }
    if (b == Backend::Float) {
        WeightSequence out(w.dim(), Backend::Float);
        for (const auto& [u, s] : w.entries()) {
            out.set(u, s.to_float());
        }
        return out;
    }
    throw BackendError("cannot promote float weights to the exact backend");
}

// Precedence: explicit --mode, then the state file's backend, then the
// coin-family default (exact for grover, float otherwise).
Backend resolve_backend(const Options& o, std::optional<Backend> state_backend,
                        std::optional<Backend> coin_file_backend) {
    if (o.mode == "exact") {
        return Backend::Exact;
    }
    if (o.mode == "float") {
        return Backend::Float;
    }
    if (state_backend) {
        return *state_backend;
    }
    if (o.coin == "grover") {
        return Backend::Exact;
    }
    if (o.coin == "custom" && coin_file_backend) {
        return *coin_file_backend;
    }
    return Backend::Float;
}

int resolved_dim(const Options& o) {
    if (o.coin == "watabe") {
        if (o.dim != 0 && o.dim != 2) {
            throw std::invalid_argument("the watabe family is defined on d = 2");
        }
        return 2;
    }
    if (o.dim < 1) {
        throw std::invalid_argument("--dim is required and must be >= 1");
    }
    return o.dim;
}

Coin build_coin(const Options& o, Backend b, const std::optional<Coin>& from_file) {
    if (o.coin == "grover") {
        return grover(resolved_dim(o), b);
    }
    if (o.coin == "watabe") {
        resolved_dim(o);  // rejects --dim other than 2
        if (o.p.empty()) {
            throw std::invalid_argument("--p is required for the watabe coin");
        }
        const PValue p = parse_p_flag(o.p);
        if (b == Backend::Exact) {
            if (!p.exact) {
                throw std::invalid_argument("--p must be a rational literal in exact mode");
            }
            return watabe_exact(*p.exact);
        }
        return watabe(p.value);
    }
    if (!from_file) {
        throw std::invalid_argument("--coin-file is required for --coin custom");
    }
    if (o.dim != 0 && o.dim != from_file->dim()) {
        throw std::invalid_argument("--dim does not match the coin file");
    }
    return coin_to_backend(*from_file, b);
}

// Closed-form eigenvalue-1 symbol for the selected family; nullopt for a
// custom coin.
std::optional<SymbolVector> build_eigenfunction(const Options& o, Backend b) {
    if (o.coin == "grover") {
        SymbolVector v = grover_eigenfunction(resolved_dim(o));
        return b == Backend::Float ? v.to_float() : v;
    }
    if (o.coin == "watabe") {
        resolved_dim(o);  // rejects --dim other than 2
        if (o.p.empty()) {
            throw std::invalid_argument("--p is required for the watabe coin");
        }
        const PValue p = parse_p_flag(o.p);
        if (b == Backend::Exact) {
            if (!p.exact) {
                throw std::invalid_argument("--p must be a rational literal in exact mode");
            }
            return watabe_eigenfunction_exact(*p.exact);
        }
        return watabe_eigenfunction(p.value);
    }
    return std::nullopt;
}

WeightSequence build_weights(const Options& o, int d, Backend b) {
    if (!o.weights_file.empty()) {
        WeightSequence w = weights_from_json(load_json_file(o.weights_file));
        if (w.dim() != d) {
            throw DimensionError("weight file dimension does not match the walk");
        }
        return weights_to_backend(w, b);
    }
    WeightSequence w(d, b);
    w.set(LatticePoint(static_cast<std::size_t>(d), 0), Scalar::one(b));
    return w;
}

void print_doc(const Json& doc) {
    std::cout << doc.dump(2) << "\n";
}

Json mass_json(const FiniteState& s) {
    const Scalar m = s.norm_sq();
    return m.backend() == Backend::Exact ? Json(rational_string(m.exact_re()))
                                         : Json(m.float_re());
}

int cmd_stationary(const Options& o) {
    if (o.coin == "custom") {
        throw std::invalid_argument(
            "stationary construction needs a closed-form family: grover or watabe");
    }
    const Backend b = resolve_backend(o, std::nullopt, std::nullopt);
    const SymbolVector eig = *build_eigenfunction(o, b);
    const StationaryAtom atom = inverse_fourier(eig);
    const WeightSequence w = build_weights(o, atom.dim(), b);
    const FiniteState psi = superpose(atom, w);

    Json doc;
    if (o.emit == "state" || o.emit == "both") {
        doc["state"] = state_to_json(psi);
    }
    if (o.emit == "measure" || o.emit == "both") {
        Measure m = measure_of(psi);
        if (o.normalize) {
            m = m.normalized();
        }
        doc["measure"] = measure_to_json(m);
    }
    print_doc(o.emit == "both" ? doc : doc.front());
    return 0;
}

int cmd_verify(const Options& o) {
    std::optional<FiniteState> loaded;
    if (!o.state_file.empty()) {
        loaded = state_from_json(load_json_file(o.state_file));
    }
    std::optional<Coin> file_coin;
    if (o.coin == "custom" && !o.coin_file.empty()) {
        file_coin = coin_from_json(load_json_file(o.coin_file), o.tol);
    }
    const Backend b = resolve_backend(
        o, loaded ? std::optional(loaded->backend()) : std::nullopt,
        file_coin ? std::optional(file_coin->backend()) : std::nullopt);
    const Coin coin = build_coin(o, b, file_coin);
    const std::optional<SymbolVector> eig = build_eigenfunction(o, b);

    FiniteState state(coin.dim(), b);
    if (loaded) {
        if (o.dim != 0 && loaded->dim() != o.dim) {
            throw DimensionError("--dim does not match the state file");
        }
        state = state_to_backend(*loaded, b);
    } else {
        if (!eig) {
            throw std::invalid_argument("a custom coin needs --state to verify");
        }
        state = superpose(inverse_fourier(*eig), build_weights(o, coin.dim(), b));
    }
    if (state.dim() != coin.dim()) {
        throw DimensionError("state and coin dimension mismatch");
    }

    const int steps = o.steps < 0 ? 5 : o.steps;
    Json report;
    report["d"] = coin.dim();
    report["coin"] = o.coin;
    report["mode"] = to_string(b);
    report["steps"] = steps;

    bool stationary_ok = true;
    Json residuals = Json::array();
    FiniteState cur = state;
    for (int n = 1; n <= steps; ++n) {
        cur = step(cur, coin);
        const Scalar d2 = state_distance_sq(cur, state);
        const double r = std::sqrt(std::max(0.0, d2.to_complex().real()));
        residuals.push_back(r);
        stationary_ok = stationary_ok && (b == Backend::Exact ? d2.is_zero() : r <= o.tol);
    }
    report["step_residuals"] = std::move(residuals);
    report["stationary"] = stationary_ok;

    bool symbolic_ok = true;
    if (eig && b == Backend::Exact && !loaded) {
        const bool res = symbolic_fixed_point_check(coin, *eig);
        report["symbolic_check"] = res;
        symbolic_ok = res;
    } else {
        report["symbolic_check"] = nullptr;
    }

    bool spectral_ok = true;
    if (eig) {
        double mx = 0.0;
        for (const auto& k : sample_wavevectors(coin.dim(), o.ksamples, o.seed)) {
            mx = std::max(mx, eigen_residual(coin, *eig, k));
        }
        report["eigen_residual_max"] = mx;
        spectral_ok = mx <= o.tol;
    } else {
        report["eigen_residual_max"] = nullptr;
    }
    report["ksamples"] = o.ksamples;
    report["seed"] = o.seed;
    report["tol"] = o.tol;

    const bool pass = stationary_ok && symbolic_ok && spectral_ok;
    report["pass"] = pass;
    print_doc(report);
    return pass ? 0 : 1;
}

int cmd_evolve(const Options& o) {
    const FiniteState loaded = state_from_json(load_json_file(o.state_file));
    if (o.dim != 0 && loaded.dim() != o.dim) {
        throw DimensionError("--dim does not match the state file");
    }
    std::optional<Coin> file_coin;
    if (o.coin == "custom" && !o.coin_file.empty()) {
        file_coin = coin_from_json(load_json_file(o.coin_file), o.tol);
    }
    Options oc = o;
    if (oc.dim == 0) {
        oc.dim = loaded.dim();
    }
    const Backend b = resolve_backend(
        o, loaded.backend(),
        file_coin ? std::optional(file_coin->backend()) : std::nullopt);
    const Coin coin = build_coin(oc, b, file_coin);
    FiniteState cur = state_to_backend(loaded, b);
    if (cur.dim() != coin.dim()) {
        throw DimensionError("state and coin dimension mismatch");
    }

    const int steps = o.steps < 0 ? 0 : o.steps;
    Json mass = Json::array();
    mass.push_back(mass_json(cur));
    for (int n = 1; n <= steps; ++n) {
        cur = step(cur, coin);
        mass.push_back(mass_json(cur));
    }

    Json doc;
    doc["d"] = cur.dim();
    doc["steps"] = steps;
    doc["mass"] = std::move(mass);
    doc["state"] = state_to_json(cur);
    print_doc(doc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coined quantum walks on Z^d: stationary states, their measures, and dynamics"};
    app.require_subcommand(1);
    Options o;

    CLI::App* c_st = app.add_subcommand(
        "stationary", "Build a stationary state and emit it and/or its measure");
    CLI::App* c_ve = app.add_subcommand(
        "verify", "Check stationarity dynamically, symbolically, and at sampled wavevectors");
    CLI::App* c_ev = app.add_subcommand("evolve", "Apply walk steps to a state from a file");

    for (CLI::App* c : {c_st, c_ve, c_ev}) {
        c->add_option("--dim", o.dim, "Lattice dimension d");
        c->add_option("--coin", o.coin, "Coin family: grover | watabe | custom")
            ->check(CLI::IsMember({"grover", "watabe", "custom"}));
        c->add_option("--p", o.p, "Watabe parameter in (0,1); decimal or num/den");
        c->add_option("--coin-file", o.coin_file, "Coin matrix JSON (for --coin custom)");
        c->add_option("--mode", o.mode, "Numeric backend: exact | float")
            ->check(CLI::IsMember({"exact", "float"}));
    }
    for (CLI::App* c : {c_st, c_ve}) {
        c->add_option("--weights", o.weights_file,
                      "Weight sequence JSON; default: weight 1 at the origin");
    }
    c_st->add_flag("--normalize", o.normalize, "Divide the measure by its total mass");
    c_st->add_option("--emit", o.emit, "Output selection: state | measure | both")
        ->check(CLI::IsMember({"state", "measure", "both"}));

    c_ve->add_option("--state", o.state_file,
                     "State JSON to verify; default: the built-in stationary state");
    c_ve->add_option("--steps", o.steps, "Walk steps to test (default 5)")
        ->check(CLI::NonNegativeNumber);
    c_ve->add_option("--ksamples", o.ksamples, "Wavevector samples for the spectral check")
        ->check(CLI::NonNegativeNumber);
    c_ve->add_option("--tol", o.tol, "Float-mode tolerance");
    c_ve->add_option("--seed", o.seed, "Wavevector sampling seed");

    c_ev->add_option("--state", o.state_file, "Input state JSON")->required();
    c_ev->add_option("--steps", o.steps, "Walk steps to apply (default 0)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_st->parsed()) {
            return cmd_stationary(o);
        }
        if (c_ve->parsed()) {
            return cmd_verify(o);
        }
        return cmd_evolve(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
