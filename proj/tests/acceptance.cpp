// Acceptance suite: eight numbered checks, one PASS/FAIL line each, exit 0
// only if every check passes. Expected values are frozen literals, never
// recomputed through the code under test.

#include "qwalk/evolution.hpp"
#include "qwalk/json_io.hpp"
#include "qwalk/stationary.hpp"

#include "fixtures.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace qwalk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QWALK_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed");
    }
    CliResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Rational measure_value(const Json& doc, const LatticePoint& x) {
    for (const auto& e : doc.at("entries")) {
        if (e.at("x").get<std::vector<std::int32_t>>() == x) {
            if (!e.at("value").is_string()) {
                throw std::runtime_error("expected an exact value");
            }
            return parse_rational(e.at("value").get<std::string>());
        }
    }
    throw std::runtime_error("measure point missing");
}

// --- criterion 1: normalized square-lattice measure through the CLI -------

bool check_square_measure(std::string& detail) {
    const auto t0 = Clock::now();
    const CliResult r = run_cli("stationary --dim 2 --coin grover --normalize");
    const double dt = seconds_since(t0);
    if (r.code != 0) {
        detail = "exit code " + std::to_string(r.code);
        return false;
    }
    const Json doc = Json::parse(r.out);
    bool ok = doc.at("entries").size() == 9;
    ok = ok && measure_value(doc, {0, 0}) == Rational(1, 3);
    Rational total = measure_value(doc, {0, 0});
    for (const auto& x : {LatticePoint{0, 1}, LatticePoint{0, -1}, LatticePoint{1, 0},
                          LatticePoint{-1, 0}}) {
        ok = ok && measure_value(doc, x) == Rational(1, 8);
        total += Rational(1, 8);
    }
    for (const auto& x : {LatticePoint{1, 1}, LatticePoint{1, -1}, LatticePoint{-1, 1},
                          LatticePoint{-1, -1}}) {
        ok = ok && measure_value(doc, x) == Rational(1, 24);
        total += Rational(1, 24);
    }
    ok = ok && total == Rational(1);
    ok = ok && dt < 1.0;
    std::ostringstream os;
    os << dt << " s";
    detail = os.str();
    return ok;
}

// --- criterion 2: normalized cubic-lattice measure through the CLI --------

bool check_cubic_measure(std::string& detail) {
    const auto t0 = Clock::now();
    const CliResult r = run_cli("stationary --dim 3 --coin grover --normalize");
    const double dt = seconds_since(t0);
    if (r.code != 0) {
        detail = "exit code " + std::to_string(r.code);
        return false;
    }
    const Json doc = Json::parse(r.out);
    bool ok = doc.at("entries").size() == 27;
    Rational total = 0;
    int counts[4] = {0, 0, 0, 0};
    for (int a = -1; a <= 1; ++a) {
        for (int b = -1; b <= 1; ++b) {
            for (int c = -1; c <= 1; ++c) {
                const int ones = std::abs(a) + std::abs(b) + std::abs(c);
                const Rational expect = ones == 0   ? Rational(2, 9)
                                        : ones == 1 ? Rational(2, 27)
                                        : ones == 2 ? Rational(5, 216)
                                                    : Rational(1, 144);
                const Rational got = measure_value(doc, {a, b, c});
                ok = ok && got == expect;
                total += got;
                ++counts[ones];
            }
        }
    }
    ok = ok && total == Rational(1);
    ok = ok && counts[0] == 1 && counts[1] == 6 && counts[2] == 12 && counts[3] == 8;
    ok = ok && dt < 1.0;
    std::ostringstream os;
    os << dt << " s";
    detail = os.str();
    return ok;
}

// --- criterion 3: amplitude tables reproduced bit-exactly -----------------

bool check_amplitude_tables(std::string& detail) {
    const StationaryAtom atom2 = inverse_fourier(grover_eigenfunction(2));
    const StationaryAtom table2 = fixtures::square_atom(Scalar::one(Backend::Exact));
    if (atom2.support_size() != 9) {
        detail = "square support != 9";
        return false;
    }
    for (const LatticePoint& c : table2.support_sorted()) {
        if (!(atom2.get(c) == table2.get(c))) {
            detail = "square table mismatch";
            return false;
        }
    }
    const StationaryAtom atom3 = inverse_fourier(grover_eigenfunction(3));
    const StationaryAtom table3 = fixtures::cubic_atom();
    if (atom3.support_size() != 27) {
        detail = "cubic support != 27";
        return false;
    }
    for (const LatticePoint& c : table3.support_sorted()) {
        if (!(atom3.get(c) == table3.get(c))) {
            detail = "cubic table mismatch";
            return false;
        }
    }
    detail = "9 + 27 vectors";
    return true;
}

// --- criterion 4: random superpositions are exact 10-step fixed points ----

bool check_fixed_point_property(std::string& detail) {
    const auto t0 = Clock::now();
    std::mt19937_64 eng(2026);
    auto rand_rational = [&]() {
        return Rational(static_cast<long>(eng() % 11) - 5,
                        static_cast<long>(eng() % 6) + 1);
    };
    for (int d = 1; d <= 4; ++d) {
        const StationaryAtom atom = inverse_fourier(grover_eigenfunction(d));
        const Coin g = grover(d);
        for (int rep = 0; rep < 50; ++rep) {
            WeightSequence w(d, Backend::Exact);
            const int pts = 1 + static_cast<int>(eng() % 5);
            for (int i = 0; i < pts; ++i) {
                LatticePoint u(static_cast<std::size_t>(d));
                for (auto& c : u) {
                    c = static_cast<std::int32_t>(eng() % 7) - 3;
                }
                w.set(u, Scalar::exact(rand_rational(), rand_rational()));
            }
            if (w.empty()) {
                w.set(LatticePoint(static_cast<std::size_t>(d), 0),
                      Scalar::one(Backend::Exact));
            }
            const FiniteState s = superpose(atom, w);
            FiniteState cur = s;
            for (int n = 1; n <= 10; ++n) {
                cur = step(cur, g);
                if (!(cur == s)) {
                    std::ostringstream os;
                    os << "d=" << d << " rep=" << rep << " n=" << n;
                    detail = os.str();
                    return false;
                }
            }
        }
    }
    const double dt = seconds_since(t0);
    std::ostringstream os;
    os << "200 sequences, " << dt << " s";
    detail = os.str();
    return dt < 30.0;
}

// --- criterion 5: spectral residuals and the symbolic identity ------------

bool check_spectral_residuals(std::string& detail) {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int d = 1; d <= 6; ++d) {
        const Coin g = grover(d);
        const SymbolVector v = grover_eigenfunction(d);
        for (const auto& k : sample_wavevectors(d, 200, 1)) {
            worst = std::max(worst, eigen_residual(g, v, k));
        }
    }
    if (worst > 1e-12) {
        std::ostringstream os;
        os << "max residual " << worst;
        detail = os.str();
        return false;
    }
    for (int d = 1; d <= 4; ++d) {
        if (!symbolic_fixed_point_check(grover(d), grover_eigenfunction(d))) {
            detail = "symbolic identity failed at d=" + std::to_string(d);
            return false;
        }
    }
    const double dt = seconds_since(t0);
    std::ostringstream os;
    os << "max residual " << worst << ", " << dt << " s";
    detail = os.str();
    return dt < 10.0;
}

// --- criterion 6: the two-parameter family ---------------------------------

bool check_two_parameter_family(std::string& detail) {
    double worst = 0.0;
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const Coin c = watabe(p);
        const SymbolVector v = watabe_eigenfunction(p);
        for (const auto& k : sample_wavevectors(2, 200, 2)) {
            worst = std::max(worst, eigen_residual(c, v, k));
        }
    }
    if (worst > 1e-12) {
        std::ostringstream os;
        os << "max residual " << worst;
        detail = os.str();
        return false;
    }
    const Coin w = watabe(0.5);
    const Coin g = grover(2, Backend::Float);
    double entry_diff = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            entry_diff = std::max(entry_diff,
                                  std::abs(w.at(i, j).to_complex() - g.at(i, j).to_complex()));
        }
    }
    std::ostringstream os;
    os << "max residual " << worst << ", p=1/2 entry gap " << entry_diff;
    detail = os.str();
    return entry_diff <= 1e-15;
}

// --- criterion 7: mass conservation under long evolutions ------------------

FiniteState random_float_state(int d, std::mt19937_64& eng) {
    FiniteState s(d, Backend::Float);
    auto coord = [&]() { return static_cast<std::int32_t>(eng() % 5) - 2; };
    auto amp = [&]() { return static_cast<double>(eng() % 2001) / 1000.0 - 1.0; };
    for (int i = 0; i < 4; ++i) {
        LatticePoint x(static_cast<std::size_t>(d));
        for (auto& c : x) {
            c = coord();
        }
        std::vector<Scalar> v;
        for (int j = 0; j < 2 * d; ++j) {
            v.push_back(Scalar::floating(amp(), amp()));
        }
        s.set(x, ChiralVector(std::move(v)));
    }
    const double mass = s.norm_sq().float_re();
    FiniteState out(d, Backend::Float);
    const Scalar scale = Scalar::floating(1.0 / std::sqrt(mass));
    for (const auto& [x, v] : s.entries()) {
        out.set(x, v.scaled(scale));
    }
    return out;
}

bool check_mass_conservation(std::string& detail) {
    const auto t0 = Clock::now();
    std::mt19937_64 eng(77);
    double worst_drift = 0.0;
    for (int d : {2, 3}) {
        FiniteState cur = random_float_state(d, eng);
        const double m0 = cur.norm_sq().float_re();
        const Coin g = grover(d, Backend::Float);
        for (int n = 1; n <= 100; ++n) {
            cur = step(cur, g);
            const double drift = std::abs(cur.norm_sq().float_re() - m0) / m0;
            worst_drift = std::max(worst_drift, drift);
            if (drift > 1e-12) {
                std::ostringstream os;
                os << "d=" << d << " n=" << n << " relative drift " << drift;
                detail = os.str();
                return false;
            }
        }
    }

    // exact backend: the mass is one fixed rational number, bit for bit
    auto exact_run = [&](int d, int steps) {
        FiniteState s(d, Backend::Exact);
        auto r = [&]() {
            return Rational(static_cast<long>(eng() % 9) - 4,
                            static_cast<long>(eng() % 5) + 1);
        };
        for (int i = 0; i < 3; ++i) {
            LatticePoint x(static_cast<std::size_t>(d));
            for (auto& c : x) {
                c = static_cast<std::int32_t>(eng() % 5) - 2;
            }
            std::vector<Scalar> v;
            for (int j = 0; j < 2 * d; ++j) {
                v.push_back(Scalar::exact(r(), r()));
            }
            s.set(x, ChiralVector(std::move(v)));
        }
        const Scalar m0 = s.norm_sq();
        const Coin g = grover(d);
        FiniteState cur = s;
        for (int n = 1; n <= steps; ++n) {
            cur = step(cur, g);
            if (!(cur.norm_sq() == m0)) {
                return false;
            }
        }
        return true;
    };
    if (!exact_run(2, 50)) {
        detail = "exact mass changed (d=2)";
        return false;
    }
    if (!exact_run(3, 20)) {
        detail = "exact mass changed (d=3)";
        return false;
    }
    std::ostringstream os;
    os << "max relative drift " << worst_drift << ", " << seconds_since(t0) << " s";
    detail = os.str();
    return true;
}

// --- criterion 8: the support is the whole 3^d cell ------------------------

bool check_support(std::string& detail) {
    std::mt19937_64 eng(9);
    for (int d = 1; d <= 4; ++d) {
        const StationaryAtom atom = inverse_fourier(grover_eigenfunction(d));
        std::size_t cell = 1;
        for (int i = 0; i < d; ++i) {
            cell *= 3;
        }
        for (int rep = 0; rep < 10; ++rep) {
            LatticePoint u(static_cast<std::size_t>(d));
            for (auto& c : u) {
                c = static_cast<std::int32_t>(eng() % 21) - 10;
            }
            const FiniteState s = atom_to_state(atom, u);
            if (s.support_size() != cell || s.support_sorted() != ball_support(u)) {
                std::ostringstream os;
                os << "d=" << d << " rep=" << rep;
                detail = os.str();
                return false;
            }
        }
    }
    detail = "d = 1..4, 10 offsets each";
    return true;
}

int run(int number, const char* label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << label;
    if (!detail.empty()) {
        std::cout << "  [" << detail << "]";
    }
    std::cout << "\n" << std::flush;
    return ok ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    failures += run(1, "normalized square-lattice measure via the CLI", check_square_measure);
    failures += run(2, "normalized cubic-lattice measure via the CLI", check_cubic_measure);
    failures += run(3, "amplitude tables reproduced bit-exactly", check_amplitude_tables);
    failures += run(4, "random superpositions are exact 10-step fixed points",
                    check_fixed_point_property);
    failures += run(5, "spectral residuals <= 1e-12 and symbolic identity",
                    check_spectral_residuals);
    failures += run(6, "two-parameter family residuals; p=1/2 matches the symmetric coin",
                    check_two_parameter_family);
    failures += run(7, "mass conserved over 100 float steps; exact mass bit-constant",
                    check_mass_conservation);
    failures += run(8, "stationary support fills the 3^d cell", check_support);
    return failures == 0 ? 0 : 1;
}
