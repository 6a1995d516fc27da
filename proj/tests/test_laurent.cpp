#include "qwalk/laurent.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace qwalk;

namespace {

Scalar q(int num, int den = 1) {
    return Scalar::exact(Rational(num, den));
}

LaurentPoly rand_poly(int d, std::mt19937_64& eng) {
    LaurentPoly p(d, Backend::Float);
    const int terms = 1 + static_cast<int>(eng() % 5);
    for (int t = 0; t < terms; ++t) {
        LatticePoint e(static_cast<std::size_t>(d));
        for (auto& c : e) {
            c = static_cast<std::int32_t>(eng() % 7) - 3;
        }
        const double re = static_cast<double>(eng() % 19) / 7.0 - 1.0;
        const double im = static_cast<double>(eng() % 19) / 7.0 - 1.0;
        p.add_term(e, Scalar::floating(re, im));
    }
    return p;
}

}  // namespace

TEST_SUITE("symbol") {

TEST_CASE("term accumulation and cancellation") {
    LaurentPoly p(1, Backend::Exact);
    p.add_term({1}, q(2));
    p.add_term({1}, q(3));
    CHECK(p.coeff({1}) == q(5));
    p.add_term({1}, q(-5));
    CHECK(p.is_zero());
    p.add_term({0}, q(0));
    CHECK(p.term_count() == 0);
}

TEST_CASE("arithmetic") {
    // (1 + X)(1 + 1/X) = 2 + X + 1/X
    const LaurentPoly a = LaurentPoly::constant(1, q(1)) + LaurentPoly::monomial({1}, q(1));
    const LaurentPoly b = LaurentPoly::constant(1, q(1)) + LaurentPoly::monomial({-1}, q(1));
    const LaurentPoly prod = a * b;
    CHECK(prod.term_count() == 3);
    CHECK(prod.coeff({0}) == q(2));
    CHECK(prod.coeff({1}) == q(1));
    CHECK(prod.coeff({-1}) == q(1));
    CHECK((prod - prod).is_zero());
    CHECK(prod.scaled(q(3)).coeff({0}) == q(6));
    CHECK_THROWS_AS((void)(a + LaurentPoly(2, Backend::Exact)), DimensionError);
    CHECK_THROWS_AS((void)(a + LaurentPoly(1, Backend::Float)), BackendError);
}

TEST_CASE("evaluation matches closed forms") {
    const LaurentPoly a = LaurentPoly::constant(1, q(1)) + LaurentPoly::monomial({1}, q(1));
    const LaurentPoly m = (a * (LaurentPoly::constant(1, q(1)) +
                                LaurentPoly::monomial({-1}, q(1))));
    for (double k : {0.0, 0.3, 1.7, 3.1}) {
        // |1 + e^{ik}|^2 = 2 + 2 cos k
        CHECK(std::abs(m.eval({k}) - std::complex<double>(2.0 + 2.0 * std::cos(k), 0.0)) <
              1e-12);
    }
}

TEST_CASE("evaluation is multiplicative on random polynomials") {
    std::mt19937_64 eng(7);
    for (int rep = 0; rep < 30; ++rep) {
        const int d = 1 + static_cast<int>(eng() % 3);
        const LaurentPoly p = rand_poly(d, eng);
        const LaurentPoly r = rand_poly(d, eng);
        std::vector<double> k(static_cast<std::size_t>(d));
        for (auto& ki : k) {
            ki = static_cast<double>(eng() % 1000) / 1000.0 * 6.28;
        }
        CHECK(std::abs((p * r).eval(k) - p.eval(k) * r.eval(k)) < 1e-12);
    }
}

TEST_CASE("string form") {
    LaurentPoly p(2, Backend::Exact);
    p.add_term({0, 0}, q(2));
    p.add_term({1, -1}, q(-1, 3));
    CHECK(p.str() == "(2/1, 0/1) + (-1/3, 0/1) * X1 * X2^-1");
}

TEST_CASE("symbol matrix of the chain coin") {
    const SymbolMatrix m = symbol_matrix(grover(1));
    CHECK(m.at(0, 0).is_zero());
    CHECK(m.at(0, 1).coeff({1}) == q(1));
    CHECK(m.at(1, 0).coeff({-1}) == q(1));
    CHECK(m.at(1, 1).is_zero());
}

TEST_CASE("symbol matrix is unitary at every wavevector") {
    auto check_unitary = [](const Coin& c) {
        const SymbolMatrix m = symbol_matrix(c);
        for (const auto& k : sample_wavevectors(c.dim(), 20, 11)) {
            const ComplexMatrix u = eval_at(m, k);
            const std::size_t n = u.size();
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::complex<double> s(0.0, 0.0);
                    for (std::size_t l = 0; l < n; ++l) {
                        s += std::conj(u[l][i]) * u[l][j];
                    }
                    CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) < 1e-12);
                }
            }
        }
    };
    check_unitary(grover(1));
    check_unitary(grover(2));
    check_unitary(grover(3));
    check_unitary(watabe(0.3));
}

TEST_CASE("closed-form eigenfunction term counts") {
    for (int d = 1; d <= 4; ++d) {
        const SymbolVector v = grover_eigenfunction(d);
        int expected = 2;
        for (int l = 1; l < d; ++l) {
            expected *= 3;
        }
        for (int i = 0; i < v.size(); ++i) {
            CHECK(v[i].term_count() == static_cast<std::size_t>(expected));
        }
    }
}

TEST_CASE("symbolic fixed point") {
    for (int d = 1; d <= 4; ++d) {
        CHECK(symbolic_fixed_point_check(grover(d), grover_eigenfunction(d)));
    }
    // the two-component closed form on the chain
    const LaurentPoly one = LaurentPoly::constant(1, q(1));
    const SymbolVector v({one + LaurentPoly::monomial({1}, q(1)),
                          one + LaurentPoly::monomial({-1}, q(1))});
    CHECK(symbolic_fixed_point_check(grover(1), v));
}

TEST_CASE("symbolic check fails for a broken vector") {
    const SymbolVector v = grover_eigenfunction(2);
    const SymbolVector broken({v[0], v[1], LaurentPoly(2, Backend::Exact), v[3]});
    CHECK_FALSE(symbolic_fixed_point_check(grover(2), broken));
}

TEST_CASE("symbolic check requires the exact backend") {
    CHECK_THROWS_AS(
        symbolic_fixed_point_check(grover(2, Backend::Float), grover_eigenfunction(2)),
        BackendError);
    CHECK_THROWS_AS(symbolic_fixed_point_check(grover(2), grover_eigenfunction(2).to_float()),
                    BackendError);
}

TEST_CASE("numeric eigen residuals") {
    for (int d = 1; d <= 4; ++d) {
        const Coin g = grover(d);
        const SymbolVector v = grover_eigenfunction(d);
        for (const auto& k : sample_wavevectors(d, 25, 3)) {
            CHECK(eigen_residual(g, v, k) <= 1e-12);
        }
    }
    for (const auto& k : sample_wavevectors(2, 25, 3)) {
        CHECK(eigen_residual(watabe(0.3), watabe_eigenfunction(0.3), k) <= 1e-12);
    }
}

TEST_CASE("two-parameter eigenfunction specializes to the symmetric one") {
    CHECK(watabe_eigenfunction_exact(Rational(1, 2)) == grover_eigenfunction(2));
    CHECK_THROWS_AS(watabe_eigenfunction_exact(Rational(1, 3)), BackendError);
    CHECK_THROWS_AS(watabe_eigenfunction(0.0), std::invalid_argument);
}

TEST_CASE("wavevector sampling is deterministic and in range") {
    const auto a = sample_wavevectors(3, 10, 99);
    const auto b = sample_wavevectors(3, 10, 99);
    CHECK(a == b);
    CHECK(a.size() == 10);
    for (const auto& k : a) {
        CHECK(k.size() == 3);
        for (double ki : k) {
            CHECK(ki >= 0.0);
            CHECK(ki < 6.2831853072);
        }
    }
    CHECK(sample_wavevectors(3, 10, 100) != a);
}

}  // TEST_SUITE
