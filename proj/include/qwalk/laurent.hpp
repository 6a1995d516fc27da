#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/lattice.hpp"

#include <complex>
#include <string>
#include <vector>

namespace qwalk {

/// Sparse multivariate Laurent polynomial in X_1..X_d, X_j standing for
/// e^{ik_j}. Terms map exponent vectors in Z^d to coefficients; zero
/// coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly(int d, Backend b);
    static LaurentPoly constant(int d, const Scalar& c);
    static LaurentPoly monomial(LatticePoint exp, const Scalar& coeff);

    int dim() const noexcept { return d_; }
    Backend backend() const noexcept { return backend_; }

    /// Accumulates coeff onto the term with the given exponent vector.
    void add_term(const LatticePoint& exp, const Scalar& coeff);
    Scalar coeff(const LatticePoint& exp) const;

    const std::unordered_map<LatticePoint, Scalar, PointHash>& terms() const noexcept {
        return terms_;
    }
    std::size_t term_count() const noexcept { return terms_.size(); }
    std::vector<LatticePoint> exponents_sorted() const;
    bool is_zero() const noexcept { return terms_.empty(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Scalar& c) const;
    LaurentPoly to_float() const;

    /// Evaluation at k via X^m -> e^{i<m,k>}; always a float-backend result.
    std::complex<double> eval(const std::vector<double>& k) const;

    bool operator==(const LaurentPoly& o) const;

    /// "c * X1^a1 ... Xd^ad + ..." with terms in lexicographic exponent order.
    std::string str() const;

private:
    void check_same(const LaurentPoly& o, const char* op) const;

    int d_;
    Backend backend_;
    std::unordered_map<LatticePoint, Scalar, PointHash> terms_;
};

/// Length-2d vector of Laurent polynomials (a wavefunction in k-space).
class SymbolVector {
public:
    explicit SymbolVector(std::vector<LaurentPoly> comps);

    int dim() const noexcept { return d_; }
    int size() const noexcept { return static_cast<int>(comps_.size()); }
    Backend backend() const noexcept { return backend_; }
    const LaurentPoly& operator[](int i) const { return comps_.at(static_cast<std::size_t>(i)); }
    const std::vector<LaurentPoly>& comps() const noexcept { return comps_; }

    SymbolVector to_float() const;
    bool operator==(const SymbolVector& o) const;

private:
    int d_;
    Backend backend_;
    std::vector<LaurentPoly> comps_;
};

/// 2d x 2d matrix of Laurent polynomials (the walk operator in k-space).
class SymbolMatrix {
public:
    explicit SymbolMatrix(std::vector<std::vector<LaurentPoly>> rows);

    int dim() const noexcept { return d_; }
    int size() const noexcept { return static_cast<int>(rows_.size()); }
    Backend backend() const noexcept { return backend_; }
    const LaurentPoly& at(int i, int j) const {
        return rows_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
    }

private:
    int d_;
    Backend backend_;
    std::vector<std::vector<LaurentPoly>> rows_;
};

using ComplexVector = std::vector<std::complex<double>>;
using ComplexMatrix = std::vector<ComplexVector>;

/// U_hat(k) = sum_a (X_a P_{2a} A + conj(X_a) P_{2a+1} A): row 2a of the coin
/// carries X_a, row 2a+1 carries X_a^{-1}.
SymbolMatrix symbol_matrix(const Coin& c);

/// Closed-form eigenvalue-1 eigenfunction of the Grover symbol:
/// component 2a   = (1 + X_a)       prod_{l != a} (1 + X_l^{-1})(1 + X_l),
/// component 2a+1 = (1 + X_a^{-1})  prod_{l != a} (1 + X_l^{-1})(1 + X_l).
/// Exact backend.
SymbolVector grover_eigenfunction(int d);

/// Eigenvalue-1 eigenfunction of the two-parameter Z^2 symbol; the second
/// axis pair is scaled by sqrt(pq)/q. Float backend, 0 < p < 1.
SymbolVector watabe_eigenfunction(double p);

/// Exact variant; throws BackendError when sqrt(pq) is irrational.
SymbolVector watabe_eigenfunction_exact(const Rational& p);

ComplexVector eval_at(const SymbolVector& v, const std::vector<double>& k);
ComplexMatrix eval_at(const SymbolMatrix& m, const std::vector<double>& k);

/// || U_hat(k) v(k) - v(k) ||_2 evaluated numerically at one k.
double eigen_residual(const Coin& c, const SymbolVector& v, const std::vector<double>& k);

/// `count` points of [0,2pi)^d from a seeded generator. The doubles are
/// derived from raw engine words, so the sequence is identical on every
/// platform for a given seed.
std::vector<std::vector<double>> sample_wavevectors(int d, int count, std::uint64_t seed);

/// True iff every component of U_hat v - v expands to the zero polynomial.
/// Requires the exact backend on both the coin and the vector.
bool symbolic_fixed_point_check(const Coin& c, const SymbolVector& v);

}  // namespace qwalk
