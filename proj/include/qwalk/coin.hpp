#pragma once

#include "qwalk/scalar.hpp"

#include <string>
#include <vector>

namespace qwalk {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// 2d x 2d unitary coin matrix. Unitarity is validated at construction:
/// exactly on the exact backend, to `tol` on the float backend.
class Coin {
public:
    Coin(int d, ScalarMatrix entries, std::string kind = "custom", double tol = 1e-12);

    int dim() const noexcept { return d_; }
    int size() const noexcept { return 2 * d_; }
    Backend backend() const noexcept { return backend_; }
    const std::string& kind() const noexcept { return kind_; }

    const Scalar& at(int i, int j) const;
    const std::vector<Scalar>& row(int i) const;
    const ScalarMatrix& entries() const noexcept { return entries_; }

    Coin to_float() const;

    bool operator==(const Coin& o) const;

private:
    int d_;
    Backend backend_;
    std::string kind_;
    ScalarMatrix entries_;
};

/// Grover coin on Z^d: entries 2/D - delta_ij with D = 2d.
Coin grover(int d, Backend b = Backend::Exact);

/// The two-parameter 4x4 family on Z^2 (rows mix p, q = 1-p and sqrt(pq)).
/// Float backend; requires 0 < p < 1.
Coin watabe(double p);

/// Exact-backend variant; throws BackendError when sqrt(pq) is irrational.
Coin watabe_exact(const Rational& p);

/// Max-abs-entry test of A*A = I. On the exact backend tol is ignored and
/// exact equality is required.
bool is_unitary(const Coin& c, double tol);

/// P_i A: the matrix keeping only row i (0-based) of the coin.
ScalarMatrix row_projection(const Coin& c, int i);

}  // namespace qwalk
