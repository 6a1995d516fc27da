#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/lattice.hpp"

namespace qwalk {

/// One step of the walk, gathered per output point:
///   psi'(x)[2a]   = row 2a   of A . psi(x + e_a)
///   psi'(x)[2a+1] = row 2a+1 of A . psi(x - e_a)
/// Zero results are pruned; support dilates by at most one unit per axis.
FiniteState step(const FiniteState& s, const Coin& c);

/// n-fold composition of step; n = 0 returns the input unchanged.
FiniteState evolve(FiniteState s, const Coin& c, int n);

/// Squared l2 distance between two states, on their common backend.
Scalar state_distance_sq(const FiniteState& a, const FiniteState& b);

/// l2 norm of step(s) - s; zero exactly when s is a stationary amplitude.
double fixed_point_residual(const FiniteState& s, const Coin& c);

}  // namespace qwalk
