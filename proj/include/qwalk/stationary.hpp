#pragma once

#include "qwalk/lattice.hpp"
#include "qwalk/laurent.hpp"

#include <vector>

namespace qwalk {

/// The finite family {a_c}: amplitudes of one stationary state centered at
/// the origin. Keys live in the 3^d-point cell {-1,0,1}^d.
class StationaryAtom {
public:
    StationaryAtom(int d, Backend b,
                   std::unordered_map<LatticePoint, ChiralVector, PointHash> amplitudes);

    int dim() const noexcept { return d_; }
    Backend backend() const noexcept { return backend_; }

    /// Stored amplitude at offset c, or the all-zero vector.
    ChiralVector get(const LatticePoint& c) const;

    const std::unordered_map<LatticePoint, ChiralVector, PointHash>& entries() const noexcept {
        return entries_;
    }
    std::size_t support_size() const noexcept { return entries_.size(); }
    std::vector<LatticePoint> support_sorted() const;

    StationaryAtom to_float() const;

private:
    int d_;
    Backend backend_;
    std::unordered_map<LatticePoint, ChiralVector, PointHash> entries_;
};

/// The 3^d points with every coordinate within one unit of u, sorted
/// lexicographically.
std::vector<LatticePoint> ball_support(const LatticePoint& u);

/// Inverse Fourier transform of a symbol vector: the monomial coeff * X^m of
/// component j contributes coeff to component j at lattice point -m.
StationaryAtom inverse_fourier(const SymbolVector& v);

/// The translated stationary state psi(x) = sum_c a_c delta_{u+c}(x).
FiniteState atom_to_state(const StationaryAtom& atom, const LatticePoint& u);

/// Weighted superposition sum_u phi_u psi^{(u)}. Weights must contain at
/// least one nonzero entry; accumulation order is the sorted key order.
FiniteState superpose(const StationaryAtom& atom, const WeightSequence& w);

/// measure_of(superpose(atom, w)), optionally divided by total mass.
Measure stationary_measure(const StationaryAtom& atom, const WeightSequence& w, bool normalize);

}  // namespace qwalk
