#pragma once

#include "qwalk/scalar.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace qwalk {

/// A point of Z^d; the vector length is the ambient dimension.
using LatticePoint = std::vector<std::int32_t>;

struct PointHash {
    std::size_t operator()(const LatticePoint& p) const noexcept {
        // FNV-1a over the coordinate words
        std::uint64_t h = 1469598103934665603ull;
        for (std::int32_t c : p) {
            auto u = static_cast<std::uint32_t>(c);
            for (int i = 0; i < 4; ++i) {
                h ^= (u >> (8 * i)) & 0xffu;
                h *= 1099511628211ull;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

LatticePoint point_add(const LatticePoint& a, const LatticePoint& b);

/// x + dir*e_axis with dir in {-1,+1}.
LatticePoint unit_step(const LatticePoint& x, int axis, int dir);

/// Length-2d vector of chiral amplitudes. Component 2a is the -x_a mover,
/// component 2a+1 the +x_a mover (a = 0..d-1). All entries share one backend.
class ChiralVector {
public:
    explicit ChiralVector(std::vector<Scalar> amps);
    static ChiralVector zero(int d, Backend b);

    int dim() const noexcept { return d_; }
    int size() const noexcept { return static_cast<int>(amps_.size()); }
    Backend backend() const noexcept { return backend_; }

    const Scalar& operator[](int i) const { return amps_.at(static_cast<std::size_t>(i)); }
    const std::vector<Scalar>& amps() const noexcept { return amps_; }

    bool is_zero() const;
    Scalar norm_sq() const;
    ChiralVector scaled(const Scalar& w) const;
    ChiralVector plus(const ChiralVector& o) const;
    ChiralVector to_float() const;

    bool operator==(const ChiralVector& o) const;

private:
    int d_;
    Backend backend_;
    std::vector<Scalar> amps_;
};

/// Finitely supported wavefunction Z^d -> C^{2d}. All-zero vectors are
/// pruned on write, so the stored key set is exactly the support.
class FiniteState {
public:
    FiniteState(int d, Backend b);

    int dim() const noexcept { return d_; }
    Backend backend() const noexcept { return backend_; }

    void set(const LatticePoint& x, ChiralVector v);
    /// Stored vector at x, or the all-zero 2d-vector.
    ChiralVector get(const LatticePoint& x) const;
    /// Stored vector at x, or nullptr; never points at a zero vector.
    const ChiralVector* lookup(const LatticePoint& x) const;

    const std::unordered_map<LatticePoint, ChiralVector, PointHash>& entries() const noexcept {
        return entries_;
    }
    std::size_t support_size() const noexcept { return entries_.size(); }
    std::vector<LatticePoint> support_sorted() const;
    bool empty() const noexcept { return entries_.empty(); }

    Scalar norm_sq() const;
    FiniteState to_float() const;

    bool operator==(const FiniteState& o) const;

private:
    void check_point(const LatticePoint& x) const;

    int d_;
    Backend backend_;
    std::unordered_map<LatticePoint, ChiralVector, PointHash> entries_;
};

/// Finitely supported measure on Z^d; stored values are real and positive.
class Measure {
public:
    Measure(int d, Backend b);

    int dim() const noexcept { return d_; }
    Backend backend() const noexcept { return backend_; }

    void set(const LatticePoint& x, const Scalar& value);
    /// Value at x, zero if absent.
    Scalar at(const LatticePoint& x) const;

    const std::unordered_map<LatticePoint, Scalar, PointHash>& entries() const noexcept {
        return entries_;
    }
    std::size_t support_size() const noexcept { return entries_.size(); }
    std::vector<LatticePoint> support_sorted() const;
    bool empty() const noexcept { return entries_.empty(); }

    Scalar total_mass() const;
    /// Measure divided by its total mass (exact rational division in exact
    /// mode). Throws std::domain_error on an empty (zero-mass) measure.
    Measure normalized() const;

    bool operator==(const Measure& o) const;

private:
    int d_;
    Backend backend_;
    std::unordered_map<LatticePoint, Scalar, PointHash> entries_;
};

/// Finitely supported complex weights {phi_u}; zero weights are pruned.
class WeightSequence {
public:
    WeightSequence(int d, Backend b);

    int dim() const noexcept { return d_; }
    Backend backend() const noexcept { return backend_; }

    void set(const LatticePoint& u, const Scalar& w);

    const std::unordered_map<LatticePoint, Scalar, PointHash>& entries() const noexcept {
        return entries_;
    }
    std::vector<LatticePoint> support_sorted() const;
    bool empty() const noexcept { return entries_.empty(); }

private:
    int d_;
    Backend backend_;
    std::unordered_map<LatticePoint, Scalar, PointHash> entries_;
};

/// The amplitude-to-measure map: mu(x) = sum_j |psi^j(x)|^2.
Measure measure_of(const FiniteState& s);

Scalar total_mass(const Measure& m);

/// acc + w*s, with zero results pruned.
FiniteState state_axpy(const FiniteState& acc, const Scalar& w, const FiniteState& s);

}  // namespace qwalk
