#include "qwalk/stationary.hpp"

#include <algorithm>
#include <cstdlib>

namespace qwalk {

namespace {

bool in_unit_cell(const LatticePoint& c) {
    return std::all_of(c.begin(), c.end(), [](std::int32_t x) { return x >= -1 && x <= 1; });
}

}  // namespace

StationaryAtom::StationaryAtom(
    int d, Backend b, std::unordered_map<LatticePoint, ChiralVector, PointHash> amplitudes)
    : d_(d), backend_(b), entries_(std::move(amplitudes)) {
    if (d < 1) {
        throw DimensionError("dimension must be >= 1");
    }
    for (auto it = entries_.begin(); it != entries_.end();) {
        const auto& [c, v] = *it;
        if (static_cast<int>(c.size()) != d_ || v.dim() != d_) {
            throw DimensionError("atom amplitude has wrong dimension");
        }
        if (v.backend() != backend_) {
            throw BackendError("atom amplitude backend mismatch");
        }
        if (!in_unit_cell(c)) {
            throw std::invalid_argument("atom support exceeds the unit cell {-1,0,1}^d");
        }
        it = v.is_zero() ? entries_.erase(it) : std::next(it);
    }
}

ChiralVector StationaryAtom::get(const LatticePoint& c) const {
    auto it = entries_.find(c);
    return it == entries_.end() ? ChiralVector::zero(d_, backend_) : it->second;
}

std::vector<LatticePoint> StationaryAtom::support_sorted() const {
    std::vector<LatticePoint> keys;
    keys.reserve(entries_.size());
    for (const auto& [c, v] : entries_) {
        keys.push_back(c);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

StationaryAtom StationaryAtom::to_float() const {
    std::unordered_map<LatticePoint, ChiralVector, PointHash> out;
    out.reserve(entries_.size());
    for (const auto& [c, v] : entries_) {
        out.emplace(c, v.to_float());
    }
    return StationaryAtom(d_, Backend::Float, std::move(out));
}

std::vector<LatticePoint> ball_support(const LatticePoint& u) {
    const std::size_t d = u.size();
    if (d == 0) {
        throw DimensionError("dimension must be >= 1");
    }
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) {
        count *= 3;
    }
    std::vector<LatticePoint> out;
    out.reserve(count);
    // Counting in base 3 with digits ordered -1 < 0 < 1 yields lexicographic
    // order directly.
    for (std::size_t n = 0; n < count; ++n) {
        LatticePoint x(d);
        std::size_t rest = n;
        for (std::size_t i = d; i-- > 0;) {
            x[i] = u[i] + static_cast<std::int32_t>(rest % 3) - 1;
            rest /= 3;
        }
        out.push_back(std::move(x));
    }
    return out;
}

StationaryAtom inverse_fourier(const SymbolVector& v) {
    const int d = v.dim();
    const Backend b = v.backend();
    std::unordered_map<LatticePoint, ChiralVector, PointHash> amps;
    std::unordered_map<LatticePoint, std::vector<Scalar>, PointHash> raw;
    for (int j = 0; j < v.size(); ++j) {
        for (const auto& [m, coeff] : v[j].terms()) {
            LatticePoint x(m.size());
            for (std::size_t i = 0; i < m.size(); ++i) {
                x[i] = -m[i];
            }
            auto [it, inserted] = raw.try_emplace(
                x, std::vector<Scalar>(static_cast<std::size_t>(2 * d), Scalar::zero(b)));
            it->second[static_cast<std::size_t>(j)] =
                it->second[static_cast<std::size_t>(j)] + coeff;
        }
    }
    amps.reserve(raw.size());
    for (auto& [x, vec] : raw) {
        amps.emplace(x, ChiralVector(std::move(vec)));
    }
    return StationaryAtom(d, b, std::move(amps));
}

FiniteState atom_to_state(const StationaryAtom& atom, const LatticePoint& u) {
    if (static_cast<int>(u.size()) != atom.dim()) {
        throw DimensionError("translation point has wrong dimension");
    }
    FiniteState out(atom.dim(), atom.backend());
    for (const auto& [c, v] : atom.entries()) {
        out.set(point_add(u, c), v);
    }
    return out;
}

FiniteState superpose(const StationaryAtom& atom, const WeightSequence& w) {
    if (atom.dim() != w.dim()) {
        throw DimensionError("atom and weight dimension mismatch");
    }
    if (atom.backend() != w.backend()) {
        throw BackendError("atom and weight backend mismatch");
    }
    if (w.empty()) {
        throw std::invalid_argument("weight sequence must have a nonzero entry");
    }
    FiniteState acc(atom.dim(), atom.backend());
    for (const LatticePoint& u : w.support_sorted()) {
        acc = state_axpy(acc, w.entries().at(u), atom_to_state(atom, u));
    }
    return acc;
}

Measure stationary_measure(const StationaryAtom& atom, const WeightSequence& w, bool normalize) {
    Measure m = measure_of(superpose(atom, w));
    return normalize ? m.normalized() : m;
}

}  // namespace qwalk
