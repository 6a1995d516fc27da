#include "qwalk/evolution.hpp"

#include <cmath>
#include <unordered_set>

namespace qwalk {

namespace {

void check_compatible(const FiniteState& s, const Coin& c) {
    if (s.dim() != c.dim()) {
        throw DimensionError("state and coin dimension mismatch");
    }
    if (s.backend() != c.backend()) {
        throw BackendError("state and coin backend mismatch");
    }
}

// row . psi, skipping zero coin entries (the Grover d=1 diagonal is zero).
Scalar row_dot(const std::vector<Scalar>& row, const ChiralVector& v, Backend b) {
    Scalar acc = Scalar::zero(b);
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j].is_zero()) {
            continue;
        }
        acc = acc + row[j] * v[static_cast<int>(j)];
    }
    return acc;
}

}  // namespace

FiniteState step(const FiniteState& s, const Coin& c) {
    check_compatible(s, c);
    const int d = s.dim();
    const Backend b = s.backend();

    std::unordered_set<LatticePoint, PointHash> touched;
    touched.reserve(s.support_size() * static_cast<std::size_t>(2 * d));
    for (const auto& [y, v] : s.entries()) {
        for (int a = 0; a < d; ++a) {
            touched.insert(unit_step(y, a, -1));
            touched.insert(unit_step(y, a, +1));
        }
    }

    FiniteState out(d, b);
    for (const LatticePoint& x : touched) {
        std::vector<Scalar> amps;
        amps.reserve(static_cast<std::size_t>(2 * d));
        bool any = false;
        for (int a = 0; a < d; ++a) {
            const ChiralVector* from_plus = s.lookup(unit_step(x, a, +1));
            const ChiralVector* from_minus = s.lookup(unit_step(x, a, -1));
            Scalar lo = from_plus ? row_dot(c.row(2 * a), *from_plus, b) : Scalar::zero(b);
            Scalar hi = from_minus ? row_dot(c.row(2 * a + 1), *from_minus, b) : Scalar::zero(b);
            any = any || !lo.is_zero() || !hi.is_zero();
            amps.push_back(std::move(lo));
            amps.push_back(std::move(hi));
        }
        if (any) {
            out.set(x, ChiralVector(std::move(amps)));
        }
    }
    return out;
}

FiniteState evolve(FiniteState s, const Coin& c, int n) {
    if (n < 0) {
        throw std::invalid_argument("step count must be nonnegative");
    }
    check_compatible(s, c);
    for (int i = 0; i < n; ++i) {
        s = step(s, c);
    }
    return s;
}

Scalar state_distance_sq(const FiniteState& a, const FiniteState& b) {
    return state_axpy(a, -Scalar::one(a.backend()), b).norm_sq();
}

double fixed_point_residual(const FiniteState& s, const Coin& c) {
    const Scalar d2 = state_distance_sq(step(s, c), s);
    return std::sqrt(d2.to_complex().real());
}

}  // namespace qwalk
