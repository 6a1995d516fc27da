#include "qwalk/lattice.hpp"

#include <algorithm>

namespace qwalk {

LatticePoint point_add(const LatticePoint& a, const LatticePoint& b) {
    if (a.size() != b.size()) {
        throw DimensionError("lattice point dimension mismatch");
    }
    LatticePoint out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

LatticePoint unit_step(const LatticePoint& x, int axis, int dir) {
    LatticePoint out = x;
    out.at(static_cast<std::size_t>(axis)) += static_cast<std::int32_t>(dir);
    return out;
}

ChiralVector::ChiralVector(std::vector<Scalar> amps)
    : d_(static_cast<int>(amps.size()) / 2), backend_(Backend::Exact), amps_(std::move(amps)) {
    if (amps_.empty() || amps_.size() % 2 != 0) {
        throw DimensionError("chiral vector length must be 2d");
    }
    backend_ = amps_.front().backend();
    for (const Scalar& a : amps_) {
        if (a.backend() != backend_) {
            throw BackendError("chiral vector entries mix backends");
        }
    }
}

ChiralVector ChiralVector::zero(int d, Backend b) {
    if (d < 1) {
        throw DimensionError("dimension must be >= 1");
    }
    return ChiralVector(std::vector<Scalar>(static_cast<std::size_t>(2 * d), Scalar::zero(b)));
}

bool ChiralVector::is_zero() const {
    return std::all_of(amps_.begin(), amps_.end(), [](const Scalar& a) { return a.is_zero(); });
}

Scalar ChiralVector::norm_sq() const {
    Scalar s = Scalar::zero(backend_);
    for (const Scalar& a : amps_) {
        s = s + a.norm_sq();
    }
    return s;
}

ChiralVector ChiralVector::scaled(const Scalar& w) const {
    std::vector<Scalar> out;
    out.reserve(amps_.size());
    for (const Scalar& a : amps_) {
        out.push_back(a * w);
    }
    return ChiralVector(std::move(out));
}

ChiralVector ChiralVector::plus(const ChiralVector& o) const {
    if (d_ != o.d_) {
        throw DimensionError("chiral vector dimension mismatch");
    }
    std::vector<Scalar> out;
    out.reserve(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        out.push_back(amps_[i] + o.amps_[i]);
    }
    return ChiralVector(std::move(out));
}

ChiralVector ChiralVector::to_float() const {
    std::vector<Scalar> out;
    out.reserve(amps_.size());
    for (const Scalar& a : amps_) {
        out.push_back(a.to_float());
    }
    return ChiralVector(std::move(out));
}

bool ChiralVector::operator==(const ChiralVector& o) const {
    if (d_ != o.d_) {
        return false;
    }
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (amps_[i] != o.amps_[i]) {
            return false;
        }
    }
    return true;
}

FiniteState::FiniteState(int d, Backend b) : d_(d), backend_(b) {
    if (d < 1) {
        throw DimensionError("dimension must be >= 1");
    }
}

void FiniteState::check_point(const LatticePoint& x) const {
    if (static_cast<int>(x.size()) != d_) {
        throw DimensionError("lattice point has wrong dimension");
    }
}

void FiniteState::set(const LatticePoint& x, ChiralVector v) {
    check_point(x);
    if (v.dim() != d_) {
        throw DimensionError("chiral vector has wrong dimension");
    }
    if (v.backend() != backend_) {
        throw BackendError("chiral vector backend differs from state backend");
    }
    if (v.is_zero()) {
        entries_.erase(x);
    } else {
        entries_.insert_or_assign(x, std::move(v));
    }
}

ChiralVector FiniteState::get(const LatticePoint& x) const {
    check_point(x);
    auto it = entries_.find(x);
    if (it == entries_.end()) {
        return ChiralVector::zero(d_, backend_);
    }
    return it->second;
}

const ChiralVector* FiniteState::lookup(const LatticePoint& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<LatticePoint> FiniteState::support_sorted() const {
    std::vector<LatticePoint> keys;
    keys.reserve(entries_.size());
    for (const auto& [x, v] : entries_) {
        keys.push_back(x);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

Scalar FiniteState::norm_sq() const {
    Scalar s = Scalar::zero(backend_);
    for (const auto& [x, v] : entries_) {
        s = s + v.norm_sq();
    }
    return s;
}

FiniteState FiniteState::to_float() const {
    FiniteState out(d_, Backend::Float);
    for (const auto& [x, v] : entries_) {
        out.set(x, v.to_float());
    }
    return out;
}

bool FiniteState::operator==(const FiniteState& o) const {
    if (d_ != o.d_ || backend_ != o.backend_ || entries_.size() != o.entries_.size()) {
        return false;
    }
    for (const auto& [x, v] : entries_) {
        const ChiralVector* ov = o.lookup(x);
        if (ov == nullptr || !(v == *ov)) {
            return false;
        }
    }
    return true;
}

Measure::Measure(int d, Backend b) : d_(d), backend_(b) {
    if (d < 1) {
        throw DimensionError("dimension must be >= 1");
    }
}

void Measure::set(const LatticePoint& x, const Scalar& value) {
    if (static_cast<int>(x.size()) != d_) {
        throw DimensionError("lattice point has wrong dimension");
    }
    if (value.backend() != backend_) {
        throw BackendError("measure value backend differs from measure backend");
    }
    if (!value.is_real()) {
        throw std::invalid_argument("measure values must be real");
    }
    if (value.is_zero()) {
        entries_.erase(x);
        return;
    }
    const bool negative = value.backend() == Backend::Exact ? value.exact_re() < 0
                                                            : value.float_re() < 0.0;
    if (negative) {
        throw std::invalid_argument("measure values must be nonnegative");
    }
    entries_.insert_or_assign(x, value);
}

Scalar Measure::at(const LatticePoint& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? Scalar::zero(backend_) : it->second;
}

std::vector<LatticePoint> Measure::support_sorted() const {
    std::vector<LatticePoint> keys;
    keys.reserve(entries_.size());
    for (const auto& [x, v] : entries_) {
        keys.push_back(x);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

Scalar Measure::total_mass() const {
    Scalar s = Scalar::zero(backend_);
    for (const auto& [x, v] : entries_) {
        s = s + v;
    }
    return s;
}

Measure Measure::normalized() const {
    const Scalar mass = total_mass();
    if (mass.is_zero()) {
        throw std::domain_error("cannot normalize a zero-mass measure");
    }
    Measure out(d_, backend_);
    for (const auto& [x, v] : entries_) {
        out.set(x, v / mass);
    }
    return out;
}

bool Measure::operator==(const Measure& o) const {
    if (d_ != o.d_ || backend_ != o.backend_ || entries_.size() != o.entries_.size()) {
        return false;
    }
    for (const auto& [x, v] : entries_) {
        auto it = o.entries_.find(x);
        if (it == o.entries_.end() || v != it->second) {
            return false;
        }
    }
    return true;
}

WeightSequence::WeightSequence(int d, Backend b) : d_(d), backend_(b) {
    if (d < 1) {
        throw DimensionError("dimension must be >= 1");
    }
}

void WeightSequence::set(const LatticePoint& u, const Scalar& w) {
    if (static_cast<int>(u.size()) != d_) {
        throw DimensionError("lattice point has wrong dimension");
    }
    if (w.backend() != backend_) {
        throw BackendError("weight backend differs from sequence backend");
    }
    if (w.is_zero()) {
        entries_.erase(u);
    } else {
        entries_.insert_or_assign(u, w);
    }
}

std::vector<LatticePoint> WeightSequence::support_sorted() const {
    std::vector<LatticePoint> keys;
    keys.reserve(entries_.size());
    for (const auto& [u, w] : entries_) {
        keys.push_back(u);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

Measure measure_of(const FiniteState& s) {
    Measure m(s.dim(), s.backend());
    for (const auto& [x, v] : s.entries()) {
        m.set(x, v.norm_sq());
    }
    return m;
}

Scalar total_mass(const Measure& m) {
    return m.total_mass();
}

FiniteState state_axpy(const FiniteState& acc, const Scalar& w, const FiniteState& s) {
    if (acc.dim() != s.dim()) {
        throw DimensionError("state dimension mismatch in axpy");
    }
    if (acc.backend() != s.backend() || w.backend() != s.backend()) {
        throw BackendError("backend mismatch in axpy");
    }
    FiniteState out = acc;
    if (w.is_zero()) {
        return out;
    }
    for (const auto& [x, v] : s.entries()) {
        const ChiralVector* existing = out.lookup(x);
        if (existing != nullptr) {
            out.set(x, existing->plus(v.scaled(w)));
        } else {
            out.set(x, v.scaled(w));
        }
    }
    return out;
}

}  // namespace qwalk
