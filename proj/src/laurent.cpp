#include "qwalk/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace qwalk {

namespace {

// Extended-precision term summation. Component values grow like 4^d, so an
// absolute residual bound of 1e-12 leaves no room for double-precision
// accumulation noise at d = 6; summing in long double keeps the rounding
// error well below the tolerance.
std::complex<long double> eval_extended(const LaurentPoly& p, const std::vector<double>& k) {
    std::complex<long double> acc(0.0L, 0.0L);
    for (const auto& [e, c] : p.terms()) {
        long double phase = 0.0L;
        for (std::size_t i = 0; i < k.size(); ++i) {
            phase += static_cast<long double>(e[i]) * static_cast<long double>(k[i]);
        }
        const std::complex<double> cd = c.to_complex();
        acc += std::complex<long double>(cd.real(), cd.imag()) *
               std::complex<long double>(std::cos(phase), std::sin(phase));
    }
    return acc;
}

}  // namespace

LaurentPoly::LaurentPoly(int d, Backend b) : d_(d), backend_(b) {
    if (d < 1) {
        throw DimensionError("dimension must be >= 1");
    }
}

LaurentPoly LaurentPoly::constant(int d, const Scalar& c) {
    LaurentPoly p(d, c.backend());
    p.add_term(LatticePoint(static_cast<std::size_t>(d), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(LatticePoint exp, const Scalar& coeff) {
    LaurentPoly p(static_cast<int>(exp.size()), coeff.backend());
    p.add_term(exp, coeff);
    return p;
}

void LaurentPoly::add_term(const LatticePoint& exp, const Scalar& coeff) {
    if (static_cast<int>(exp.size()) != d_) {
        throw DimensionError("exponent vector has wrong dimension");
    }
    if (coeff.backend() != backend_) {
        throw BackendError("coefficient backend differs from polynomial backend");
    }
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        Scalar sum = it->second + coeff;
        if (sum.is_zero()) {
            terms_.erase(it);
        } else {
            it->second = std::move(sum);
        }
    }
}

Scalar LaurentPoly::coeff(const LatticePoint& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Scalar::zero(backend_) : it->second;
}

std::vector<LatticePoint> LaurentPoly::exponents_sorted() const {
    std::vector<LatticePoint> keys;
    keys.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        keys.push_back(e);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

void LaurentPoly::check_same(const LaurentPoly& o, const char* op) const {
    if (d_ != o.d_) {
        throw DimensionError(std::string("polynomial dimension mismatch in ") + op);
    }
    if (backend_ != o.backend_) {
        throw BackendError(std::string("polynomial backend mismatch in ") + op);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same(o, "addition");
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) {
        out.add_term(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_same(o, "subtraction");
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) {
        out.add_term(e, -c);
    }
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same(o, "multiplication");
    LaurentPoly out(d_, backend_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            out.add_term(point_add(ea, eb), ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    if (c.backend() != backend_) {
        throw BackendError("scale factor backend differs from polynomial backend");
    }
    LaurentPoly out(d_, backend_);
    for (const auto& [e, t] : terms_) {
        out.add_term(e, t * c);
    }
    return out;
}

LaurentPoly LaurentPoly::to_float() const {
    LaurentPoly out(d_, Backend::Float);
    for (const auto& [e, c] : terms_) {
        out.add_term(e, c.to_float());
    }
    return out;
}

std::complex<double> LaurentPoly::eval(const std::vector<double>& k) const {
    if (static_cast<int>(k.size()) != d_) {
        throw DimensionError("evaluation point has wrong dimension");
    }
    const std::complex<long double> acc = eval_extended(*this, k);
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (d_ != o.d_ || backend_ != o.backend_ || terms_.size() != o.terms_.size()) {
        return false;
    }
    for (const auto& [e, c] : terms_) {
        auto it = o.terms_.find(e);
        if (it == o.terms_.end() || c != it->second) {
            return false;
        }
    }
    return true;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const LatticePoint& e : exponents_sorted()) {
        if (!first) {
            out << " + ";
        }
        first = false;
        const Scalar c = coeff(e);
        if (c.backend() == Backend::Exact) {
            out << "(" << rational_string(c.exact_re()) << ", " << rational_string(c.exact_im())
                << ")";
        } else {
            out << "(" << c.float_re() << ", " << c.float_im() << ")";
        }
        for (int i = 0; i < d_; ++i) {
            const int p = e[static_cast<std::size_t>(i)];
            if (p != 0) {
                out << " * X" << (i + 1);
                if (p != 1) {
                    out << "^" << p;
                }
            }
        }
    }
    return out.str();
}

SymbolVector::SymbolVector(std::vector<LaurentPoly> comps)
    : d_(0), backend_(Backend::Exact), comps_(std::move(comps)) {
    if (comps_.empty() || comps_.size() % 2 != 0) {
        throw DimensionError("symbol vector length must be 2d");
    }
    d_ = comps_.front().dim();
    backend_ = comps_.front().backend();
    if (static_cast<int>(comps_.size()) != 2 * d_) {
        throw DimensionError("symbol vector length must equal 2d");
    }
    bool all_zero = true;
    for (const LaurentPoly& p : comps_) {
        if (p.dim() != d_) {
            throw DimensionError("symbol vector components mix dimensions");
        }
        if (p.backend() != backend_) {
            throw BackendError("symbol vector components mix backends");
        }
        all_zero = all_zero && p.is_zero();
    }
    if (all_zero) {
        throw std::invalid_argument("symbol vector must have a nonzero component");
    }
}

SymbolVector SymbolVector::to_float() const {
    std::vector<LaurentPoly> out;
    out.reserve(comps_.size());
    for (const LaurentPoly& p : comps_) {
        out.push_back(p.to_float());
    }
    return SymbolVector(std::move(out));
}

bool SymbolVector::operator==(const SymbolVector& o) const {
    if (d_ != o.d_ || backend_ != o.backend_) {
        return false;
    }
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (!(comps_[i] == o.comps_[i])) {
            return false;
        }
    }
    return true;
}

SymbolMatrix::SymbolMatrix(std::vector<std::vector<LaurentPoly>> rows)
    : d_(0), backend_(Backend::Exact), rows_(std::move(rows)) {
    if (rows_.empty() || rows_.size() % 2 != 0) {
        throw DimensionError("symbol matrix must be 2d x 2d");
    }
    d_ = rows_.front().front().dim();
    backend_ = rows_.front().front().backend();
    if (static_cast<int>(rows_.size()) != 2 * d_) {
        throw DimensionError("symbol matrix must be 2d x 2d");
    }
    for (const auto& row : rows_) {
        if (static_cast<int>(row.size()) != 2 * d_) {
            throw DimensionError("symbol matrix must be 2d x 2d");
        }
        for (const LaurentPoly& p : row) {
            if (p.dim() != d_) {
                throw DimensionError("symbol matrix entries mix dimensions");
            }
            if (p.backend() != backend_) {
                throw BackendError("symbol matrix entries mix backends");
            }
        }
    }
}

SymbolMatrix symbol_matrix(const Coin& c) {
    const int d = c.dim();
    const int n = c.size();
    std::vector<std::vector<LaurentPoly>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        LatticePoint exp(static_cast<std::size_t>(d), 0);
        exp[static_cast<std::size_t>(r / 2)] = (r % 2 == 0) ? 1 : -1;
        std::vector<LaurentPoly> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            LaurentPoly p(d, c.backend());
            p.add_term(exp, c.at(r, j));
            row.push_back(std::move(p));
        }
        rows.push_back(std::move(row));
    }
    return SymbolMatrix(std::move(rows));
}

namespace {

LaurentPoly axis_binomial(int d, int axis, int sign, const Scalar& one) {
    // 1 + X_axis^sign
    LaurentPoly p = LaurentPoly::constant(d, one);
    LatticePoint e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(axis)] = static_cast<std::int32_t>(sign);
    p.add_term(e, one);
    return p;
}

SymbolVector product_eigenfunction(int d, const Scalar& one) {
    std::vector<LaurentPoly> pair_factor;
    pair_factor.reserve(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        pair_factor.push_back(axis_binomial(d, a, -1, one) * axis_binomial(d, a, +1, one));
    }
    std::vector<LaurentPoly> comps;
    comps.reserve(static_cast<std::size_t>(2 * d));
    for (int a = 0; a < d; ++a) {
        LaurentPoly rest = LaurentPoly::constant(d, one);
        for (int l = 0; l < d; ++l) {
            if (l != a) {
                rest = rest * pair_factor[static_cast<std::size_t>(l)];
            }
        }
        comps.push_back(axis_binomial(d, a, +1, one) * rest);
        comps.push_back(axis_binomial(d, a, -1, one) * rest);
    }
    return SymbolVector(std::move(comps));
}

SymbolVector watabe_eigenfunction_with_ratio(const Scalar& ratio) {
    const Scalar one = Scalar::one(ratio.backend());
    const SymbolVector base = product_eigenfunction(2, one);
    return SymbolVector({base[0], base[1], base[2].scaled(ratio), base[3].scaled(ratio)});
}

}  // namespace

SymbolVector grover_eigenfunction(int d) {
    if (d < 1) {
        throw std::invalid_argument("grover eigenfunction requires d >= 1");
    }
    return product_eigenfunction(d, Scalar::one(Backend::Exact));
}

SymbolVector watabe_eigenfunction(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("watabe eigenfunction requires 0 < p < 1");
    }
    const double q = 1.0 - p;
    return watabe_eigenfunction_with_ratio(Scalar::floating(std::sqrt(p * q) / q));
}

SymbolVector watabe_eigenfunction_exact(const Rational& p) {
    if (!(p > 0 && p < 1)) {
        throw std::invalid_argument("watabe eigenfunction requires 0 < p < 1");
    }
    const Rational q = 1 - p;
    const auto s = rational_sqrt(p * q);
    if (!s) {
        throw BackendError("sqrt(p(1-p)) is irrational; use the float backend");
    }
    return watabe_eigenfunction_with_ratio(Scalar::exact(*s / q));
}

ComplexVector eval_at(const SymbolVector& v, const std::vector<double>& k) {
    ComplexVector out;
    out.reserve(static_cast<std::size_t>(v.size()));
    for (const LaurentPoly& p : v.comps()) {
        out.push_back(p.eval(k));
    }
    return out;
}

ComplexMatrix eval_at(const SymbolMatrix& m, const std::vector<double>& k) {
    ComplexMatrix out;
    out.reserve(static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i) {
        ComplexVector row;
        row.reserve(static_cast<std::size_t>(m.size()));
        for (int j = 0; j < m.size(); ++j) {
            row.push_back(m.at(i, j).eval(k));
        }
        out.push_back(std::move(row));
    }
    return out;
}

double eigen_residual(const Coin& c, const SymbolVector& v, const std::vector<double>& k) {
    if (c.dim() != v.dim()) {
        throw DimensionError("coin and symbol vector dimension mismatch");
    }
    if (static_cast<int>(k.size()) != c.dim()) {
        throw DimensionError("evaluation point has wrong dimension");
    }
    const SymbolMatrix m = symbol_matrix(c);
    std::vector<std::complex<long double>> w;
    w.reserve(static_cast<std::size_t>(v.size()));
    for (const LaurentPoly& p : v.comps()) {
        w.push_back(eval_extended(p, k));
    }
    long double sum = 0.0L;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::complex<long double> r(0.0L, 0.0L);
        for (std::size_t j = 0; j < w.size(); ++j) {
            r += eval_extended(m.at(static_cast<int>(i), static_cast<int>(j)), k) * w[j];
        }
        r -= w[i];
        sum += std::norm(r);
    }
    return static_cast<double>(std::sqrt(sum));
}

std::vector<std::vector<double>> sample_wavevectors(int d, int count, std::uint64_t seed) {
    if (d < 1 || count < 0) {
        throw std::invalid_argument("need d >= 1 and count >= 0");
    }
    std::mt19937_64 eng(seed);
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        std::vector<double> k(static_cast<std::size_t>(d));
        for (double& ki : k) {
            // 53 uniform bits -> [0,1); avoids distribution objects, whose
            // output is implementation-defined.
            ki = static_cast<double>(eng() >> 11) * 0x1.0p-53 * two_pi;
        }
        out.push_back(std::move(k));
    }
    return out;
}

bool symbolic_fixed_point_check(const Coin& c, const SymbolVector& v) {
    if (c.dim() != v.dim()) {
        throw DimensionError("coin and symbol vector dimension mismatch");
    }
    if (c.backend() != Backend::Exact || v.backend() != Backend::Exact) {
        throw BackendError("symbolic fixed-point check requires the exact backend");
    }
    const SymbolMatrix m = symbol_matrix(c);
    for (int i = 0; i < m.size(); ++i) {
        LaurentPoly acc(v.dim(), Backend::Exact);
        for (int j = 0; j < m.size(); ++j) {
            acc = acc + m.at(i, j) * v[j];
        }
        if (!((acc - v[i]).is_zero())) {
            return false;
        }
    }
    return true;
}

}  // namespace qwalk
