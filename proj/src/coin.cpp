#include "qwalk/coin.hpp"

#include <cmath>
#include <utility>

namespace qwalk {

Coin::Coin(int d, ScalarMatrix entries, std::string kind, double tol)
    : d_(d), backend_(Backend::Exact), kind_(std::move(kind)), entries_(std::move(entries)) {
    if (d_ < 1) {
        throw std::invalid_argument("coin dimension must be >= 1");
    }
    const std::size_t n = static_cast<std::size_t>(2 * d_);
    if (entries_.size() != n) {
        throw DimensionError("coin matrix must be 2d x 2d");
    }
    backend_ = entries_.front().front().backend();
    for (const auto& row : entries_) {
        if (row.size() != n) {
            throw DimensionError("coin matrix must be 2d x 2d");
        }
        for (const Scalar& e : row) {
            if (e.backend() != backend_) {
                throw BackendError("coin entries mix backends");
            }
        }
    }
    if (!is_unitary(*this, tol)) {
        throw std::invalid_argument("coin matrix is not unitary");
    }
}

const Scalar& Coin::at(int i, int j) const {
    return entries_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

const std::vector<Scalar>& Coin::row(int i) const {
    return entries_.at(static_cast<std::size_t>(i));
}

Coin Coin::to_float() const {
    ScalarMatrix out;
    out.reserve(entries_.size());
    for (const auto& row : entries_) {
        std::vector<Scalar> r;
        r.reserve(row.size());
        for (const Scalar& e : row) {
            r.push_back(e.to_float());
        }
        out.push_back(std::move(r));
    }
    return Coin(d_, std::move(out), kind_);
}

bool Coin::operator==(const Coin& o) const {
    if (d_ != o.d_ || backend_ != o.backend_) {
        return false;
    }
    for (int i = 0; i < size(); ++i) {
        for (int j = 0; j < size(); ++j) {
            if (at(i, j) != o.at(i, j)) {
                return false;
            }
        }
    }
    return true;
}

Coin grover(int d, Backend b) {
    if (d < 1) {
        throw std::invalid_argument("grover coin requires d >= 1");
    }
    const int n = 2 * d;
    ScalarMatrix m;
    m.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            if (b == Backend::Exact) {
                Rational v = Rational(2, n) - Rational(i == j ? 1 : 0);
                row.push_back(Scalar::exact(std::move(v)));
            } else {
                row.push_back(Scalar::floating(2.0 / n - (i == j ? 1.0 : 0.0)));
            }
        }
        m.push_back(std::move(row));
    }
    return Coin(d, std::move(m), "grover");
}

namespace {

ScalarMatrix watabe_entries(const Scalar& p, const Scalar& q, const Scalar& s) {
    return {
        {-p, q, s, s},
        {q, -p, s, s},
        {s, s, -q, p},
        {s, s, p, -q},
    };
}

}  // namespace

Coin watabe(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("watabe coin requires 0 < p < 1");
    }
    const double q = 1.0 - p;
    const double s = std::sqrt(p * q);
    return Coin(2, watabe_entries(Scalar::floating(p), Scalar::floating(q), Scalar::floating(s)),
                "watabe");
}

Coin watabe_exact(const Rational& p) {
    if (!(p > 0 && p < 1)) {
        throw std::invalid_argument("watabe coin requires 0 < p < 1");
    }
    const Rational q = 1 - p;
    const auto s = rational_sqrt(p * q);
    if (!s) {
        throw BackendError("sqrt(p(1-p)) is irrational; use the float backend");
    }
    return Coin(2, watabe_entries(Scalar::exact(p), Scalar::exact(q), Scalar::exact(*s)),
                "watabe");
}

bool is_unitary(const Coin& c, double tol) {
    const int n = c.size();
    const Backend b = c.backend();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // (A* A)_ij = sum_k conj(a_ki) a_kj
            Scalar s = Scalar::zero(b);
            for (int k = 0; k < n; ++k) {
                s = s + c.at(k, i).conj() * c.at(k, j);
            }
            const Scalar target = i == j ? Scalar::one(b) : Scalar::zero(b);
            if (b == Backend::Exact) {
                if (s != target) {
                    return false;
                }
            } else {
                if (std::abs(s.to_complex() - target.to_complex()) > tol) {
                    return false;
                }
            }
        }
    }
    return true;
}

ScalarMatrix row_projection(const Coin& c, int i) {
    const int n = c.size();
    if (i < 0 || i >= n) {
        throw std::out_of_range("row projection index out of range");
    }
    ScalarMatrix out(static_cast<std::size_t>(n),
                     std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero(c.backend())));
    out[static_cast<std::size_t>(i)] = c.row(i);
    return out;
}

}  // namespace qwalk
