#include "qwalk/scalar.hpp"

#include <cmath>

namespace qwalk {

std::string to_string(Backend b) {
    return b == Backend::Exact ? "exact" : "float";
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
            throw std::invalid_argument("invalid rational literal: '" + s + "'");
        }
    }
    Rational r;
    try {
        r = Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational literal: '" + s + "'");
    }
    if (denominator(r) == 0) {
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    }
    // GMP string parsing does not canonicalize (e.g. "4/8", "1/-2").
    mpq_canonicalize(r.backend().data());
    return r;
}

std::string rational_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) {
        return std::nullopt;
    }
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    const BigInt num_root = sqrt(num);
    const BigInt den_root = sqrt(den);
    if (num_root * num_root != num || den_root * den_root != den) {
        return std::nullopt;
    }
    return Rational(num_root, den_root);
}

Scalar::Scalar(std::complex<double> z) : v_(z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::domain_error("non-finite float scalar");
    }
}

Scalar Scalar::exact(Rational re, Rational im) {
    return Scalar(std::make_shared<const ExactVal>(std::move(re), std::move(im)));
}

Scalar Scalar::floating(double re, double im) {
    return Scalar(std::complex<double>(re, im));
}

Scalar Scalar::zero(Backend b) {
    return b == Backend::Exact ? exact(0) : floating(0.0);
}

Scalar Scalar::one(Backend b) {
    return b == Backend::Exact ? exact(1) : floating(1.0);
}

Backend Scalar::backend() const noexcept {
    return std::holds_alternative<ExactPtr>(v_) ? Backend::Exact : Backend::Float;
}

bool Scalar::is_zero() const {
    if (backend() == Backend::Exact) {
        return ex().re.is_zero() && ex().im.is_zero();
    }
    return fl() == std::complex<double>(0.0, 0.0);
}

bool Scalar::is_real() const {
    return backend() == Backend::Exact ? ex().im.is_zero() : fl().imag() == 0.0;
}

namespace {

[[noreturn]] void throw_mixed(const char* op) {
    throw BackendError(std::string("backend mismatch in scalar ") + op);
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (backend() != o.backend()) throw_mixed("addition");
    if (backend() == Backend::Exact) {
        return exact(ex().re + o.ex().re, ex().im + o.ex().im);
    }
    return Scalar(fl() + o.fl());
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (backend() != o.backend()) throw_mixed("subtraction");
    if (backend() == Backend::Exact) {
        return exact(ex().re - o.ex().re, ex().im - o.ex().im);
    }
    return Scalar(fl() - o.fl());
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (backend() != o.backend()) throw_mixed("multiplication");
    if (backend() == Backend::Exact) {
        const ExactVal& a = ex();
        const ExactVal& b = o.ex();
        return exact(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    return Scalar(fl() * o.fl());
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (backend() != o.backend()) throw_mixed("division");
    if (o.is_zero()) {
        throw std::domain_error("scalar division by zero");
    }
    if (backend() == Backend::Exact) {
        const ExactVal& a = ex();
        const ExactVal& b = o.ex();
        const Rational den = b.re * b.re + b.im * b.im;
        return exact((a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den);
    }
    return Scalar(fl() / o.fl());
}

Scalar Scalar::operator-() const {
    if (backend() == Backend::Exact) {
        return exact(-ex().re, -ex().im);
    }
    return Scalar(-fl());
}

Scalar Scalar::conj() const {
    if (backend() == Backend::Exact) {
        return exact(ex().re, -ex().im);
    }
    return Scalar(std::conj(fl()));
}

Scalar Scalar::norm_sq() const {
    if (backend() == Backend::Exact) {
        return exact(ex().re * ex().re + ex().im * ex().im);
    }
    return Scalar(std::complex<double>(std::norm(fl()), 0.0));
}

bool Scalar::operator==(const Scalar& o) const {
    if (backend() != o.backend()) throw_mixed("comparison");
    if (backend() == Backend::Exact) {
        return ex().re == o.ex().re && ex().im == o.ex().im;
    }
    return fl() == o.fl();
}

const Rational& Scalar::exact_re() const {
    if (backend() != Backend::Exact) throw BackendError("exact_re on float scalar");
    return ex().re;
}

const Rational& Scalar::exact_im() const {
    if (backend() != Backend::Exact) throw BackendError("exact_im on float scalar");
    return ex().im;
}

double Scalar::float_re() const {
    if (backend() != Backend::Float) throw BackendError("float_re on exact scalar");
    return fl().real();
}

double Scalar::float_im() const {
    if (backend() != Backend::Float) throw BackendError("float_im on exact scalar");
    return fl().imag();
}

std::complex<double> Scalar::to_complex() const {
    if (backend() == Backend::Exact) {
        return {ex().re.convert_to<double>(), ex().im.convert_to<double>()};
    }
    return fl();
}

Scalar Scalar::to_float() const {
    if (backend() == Backend::Float) {
        return *this;
    }
    return Scalar(to_complex());
}

}  // namespace qwalk
