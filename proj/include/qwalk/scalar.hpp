#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace qwalk {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Thrown when values from different numeric backends meet in one computation.
struct BackendError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown on lattice-dimension or vector-length mismatches.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Backend { Exact, Float };

std::string to_string(Backend b);

/// Parses "num/den" or "num" (decimal digits, optional sign) into a canonical
/// rational. Rejects zero denominators and malformed input.
Rational parse_rational(const std::string& s);

/// Formats a rational as "num/den", denominator always explicit.
std::string rational_string(const Rational& r);

/// Exact square root of a nonnegative rational, if one exists.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Complex number over one of two backends: exact Gaussian rationals or a
/// binary64 pair. Arithmetic requires both operands on the same backend;
/// mixing throws BackendError rather than coercing.
class Scalar {
public:
    static Scalar exact(Rational re, Rational im = Rational(0));
    static Scalar floating(double re, double im = 0.0);
    static Scalar zero(Backend b);
    static Scalar one(Backend b);

    Backend backend() const noexcept;
    bool is_zero() const;
    bool is_real() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;

    Scalar conj() const;
    /// |z|^2 = re^2 + im^2, on the same backend (exact rationals stay exact).
    Scalar norm_sq() const;

    // Same-backend comparison; comparing across backends throws BackendError.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const Rational& exact_re() const;
    const Rational& exact_im() const;
    double float_re() const;
    double float_im() const;

    /// Lossy view as complex<double>; valid for both backends.
    std::complex<double> to_complex() const;
    /// Explicit conversion to the float backend.
    Scalar to_float() const;

private:
    struct ExactVal {
        Rational re, im;
    };
    using ExactPtr = std::shared_ptr<const ExactVal>;

    explicit Scalar(std::complex<double> z);
    explicit Scalar(ExactPtr p) : v_(std::move(p)) {}

    const ExactVal& ex() const { return *std::get<ExactPtr>(v_); }
    const std::complex<double>& fl() const { return std::get<std::complex<double>>(v_); }

    std::variant<std::complex<double>, ExactPtr> v_;
};

}  // namespace qwalk
