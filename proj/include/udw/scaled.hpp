#pragma once

// Complex numbers carried as mantissa * exp(log_scale).
//
// Gaussian-switched amplitudes pick up factors like exp(-Omega^2 T^2 / 2),
// which underflow a double long before Omega*T = 50. Ratios and differences of
// such amplitudes are still well defined, so the bilinear engine returns its
// results in this form and only converts to plain doubles at the end.

#include <complex>
#include <span>

namespace udw {

class Scaled {
public:
    Scaled() = default;
    Scaled(std::complex<double> mantissa, double log_scale);
    static Scaled from(std::complex<double> z) { return Scaled(z, 0.0); }
    /// exp(z) without forming it: mantissa exp(i Im z), scale Re z.
    static Scaled exp_of(std::complex<double> z);

    bool is_zero() const { return mant_ == std::complex<double>(0.0, 0.0); }
    std::complex<double> mantissa() const { return mant_; }
    double log_scale() const { return log_; }

    /// Physical value; underflows to zero where the true value is below DBL_MIN.
    std::complex<double> value() const;
    /// log|z|, -inf for zero.
    double log_abs() const;

    Scaled conj() const { return Scaled(std::conj(mant_), log_); }
    Scaled operator-() const { return Scaled(-mant_, log_); }
    Scaled operator*(std::complex<double> c) const { return Scaled(mant_ * c, log_); }
    Scaled operator*(const Scaled& o) const { return Scaled(mant_ * o.mant_, log_ + o.log_); }
    Scaled operator/(const Scaled& o) const;
    Scaled operator+(const Scaled& o) const;
    Scaled operator-(const Scaled& o) const { return *this + (-o); }

    /// |z|, possibly underflowing.
    double abs() const;
    /// |this| / |other| evaluated without forming either magnitude.
    double abs_ratio(const Scaled& other) const;

private:
    void normalize();
    std::complex<double> mant_{0.0, 0.0};
    double log_ = 0.0;
};

/// sum_j coeffs[j] * terms[j], combined at the largest scale present.
Scaled linear_combination(std::span<const std::complex<double>> coeffs,
                          std::span<const Scaled> terms);

/// |a - b| / max(|a|, |b|), zero when both vanish.
double relative_difference(const Scaled& a, const Scaled& b);

}  // namespace udw
