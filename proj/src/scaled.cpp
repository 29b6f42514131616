#include "udw/scaled.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace udw {

Scaled::Scaled(std::complex<double> mantissa, double log_scale) : mant_(mantissa), log_(log_scale)
{
    normalize();
}

Scaled Scaled::exp_of(std::complex<double> z)
{
    return Scaled(std::polar(1.0, z.imag()), z.real());
}

void Scaled::normalize()
{
    const double m = std::abs(mant_);
    if (m == 0.0 || !std::isfinite(m)) {
        if (m == 0.0) {
            mant_ = {0.0, 0.0};
            log_ = 0.0;
        }
        return;
    }
    // Keep |mantissa| in [1, 2) so products never overflow.
    int e = 0;
    std::frexp(m, &e);
    const int shift = e - 1;
    if (shift != 0) {
        mant_ = std::ldexp(1.0, -shift) * mant_;
        log_ += shift * std::log(2.0);
    }
}

std::complex<double> Scaled::value() const
{
    if (is_zero()) {
        return {0.0, 0.0};
    }
    return mant_ * std::exp(log_);
}

double Scaled::log_abs() const
{
    if (is_zero()) {
        return -std::numeric_limits<double>::infinity();
    }
    return std::log(std::abs(mant_)) + log_;
}

double Scaled::abs() const
{
    return is_zero() ? 0.0 : std::exp(log_abs());
}

double Scaled::abs_ratio(const Scaled& other) const
{
    if (is_zero()) {
        return 0.0;
    }
    if (other.is_zero()) {
        return std::numeric_limits<double>::infinity();
    }
    return std::exp(log_abs() - other.log_abs());
}

Scaled Scaled::operator/(const Scaled& o) const
{
    return Scaled(mant_ / o.mant_, log_ - o.log_);
}

Scaled Scaled::operator+(const Scaled& o) const
{
    if (is_zero()) {
        return o;
    }
    if (o.is_zero()) {
        return *this;
    }
    const double top = std::max(log_, o.log_);
    return Scaled(mant_ * std::exp(log_ - top) + o.mant_ * std::exp(o.log_ - top), top);
}

Scaled linear_combination(std::span<const std::complex<double>> coeffs,
                          std::span<const Scaled> terms)
{
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < terms.size(); ++j) {
        if (coeffs[j] != std::complex<double>(0.0, 0.0) && !terms[j].is_zero()) {
            top = std::max(top, terms[j].log_scale());
        }
    }
    if (!std::isfinite(top)) {
        return {};
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < terms.size(); ++j) {
        if (coeffs[j] != std::complex<double>(0.0, 0.0) && !terms[j].is_zero()) {
            acc += coeffs[j] * terms[j].mantissa() * std::exp(terms[j].log_scale() - top);
        }
    }
    return Scaled(acc, top);
}

double relative_difference(const Scaled& a, const Scaled& b)
{
    if (a.is_zero() && b.is_zero()) {
        return 0.0;
    }
    const Scaled d = a - b;
    const Scaled& big = a.log_abs() >= b.log_abs() ? a : b;
    return d.abs_ratio(big);
}

}  // namespace udw
