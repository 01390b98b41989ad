#pragma once

#include <optional>
#include <span>
#include <vector>

#include "partsum/rational.hpp"

namespace partsum {

/// Formal power series truncated at z^M: exact rational coefficients
/// c_0..c_M. Arithmetic results carry the minimum order of the operands;
/// differentiation drops one degree.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Rational> coefficients);
    static TruncatedSeries zero(unsigned order);
    static TruncatedSeries one(unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeff_.size()) - 1; }
    const Rational& operator[](unsigned i) const { return coeff_.at(i); }
    std::span<const Rational> coefficients() const { return coeff_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;

    /// Cauchy product up to the shared order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Multiplicative inverse (c_0 != 0): a * inverse(a) = 1 up to order.
    TruncatedSeries inverse() const;

    /// d/dz: c_n <- (n+1) c_{n+1}, order M-1. The derivative of an order-0
    /// series is the zero series of order 0.
    TruncatedSeries derivative() const;

    /// log(a) for a with c_0 = 1, computed as the antiderivative of a'/a;
    /// keeps order M.
    TruncatedSeries log() const;

    /// Coefficient-wise exact equality up to the shared order.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<Rational> coeff_;
};

/// c_n = C(2n, n).
TruncatedSeries gf_central(unsigned order);
/// c_n = n C(2n, n).
TruncatedSeries gf_n_central(unsigned order);
/// c_n = C(2n, n) / (2n - 1); c_0 = -1.
TruncatedSeries gf_invodd_central(unsigned order);

struct SeriesCheck {
    bool ok = false;
    std::optional<unsigned> first_mismatch;
    std::vector<Rational> coefficients;  // witness: the computed series
};

/// Asserts d/dz log(gf_central) has c_m = 2*4^m for all m <= M-1.
SeriesCheck check_logderiv_plain(unsigned order);

/// Same for the alternating chain: G with c_0 = 1 and
/// c_n = (-1)^(n-1) C(2n,n)/(2n-1); expects c_m = (-1)^m 2*4^m.
SeriesCheck check_logderiv_alternating(unsigned order);

}  // namespace partsum
