#include "partsum/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "partsum/combinatorics.hpp"

namespace partsum {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coeff_(std::move(coefficients)) {
    if (coeff_.empty())
        throw std::invalid_argument("TruncatedSeries: needs at least c_0");
}

TruncatedSeries TruncatedSeries::zero(unsigned order) {
    return TruncatedSeries(std::vector<Rational>(order + 1));
}

TruncatedSeries TruncatedSeries::one(unsigned order) {
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (unsigned i = 0; i <= order; ++i) c[i] = a.coeff_[i] + b.coeff_[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (unsigned i = 0; i <= order; ++i) c[i] = a.coeff_[i] - b.coeff_[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator-() const {
    std::vector<Rational> c(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i) c[i] = -coeff_[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (unsigned i = 0; i <= order; ++i)
        for (unsigned k = 0; k <= i; ++k) c[i] += a.coeff_[k] * b.coeff_[i - k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeff_[0].is_zero())
        throw std::domain_error("TruncatedSeries::inverse: c_0 = 0");
    std::vector<Rational> b(coeff_.size());
    b[0] = Rational(1) / coeff_[0];
    for (std::size_t i = 1; i < coeff_.size(); ++i) {
        Rational conv;
        for (std::size_t k = 1; k <= i; ++k) conv += coeff_[k] * b[i - k];
        b[i] = -conv / coeff_[0];
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (coeff_.size() == 1) return zero(0);
    std::vector<Rational> c(coeff_.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = Rational(static_cast<long>(i) + 1) * coeff_[i + 1];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::log() const {
    if (coeff_[0] != Rational(1))
        throw std::domain_error("TruncatedSeries::log: c_0 must be 1");
    // Antiderivative of a'/a; regains the degree lost to differentiation.
    TruncatedSeries quotient = derivative() * inverse();
    std::vector<Rational> c(coeff_.size());
    for (std::size_t i = 1; i < coeff_.size(); ++i)
        c[i] = quotient[static_cast<unsigned>(i - 1)] / Rational(static_cast<long>(i));
    return TruncatedSeries(std::move(c));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned order = std::min(a.order(), b.order());
    for (unsigned i = 0; i <= order; ++i)
        if (a.coeff_[i] != b.coeff_[i]) return false;
    return true;
}

TruncatedSeries gf_central(unsigned order) {
    std::vector<Rational> c(order + 1);
    for (unsigned n = 0; n <= order; ++n) c[n] = Rational(binomial(2 * n, n));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries gf_n_central(unsigned order) {
    std::vector<Rational> c(order + 1);
    for (unsigned n = 0; n <= order; ++n)
        c[n] = Rational(BigInt(n) * binomial(2 * n, n));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries gf_invodd_central(unsigned order) {
    std::vector<Rational> c(order + 1);
    for (unsigned n = 0; n <= order; ++n)
        c[n] = Rational(binomial(2 * n, n), BigInt(2 * static_cast<long>(n) - 1));
    return TruncatedSeries(std::move(c));
}

namespace {

SeriesCheck check_against(const TruncatedSeries& computed,
                          const std::vector<Rational>& expected) {
    SeriesCheck check;
    check.coefficients.assign(computed.coefficients().begin(),
                              computed.coefficients().end());
    check.ok = true;
    for (unsigned m = 0; m < expected.size(); ++m) {
        if (computed[m] != expected[m]) {
            check.ok = false;
            check.first_mismatch = m;
            break;
        }
    }
    return check;
}

}  // namespace

SeriesCheck check_logderiv_plain(unsigned order) {
    if (order < 1) throw std::invalid_argument("check_logderiv_plain: order >= 1");
    TruncatedSeries d = gf_central(order).log().derivative();
    std::vector<Rational> expected(order);
    for (unsigned m = 0; m < order; ++m)
        expected[m] = Rational(BigInt(BigInt(1) << (2 * m + 1)));  // 2*4^m
    return check_against(d, expected);
}

SeriesCheck check_logderiv_alternating(unsigned order) {
    if (order < 1) throw std::invalid_argument("check_logderiv_alternating: order >= 1");
    std::vector<Rational> g(order + 1);
    g[0] = 1;
    for (unsigned n = 1; n <= order; ++n) {
        BigInt num = binomial(2 * n, n);
        if (n % 2 == 0) num = -num;
        g[n] = Rational(num, BigInt(2 * static_cast<long>(n) - 1));
    }
    TruncatedSeries d = TruncatedSeries(std::move(g)).log().derivative();
    std::vector<Rational> expected(order);
    for (unsigned m = 0; m < order; ++m) {
        BigInt value = BigInt(1) << (2 * m + 1);
        if (m % 2 == 1) value = -value;
        expected[m] = Rational(value);
    }
    return check_against(d, expected);
}

}  // namespace partsum
