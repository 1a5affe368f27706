#pragma once

#include <map>
#include <string>
#include <vector>

#include "shiftlab/rational.hpp"

namespace shiftlab {

// q^base * sum_n coeffs[n] q^{n/grid}, known exactly for every exponent <= top.
// Either coeffs[0] != 0, or the series is the canonical zero (base 0, no coeffs).
class QSeries {
public:
    QSeries() = default;

    static QSeries zero(const Rat& top, long grid = 1);
    static QSeries monomial(const Rat& exponent, const BigInt& coeff, long grid, const Rat& top);
    // Terms keyed by exponent; each exponent must sit on base + Z/grid for the smallest one.
    static QSeries from_terms(const std::map<Rat, BigInt>& terms, long grid, const Rat& top);
    static QSeries from_coeffs(const Rat& base, long grid, std::vector<BigInt> coeffs, const Rat& top);

    bool is_zero() const { return coeffs_.empty(); }
    const Rat& base() const { return base_; }
    long grid() const { return grid_; }
    const Rat& top() const { return top_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    long order() const { return static_cast<long>(coeffs_.size()) - 1; }  // grid units past base
    BigInt coeff_at(const Rat& exponent) const;
    std::map<Rat, BigInt> terms() const;  // nonzero terms only

    QSeries regrid(long new_grid) const;  // new_grid must be a multiple of grid
    QSeries truncate(const Rat& new_top) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator-() const;
    friend bool operator==(const QSeries& a, const QSeries& b);
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    QSeries scale(const Rat& c) const;
    QSeries qshift(const Rat& delta) const;
    QSeries resample(const Rat& t) const;  // q -> q^t, t > 0

    // Same exponents and top; used by the serial/parallel comparisons.
    QSeries mul_serial(const QSeries& b) const;

    std::string str(int max_terms = 12) const;

private:
    void normalize();

    Rat base_ = 0;
    long grid_ = 1;
    std::vector<BigInt> coeffs_;
    Rat top_ = 0;
};

long unify_grid(long a, long b);

// Truncated convolution: out[k] = sum_{i+j=k} a[i] b[j] for k < n_out.
std::vector<BigInt> conv_serial(const std::vector<BigInt>& a, const std::vector<BigInt>& b, size_t n_out);
std::vector<BigInt> conv_parallel(const std::vector<BigInt>& a, const std::vector<BigInt>& b, size_t n_out);

// q^{-r/24} prod (1-q^n)^{-r}, coefficients up to q^{-r/24 + order}.
QSeries eta_inv_pow(int r, long order);
// q^{r/24} prod (1-q^n)^r.
QSeries eta_pow(int r, long order);

enum class FermionKind { NS, NSSuper, Ramond };
// NS: q^{-1/48} prod (1+q^{n-1/2}); NSSuper: signs alternate; Ramond: 2 q^{1/24} prod (1+q^n).
QSeries fermion_char(FermionKind kind, long order);

// prod_{n >= from} (1 - q^n)^{-1} up to q^order, grid 1.
QSeries partial_euler_inv(long from, long order);

}  // namespace shiftlab
