#pragma once

// Plain-integer reference series for the tests; nothing here goes through QSeries.

#include <gmpxx.h>

#include <vector>

namespace oracle {

using Coeffs = std::vector<mpz_class>;

// prod over parts of (1 - q^part)^{-1}, coefficients 0..n
inline Coeffs euler_inv(const std::vector<long>& parts, long n) {
    Coeffs c(static_cast<size_t>(n + 1), 0);
    c[0] = 1;
    for (long part : parts)
        for (long k = part; k <= n; ++k) c[k] += c[k - part];
    return c;
}

inline std::vector<long> parts_from(long lo, long hi) {
    std::vector<long> v;
    for (long x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

// prod_{n >= 2} (1 - q^n)^{-1} by listing partitions one at a time
inline Coeffs parts_at_least_two(long n) {
    Coeffs c(static_cast<size_t>(n + 1), 0);
    // stack of (remaining, smallest allowed part)
    std::vector<std::pair<long, long>> todo;
    for (long total = 0; total <= n; ++total) {
        todo.assign(1, {total, 2});
        long count = 0;
        while (!todo.empty()) {
            auto [rest, lo] = todo.back();
            todo.pop_back();
            if (rest == 0) {
                ++count;
                continue;
            }
            for (long part = lo; part <= rest; ++part) todo.push_back({rest - part, part});
        }
        c[total] = count;
    }
    return c;
}

// prod over the exponents e of prod_{n > e} (1 - q^n)^{-1}
inline Coeffs walg_vacuum(const std::vector<int>& exponents, long n) {
    std::vector<long> parts;
    for (int e : exponents)
        for (long k = e + 1; k <= n; ++k) parts.push_back(k);
    return euler_inv(parts, n);
}

// prod_{k >= 3/2, k half-odd} (1 + q^k) in half-units, 0..2n
inline Coeffs half_odd_fermions(long n) {
    Coeffs c(static_cast<size_t>(2 * n + 1), 0);
    c[0] = 1;
    for (long part = 3; part <= 2 * n; part += 2)
        for (long k = 2 * n; k >= part; --k) c[k] += c[k - part];
    return c;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, size_t n) {
    Coeffs c(n, 0);
    for (size_t i = 0; i < a.size() && i < n; ++i)
        for (size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace oracle
