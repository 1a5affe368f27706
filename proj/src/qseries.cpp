#include "shiftlab/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "shiftlab/config.hpp"

namespace shiftlab {

namespace {

long checked_grid(long g) {
    if (g <= 0) throw std::invalid_argument("grid must be positive");
    if (g > caps().grid)
        throw SizeError("exponent grid " + std::to_string(g) + " exceeds the grid cap " + std::to_string(caps().grid));
    return g;
}

long index_span(const Rat& from, const Rat& to, long grid) {
    // number of grid steps n >= 0 with from + n/grid <= to, minus one
    Rat span = (to - from) * grid;
    return to_long(floor_rat(span));
}

bool fits_i64(const std::vector<BigInt>& v, unsigned long& max_bits) {
    max_bits = 0;
    for (const auto& x : v) {
        if (!x.fits_slong_p()) return false;
        max_bits = std::max<unsigned long>(max_bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    }
    return true;
}

BigInt from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt hi = static_cast<unsigned long>(u >> 64);
    BigInt lo = static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    BigInt out = (hi << 64) + lo;
    return neg ? BigInt(-out) : out;
}

}  // namespace

long unify_grid(long a, long b) { return checked_grid(lcm_long(a, b)); }

QSeries QSeries::zero(const Rat& top, long grid) {
    QSeries s;
    s.grid_ = checked_grid(grid);
    s.top_ = top;
    return s;
}

QSeries QSeries::monomial(const Rat& exponent, const BigInt& coeff, long grid, const Rat& top) {
    QSeries s;
    s.grid_ = checked_grid(grid);
    s.base_ = exponent;
    s.top_ = top;
    if (coeff != 0 && exponent <= top) s.coeffs_.push_back(coeff);
    s.normalize();
    return s;
}

QSeries QSeries::from_coeffs(const Rat& base, long grid, std::vector<BigInt> coeffs, const Rat& top) {
    QSeries s;
    s.grid_ = checked_grid(grid);
    s.base_ = base;
    s.coeffs_ = std::move(coeffs);
    s.top_ = top;
    s.normalize();
    return s;
}

QSeries QSeries::from_terms(const std::map<Rat, BigInt>& terms, long grid, const Rat& top) {
    QSeries s;
    s.grid_ = checked_grid(grid);
    s.top_ = top;
    Rat lo;
    bool have = false;
    for (const auto& [e, c] : terms)
        if (c != 0 && e <= top) {
            lo = e;
            have = true;
            break;
        }
    if (!have) return s;
    s.base_ = lo;
    s.coeffs_.assign(static_cast<size_t>(index_span(lo, top, grid) + 1), BigInt(0));
    for (const auto& [e, c] : terms) {
        if (c == 0 || e > top || e < lo) continue;
        Rat idx = (e - lo) * grid;
        if (!is_integer(idx))
            throw std::invalid_argument("exponent " + rat_str(e) + " is off the grid 1/" + std::to_string(grid));
        s.coeffs_[static_cast<size_t>(to_long(idx))] += c;
    }
    s.normalize();
    return s;
}

void QSeries::normalize() {
    size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        base_ = 0;
        return;
    }
    if (first > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
        base_ += make_rat(static_cast<long>(first), grid_);
        base_.canonicalize();
    }
    if (base_ > top_) {
        coeffs_.clear();
        base_ = 0;
        return;
    }
    size_t keep = static_cast<size_t>(index_span(base_, top_, grid_) + 1);
    if (coeffs_.size() > keep) coeffs_.resize(keep);
}

BigInt QSeries::coeff_at(const Rat& exponent) const {
    if (exponent > top_)
        throw std::out_of_range("exponent " + rat_str(exponent) + " beyond truncation " + rat_str(top_));
    if (is_zero() || exponent < base_) return 0;
    Rat idx = (exponent - base_) * grid_;
    if (!is_integer(idx)) return 0;
    long i = to_long(idx);
    if (i >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

std::map<Rat, BigInt> QSeries::terms() const {
    std::map<Rat, BigInt> out;
    for (size_t n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n] == 0) continue;
        Rat e = base_ + make_rat(static_cast<long>(n), grid_);
        e.canonicalize();
        out.emplace(e, coeffs_[n]);
    }
    return out;
}

QSeries QSeries::regrid(long new_grid) const {
    checked_grid(new_grid);
    if (new_grid % grid_ != 0)
        throw std::invalid_argument("regrid target " + std::to_string(new_grid) + " is not a multiple of " +
                                    std::to_string(grid_));
    if (new_grid == grid_) return *this;
    QSeries s;
    s.grid_ = new_grid;
    s.top_ = top_;
    s.base_ = base_;
    if (is_zero()) return s;
    long f = new_grid / grid_;
    size_t len = static_cast<size_t>(index_span(base_, top_, new_grid) + 1);
    s.coeffs_.assign(len, BigInt(0));
    for (size_t n = 0; n < coeffs_.size(); ++n) {
        size_t k = n * static_cast<size_t>(f);
        if (k < len) s.coeffs_[k] = coeffs_[n];
    }
    s.normalize();
    return s;
}

QSeries QSeries::truncate(const Rat& new_top) const {
    if (new_top > top_)
        throw std::invalid_argument("cannot extend truncation from " + rat_str(top_) + " to " + rat_str(new_top));
    QSeries s(*this);
    s.top_ = new_top;
    s.normalize();
    return s;
}

namespace {

// Common grid for a and b that also places both bases on one lattice.
long joint_grid(const QSeries& a, const QSeries& b) {
    long g = lcm_long(a.grid(), b.grid());
    if (!a.is_zero() && !b.is_zero()) {
        Rat off = a.base() - b.base();
        g = lcm_long(g, to_long(BigInt(off.get_den())));
    }
    return checked_grid(g);
}

}  // namespace

QSeries operator+(const QSeries& a, const QSeries& b) {
    long g = joint_grid(a, b);
    Rat top = std::min(a.top_, b.top_);
    if (a.is_zero()) return b.regrid(g).truncate(top);
    if (b.is_zero()) return a.regrid(g).truncate(top);
    QSeries x = a.regrid(g), y = b.regrid(g);
    Rat base = std::min(x.base_, y.base_);
    QSeries s;
    s.grid_ = g;
    s.top_ = top;
    s.base_ = base;
    if (base > top) {
        s.normalize();
        return s;
    }
    s.coeffs_.assign(static_cast<size_t>(index_span(base, top, g) + 1), BigInt(0));
    for (const QSeries* src : {&x, &y}) {
        long off = to_long((src->base_ - base) * g);
        for (size_t n = 0; n < src->coeffs_.size(); ++n) {
            size_t k = static_cast<size_t>(off) + n;
            if (k < s.coeffs_.size()) s.coeffs_[k] += src->coeffs_[n];
        }
    }
    s.normalize();
    return s;
}

QSeries QSeries::operator-() const {
    QSeries s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

namespace {

QSeries multiply(const QSeries& a, const QSeries& b, bool parallel) {
    long g = unify_grid(a.grid(), b.grid());
    // a zero factor is only known to vanish up to its top
    Rat ea = a.is_zero() ? a.top() : a.base();
    Rat eb = b.is_zero() ? b.top() : b.base();
    Rat top = std::min(a.top() + eb, b.top() + ea);
    if (a.is_zero() || b.is_zero()) return QSeries::zero(top, g);
    QSeries x = a.regrid(g), y = b.regrid(g);
    Rat base = x.base() + y.base();
    if (base > top) return QSeries::zero(top, g);
    size_t n_out = static_cast<size_t>(to_long(floor_rat((top - base) * g)) + 1);
    auto c = parallel ? conv_parallel(x.coeffs(), y.coeffs(), n_out) : conv_serial(x.coeffs(), y.coeffs(), n_out);
    return QSeries::from_coeffs(base, g, std::move(c), top);
}

}  // namespace

QSeries operator*(const QSeries& a, const QSeries& b) { return multiply(a, b, true); }

QSeries QSeries::mul_serial(const QSeries& b) const { return multiply(*this, b, false); }

bool operator==(const QSeries& a, const QSeries& b) { return a.top_ == b.top_ && a.terms() == b.terms(); }

QSeries QSeries::scale(const Rat& c) const {
    QSeries s(*this);
    for (auto& x : s.coeffs_) {
        Rat v = Rat(x) * c;
        if (!is_integer(v)) throw std::domain_error("scaling by " + rat_str(c) + " leaves a non-integral coefficient");
        x = v.get_num();
    }
    s.normalize();
    return s;
}

QSeries QSeries::qshift(const Rat& delta) const {
    QSeries s(*this);
    s.top_ += delta;
    if (!s.is_zero()) s.base_ += delta;
    return s;
}

QSeries QSeries::resample(const Rat& t) const {
    if (t <= 0) throw std::invalid_argument("resample factor must be positive");
    // n/grid * u/v = (n u) / (grid v)
    BigInt u = t.get_num(), v = t.get_den();
    BigInt big_grid = BigInt(grid_) * v;
    BigInt gg;
    mpz_gcd(gg.get_mpz_t(), u.get_mpz_t(), big_grid.get_mpz_t());
    long new_grid = checked_grid(to_long(BigInt(big_grid / gg)));
    long step = to_long(BigInt(u / gg));
    QSeries s;
    s.grid_ = new_grid;
    s.top_ = top_ * t;
    if (is_zero()) return s;
    s.base_ = base_ * t;
    s.coeffs_.assign(static_cast<size_t>(index_span(s.base_, s.top_, new_grid) + 1), BigInt(0));
    for (size_t n = 0; n < coeffs_.size(); ++n) {
        size_t k = n * static_cast<size_t>(step);
        if (k < s.coeffs_.size()) s.coeffs_[k] = coeffs_[n];
    }
    s.normalize();
    return s;
}

std::string QSeries::str(int max_terms) const {
    std::ostringstream os;
    if (is_zero()) {
        os << "O(q^{>" << rat_str(top_) << "})";
        return os.str();
    }
    os << "q^{" << rat_str(base_) << "}(";
    int shown = 0;
    bool first = true;
    for (size_t n = 0; n < coeffs_.size() && shown < max_terms; ++n) {
        const BigInt& c = coeffs_[n];
        if (c == 0) continue;
        Rat e(static_cast<long>(n), grid_);
        e.canonicalize();
        BigInt mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1 || n == 0) os << mag.get_str();
        if (n != 0) {
            os << "q";
            if (e != 1) os << "^{" << rat_str(e) << "}";
        }
        first = false;
        ++shown;
    }
    // known through exponent top; shown relative to the prefactor
    os << " + O(q^{>" << rat_str(top_ - base_) << "}))";
    return os.str();
}

std::vector<BigInt> conv_serial(const std::vector<BigInt>& a, const std::vector<BigInt>& b, size_t n_out) {
    std::vector<BigInt> out(n_out, BigInt(0));
    for (size_t i = 0; i < a.size() && i < n_out; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < n_out; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<BigInt> conv_parallel(const std::vector<BigInt>& a, const std::vector<BigInt>& b, size_t n_out) {
    std::vector<BigInt> out(n_out, BigInt(0));
    std::vector<long> nz_a;
    for (size_t i = 0; i < a.size() && i < n_out; ++i)
        if (a[i] != 0) nz_a.push_back(static_cast<long>(i));
    std::vector<char> nz_b(b.size());
    for (size_t j = 0; j < b.size(); ++j) nz_b[j] = b[j] != 0;

    unsigned long bits_a = 0, bits_b = 0;
    bool small = fits_i64(a, bits_a) && fits_i64(b, bits_b);
    unsigned long bits_len = mpz_sizeinbase(BigInt(static_cast<unsigned long>(n_out + 1)).get_mpz_t(), 2);
    small = small && bits_a + bits_b + bits_len < 126;

    const long n = static_cast<long>(n_out);
    const long nb = static_cast<long>(b.size());
    if (small) {
        std::vector<long> sa(a.size()), sb(b.size());
        for (size_t i = 0; i < a.size(); ++i) sa[i] = a[i].get_si();
        for (size_t j = 0; j < b.size(); ++j) sb[j] = b[j].get_si();
        std::vector<__int128> acc(n_out, 0);
#pragma omp parallel for schedule(dynamic, 64)
        for (long k = 0; k < n; ++k) {
            __int128 s = 0;
            for (long i : nz_a) {
                if (i > k) break;
                long j = k - i;
                if (j < nb) s += static_cast<__int128>(sa[static_cast<size_t>(i)]) * sb[static_cast<size_t>(j)];
            }
            acc[static_cast<size_t>(k)] = s;
        }
        for (long k = 0; k < n; ++k)
            if (acc[static_cast<size_t>(k)] != 0) out[static_cast<size_t>(k)] = from_i128(acc[static_cast<size_t>(k)]);
        return out;
    }
#pragma omp parallel for schedule(dynamic, 16)
    for (long k = 0; k < n; ++k) {
        mpz_ptr dst = out[static_cast<size_t>(k)].get_mpz_t();
        for (long i : nz_a) {
            if (i > k) break;
            long j = k - i;
            if (j < nb && nz_b[static_cast<size_t>(j)])
                mpz_addmul(dst, a[static_cast<size_t>(i)].get_mpz_t(), b[static_cast<size_t>(j)].get_mpz_t());
        }
    }
    return out;
}

namespace {

// coefficients of prod_{n>=1} (1 - q^n) up to q^order (Euler pentagonal theorem)
std::vector<BigInt> euler_product(long order) {
    std::vector<BigInt> c(static_cast<size_t>(order + 1), BigInt(0));
    for (long k = 0;; ++k) {
        bool any = false;
        for (long s : {k, -k}) {
            if (k == 0 && s < 0) continue;
            long e = s * (3 * s - 1) / 2;
            if (e <= order) {
                c[static_cast<size_t>(e)] = (k % 2 == 0) ? 1 : -1;
                any = true;
            }
        }
        if (!any) break;
    }
    return c;
}

std::vector<BigInt> partitions(long order) {
    std::vector<BigInt> p(static_cast<size_t>(order + 1), BigInt(0));
    p[0] = 1;
    for (long n = 1; n <= order; ++n) {
        BigInt s = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            long g2 = k * (3 * k + 1) / 2;
            if (k % 2 == 1) {
                s += p[static_cast<size_t>(n - g1)];
                if (g2 <= n) s += p[static_cast<size_t>(n - g2)];
            } else {
                s -= p[static_cast<size_t>(n - g1)];
                if (g2 <= n) s -= p[static_cast<size_t>(n - g2)];
            }
        }
        p[static_cast<size_t>(n)] = s;
    }
    return p;
}

}  // namespace

QSeries eta_inv_pow(int r, long order) {
    if (r < 1) throw std::invalid_argument("eta_inv_pow needs r >= 1");
    if (order < 0) throw std::invalid_argument("negative order");
    Rat base = make_rat(-r, 24);
    std::vector<BigInt> a;
    if (r == 1) {
        a = partitions(order);
    } else {
        // n a_n = r sum_{k=1}^n sigma(k) a_{n-k}
        std::vector<long> sigma(static_cast<size_t>(order + 1), 0);
        for (long d = 1; d <= order; ++d)
            for (long k = d; k <= order; k += d) sigma[static_cast<size_t>(k)] += d;
        a.assign(static_cast<size_t>(order + 1), BigInt(0));
        a[0] = 1;
        for (long n = 1; n <= order; ++n) {
            BigInt s = 0;
            for (long k = 1; k <= n; ++k) s += a[static_cast<size_t>(n - k)] * sigma[static_cast<size_t>(k)];
            s *= r;
            mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(n));
            a[static_cast<size_t>(n)] = s;
        }
    }
    return QSeries::from_coeffs(base, 1, std::move(a), base + order);
}

QSeries eta_pow(int r, long order) {
    if (r < 1) throw std::invalid_argument("eta_pow needs r >= 1");
    QSeries e = QSeries::from_coeffs(make_rat(1, 24), 1, euler_product(order), make_rat(1, 24) + order);
    QSeries out = e;
    for (int i = 1; i < r; ++i) out = out * e;
    return out.truncate(make_rat(r, 24) + order);
}

QSeries fermion_char(FermionKind kind, long order) {
    if (order < 0) throw std::invalid_argument("negative order");
    if (kind == FermionKind::Ramond) {
        // distinct parts
        std::vector<BigInt> c(static_cast<size_t>(order + 1), BigInt(0));
        c[0] = 2;
        for (long part = 1; part <= order; ++part)
            for (long n = order; n >= part; --n) c[static_cast<size_t>(n)] += c[static_cast<size_t>(n - part)];
        Rat base = make_rat(1, 24);
        return QSeries::from_coeffs(base, 1, std::move(c), base + order);
    }
    // grid 2: parts 2n-1 in half-units
    long len = 2 * order;
    std::vector<BigInt> c(static_cast<size_t>(len + 1), BigInt(0));
    c[0] = 1;
    long sign = kind == FermionKind::NS ? 1 : -1;
    for (long part = 1; part <= len; part += 2)
        for (long n = len; n >= part; --n) {
            if (c[static_cast<size_t>(n - part)] == 0) continue;
            if (sign > 0)
                c[static_cast<size_t>(n)] += c[static_cast<size_t>(n - part)];
            else
                c[static_cast<size_t>(n)] -= c[static_cast<size_t>(n - part)];
        }
    Rat base = make_rat(-1, 48);
    return QSeries::from_coeffs(base, 2, std::move(c), base + order);
}

QSeries partial_euler_inv(long from, long order) {
    std::vector<BigInt> c(static_cast<size_t>(order + 1), BigInt(0));
    c[0] = 1;
    for (long part = std::max(1L, from); part <= order; ++part)
        for (long n = part; n <= order; ++n) c[static_cast<size_t>(n)] += c[static_cast<size_t>(n - part)];
    return QSeries::from_coeffs(Rat(0), 1, std::move(c), Rat(order));
}

}  // namespace shiftlab
