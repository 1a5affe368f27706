#include "shiftlab/characters.hpp"

#include <algorithm>
#include <stdexcept>

#include "shiftlab/config.hpp"

namespace shiftlab {

std::string kind_name(CharKind k) {
    switch (k) {
        case CharKind::Ch: return "ch";
        case CharKind::SCh: return "sch";
        case CharKind::Ramond: return "ramond";
    }
    return "?";
}

CharKind parse_kind(const std::string& s) {
    if (s == "ch") return CharKind::Ch;
    if (s == "sch") return CharKind::SCh;
    if (s == "ramond") return CharKind::Ramond;
    throw std::invalid_argument("unknown character kind: " + s);
}

namespace {

void require_kind(CharKind kind, const ShiftCase& c) {
    if (kind != CharKind::Ch && !is_super(c.variant))
        throw std::invalid_argument(kind_name(kind) + " needs a super case");
}

}  // namespace

FockPoint fock_point(const LambdaParam& lam, const WeightVec& beta, const ShiftCase& c) {
    if (!c.rs->in_weight_lattice(beta))
        throw std::invalid_argument("h-weight " + beta.str() + " is not integral");
    FockPoint f;
    f.nu = -beta + lam.lower;
    const RootSystem& rs = *c.rs;
    std::vector<Rat> h(static_cast<size_t>(rs.rank));
    for (int i = 0; i < rs.rank; ++i) h[static_cast<size_t>(i)] = Rat(ceil_rat(-rs.copairing(f.nu, i)));
    f.weight = rs.from_fundamental(h);
    return f;
}

Rat fock_delta(const WeightVec& nu, const ShiftCase& c) {
    const RootSystem& rs = *c.rs;
    Rat p(c.p);
    if (c.variant == Variant::NonSuper)
        return p / 2 * rs.norm2(nu) - p * rs.pairing(nu, rs.rho) + rs.pairing(nu, rs.rho_check);
    return p / 2 * rs.norm2(nu) - (p - 1) * rs.pairing(nu, rs.rho);
}

Rat normalized_exponent(const WeightVec& nu, const ShiftCase& c) {
    WeightVec d = nu - c.gamma;
    return Rat(c.p) / 2 * c.rs->norm2(d);
}

long char_grid(const ShiftCase& c) { return lcm_long(48, 2 * c.p); }

void LatticeSum::add(const Rat& e, long sign) {
    if (!any || e < lead) lead = e;
    any = true;
    BigInt& slot = terms[e];
    slot += sign;
    if (slot == 0) terms.erase(e);
}

bool LatticeSum::is_zero() const { return terms.empty(); }

Rat ramond_shift(const WeightVec& nu, const RamondConstants& k, const RootSystem& rs) {
    const int r = rs.rank;
    Rat out = k.A * rs.pairing(rs.simple_roots[static_cast<size_t>(r - 1)], nu) + k.C;
    if (r >= 2) out += k.B * rs.pairing(rs.simple_roots[static_cast<size_t>(r - 2)], nu);
    return out;
}

RamondConstants ramond_constants(const ShiftCase& c) {
    if (!is_super(c.variant)) throw std::invalid_argument("Ramond sector needs a super case");
    const RootSystem& rs = *c.rs;
    const int r = rs.rank;
    if (r > 2)
        throw Unsupported("Ramond constants: w_r is not in the span of a_r, a_{r-1} for rank " + std::to_string(r));
    const WeightVec flow = make_rat(1, c.p) * rs.fund_weights[static_cast<size_t>(r - 1)];
    auto diff = [&](const WeightVec& nu) -> Rat { return fock_delta(nu + flow, c) - fock_delta(nu, c); };

    // Unknowns (A, B, C); rows at nu = 0, w_r, w_{r-1} fix them, the rest are checks.
    RamondConstants k;
    k.C = diff(WeightVec(r));
    const WeightVec& wr = rs.fund_weights[static_cast<size_t>(r - 1)];
    k.A = (diff(wr) - k.C) / rs.pairing(rs.simple_roots[static_cast<size_t>(r - 1)], wr);
    if (r == 2) {
        const WeightVec& w1 = rs.fund_weights[0];
        k.B = (diff(w1) - k.C) / rs.pairing(rs.simple_roots[0], w1);
    }
    std::vector<WeightVec> probes = {rs.rho, rs.theta, -rs.rho_check, make_rat(1, c.p) * rs.theta_s + rs.rho};
    for (int i = 0; i < r; ++i) probes.push_back(rs.simple_roots[static_cast<size_t>(i)] * make_rat(3, 1));
    for (const auto& nu : probes)
        if (diff(nu) != ramond_shift(nu, k, rs))
            throw std::logic_error("Ramond constants inconsistent at nu = " + nu.str());
    return k;
}

BigInt f_literal(const WeightVec& beta, const RootSystem& rs) {
    return floor_rat(rs.pairing(beta, rs.simple_roots[static_cast<size_t>(rs.rank - 1)]));
}

BigInt lattice_parity(const WeightVec& beta_image, const LambdaParam& lam) {
    WeightVec d = lam.bullet_up - beta_image;
    const Rat& n = d[d.rank() - 1];
    if (!is_integer(n)) throw std::logic_error("lambda^bullet - sigma o beta is not in Q: " + d.str());
    return n.get_num();
}

namespace {

long parity_sign(const BigInt& n) { return mpz_odd_p(n.get_mpz_t()) ? -1 : 1; }

Rat term_exponent(const WeightVec& nu, CharKind kind, const ShiftCase& c, const RamondConstants* k) {
    Rat e = normalized_exponent(nu, c);
    if (kind == CharKind::Ramond) e += ramond_shift(nu, *k, *c.rs) + make_rat(1, 16);
    return e;
}

void check_beta(const WeightVec& beta, const LambdaParam& lam) {
    if (!(beta - lam.bullet_up).is_integral())
        throw std::invalid_argument("h-weight " + beta.str() + " is not in lambda^bullet + Q");
}

}  // namespace

LatticeSum alternating_sum(const ShiftSystem& sys, const WeightVec& beta, int lam, CharKind kind) {
    const ShiftCase& c = sys.shift_case();
    require_kind(kind, c);
    const LambdaParam& L = sys.lambdas()[static_cast<size_t>(lam)];
    check_beta(beta, L);
    RamondConstants k;
    if (kind == CharKind::Ramond) k = ramond_constants(c);
    const WeylGroup& W = sys.weyl();
    LatticeSum out;
    for (int w = 0; w < W.size(); ++w) {
        WeightVec image = W.dot(w, beta);
        WeightVec nu = -image + L.lower;
        long sign = W[w].length % 2 ? -1 : 1;
        if (kind == CharKind::SCh) sign *= parity_sign(lattice_parity(image, L));
        out.add(term_exponent(nu, kind, c, &k), sign);
    }
    return out;
}

LatticeSum alternating_sum_shifted(const ShiftSystem& sys, const WeightVec& beta, int lam) {
    const LambdaParam& L = sys.lambdas()[static_cast<size_t>(lam)];
    check_beta(beta, L);
    const WeylGroup& W = sys.weyl();
    LatticeSum out;
    for (int w = 0; w < W.size(); ++w) {
        const LambdaParam& image = sys.lambdas()[static_cast<size_t>(sys.act(w, lam))];
        WeightVec h = beta - sys.shift(w, lam);
        FockPoint f = fock_point(image, h, sys.shift_case());
        out.add(normalized_exponent(f.nu, sys.shift_case()), W[w].length % 2 ? -1 : 1);
    }
    return out;
}

LatticeSum alternating_sum_literal_f(const ShiftSystem& sys, const WeightVec& beta, int lam) {
    const ShiftCase& c = sys.shift_case();
    require_kind(CharKind::SCh, c);
    const LambdaParam& L = sys.lambdas()[static_cast<size_t>(lam)];
    check_beta(beta, L);
    const WeylGroup& W = sys.weyl();
    LatticeSum out;
    for (int w = 0; w < W.size(); ++w) {
        WeightVec image = W.dot(w, beta);
        long sign = (W[w].length % 2 ? -1 : 1) * parity_sign(f_literal(image, sys.rs()));
        out.add(normalized_exponent(-image + L.lower, c), sign);
    }
    return out;
}

Rat factor_base(CharKind kind, const ShiftCase& c) {
    require_kind(kind, c);
    Rat base = make_rat(-c.rs->rank, 24);
    if (!is_super(c.variant)) return base;
    if (kind == CharKind::Ramond) return base + make_rat(1, 24);
    return base - make_rat(1, 48);
}

QSeries factor_series(CharKind kind, const ShiftCase& c, long order) {
    require_kind(kind, c);
    QSeries eta = eta_inv_pow(c.rs->rank, order);
    if (!is_super(c.variant)) return eta;
    FermionKind fk = kind == CharKind::Ch ? FermionKind::NS : kind == CharKind::SCh ? FermionKind::NSSuper : FermionKind::Ramond;
    return eta * fermion_char(fk, order);
}

QSeries realize(const LatticeSum& sum, CharKind kind, const ShiftCase& c, const Rat& top) {
    const Rat fbase = factor_base(kind, c);
    const Rat lattice_top = top - fbase;
    long grid = char_grid(c);
    if (kind != CharKind::Ramond && is_super(c.variant)) grid = lcm_long(grid, 2);
    std::map<Rat, BigInt> kept;
    for (const auto& [e, n] : sum.terms)
        if (e <= lattice_top) kept.emplace(e, n);
    if (kept.empty()) return QSeries::zero(top, grid);
    const Rat lo = kept.begin()->first;
    for (const auto& [e, n] : kept) grid = lcm_long(grid, to_long(Rat(e - lo).get_den()));
    if (grid > caps().grid) throw SizeError("exponent grid 1/" + std::to_string(grid) + " exceeds the cap");
    QSeries lattice = QSeries::from_terms(kept, grid, lattice_top);
    long order = to_long(ceil_rat(lattice_top - lo));
    QSeries out = lattice * factor_series(kind, c, std::max(0L, order));
    return out.truncate(top);
}

QSeries realize_order(const LatticeSum& sum, CharKind kind, const ShiftCase& c, long order) {
    Rat lead = sum.any ? sum.lead : Rat(0);
    return realize(sum, kind, c, lead + factor_base(kind, c) + order);
}

CharKind default_kind(const ShiftCase& c) {
    return c.variant == Variant::SuperRamond ? CharKind::Ramond : CharKind::Ch;
}

QSeries weight_space_char(const ShiftSystem& sys, int lam, const WeightVec& beta, CharKind kind, long order) {
    const ShiftCase& c = sys.shift_case();
    require_kind(kind, c);
    const LambdaParam& L = sys.lambdas()[static_cast<size_t>(lam)];
    check_beta(beta, L);
    FockPoint f = fock_point(L, beta, c);
    RamondConstants k;
    if (kind == CharKind::Ramond) k = ramond_constants(c);
    long sign = kind == CharKind::SCh ? parity_sign(lattice_parity(beta, L)) : 1;
    LatticeSum one;
    one.add(term_exponent(f.nu, kind, c, &k), sign);
    return realize_order(one, kind, c, order);
}

namespace {

void check_alpha(const WeightVec& alpha, const RootSystem& rs) {
    if (!alpha.is_integral() || !rs.is_dominant_integral(alpha))
        throw std::invalid_argument("alpha must be dominant and in Q, got " + alpha.str());
}

}  // namespace

QSeries multiplet_char(const ShiftSystem& sys, const WeightVec& alpha, int lam, CharKind kind, long order) {
    check_alpha(alpha, sys.rs());
    const WeightVec beta = alpha + sys.lambdas()[static_cast<size_t>(lam)].bullet_up;
    LatticeSum sum = alternating_sum(sys, beta, lam, kind);
    if (kind == CharKind::Ch && !(sum == alternating_sum_shifted(sys, beta, lam)))
        throw std::logic_error("the two forms of the Weyl-type sum disagree at lambda = " +
                               sys.lambdas()[static_cast<size_t>(lam)].label());
    return realize_order(sum, kind, sys.shift_case(), order);
}

QSeries ft_char(const ShiftSystem& sys, int lam, CharKind kind, long order, FtInfo* info) {
    const ShiftCase& c = sys.shift_case();
    const RootSystem& rs = sys.rs();
    const LambdaParam& L = sys.lambdas()[static_cast<size_t>(lam)];
    const LatticeSum vacuum = alternating_sum(sys, L.bullet_up, lam, kind);
    const Rat cutoff = vacuum.lead + order;
    const Rat top = cutoff + factor_base(kind, c);
    constexpr int kMaxHeight = 400;
    constexpr long kMaxAlphas = 10000;

    std::vector<WeightVec> alphas;
    int covered = -1, max_height = 0;
    for (int h = 0;; ++h) {
        if (h > kMaxHeight) throw SizeError("ft_char: alpha-sum did not close below height " + std::to_string(kMaxHeight));
        if (h > covered) {
            covered = std::max(2 * covered, h + 8);
            alphas = dominant_in_root_lattice(rs, covered);
        }
        bool seen = false, inside = false;
        Rat level_min;
        for (const auto& a : alphas) {
            if (height(a) != h) continue;
            LatticeSum s = alternating_sum(sys, a + L.bullet_up, lam, kind);
            if (!seen || s.lead < level_min) level_min = s.lead;
            seen = true;
            if (s.lead <= cutoff) inside = true;
        }
        if (!seen) continue;
        if (inside) max_height = h;
        if (level_min > cutoff + 2) break;
    }

    std::vector<WeightVec> used;
    for (const auto& a : alphas) {
        if (height(a) > max_height) continue;
        if (alternating_sum(sys, a + L.bullet_up, lam, kind).lead <= cutoff) used.push_back(a);
    }
    if (static_cast<long>(used.size()) > kMaxAlphas) throw SizeError("ft_char: too many alpha terms");

    std::vector<QSeries> parts(used.size());
    const long n = static_cast<long>(used.size());
#pragma omp parallel for schedule(dynamic) if (n > 1)
    for (long i = 0; i < n; ++i) {
        const WeightVec& a = used[static_cast<size_t>(i)];
        LatticeSum s = alternating_sum(sys, a + L.bullet_up, lam, kind);
        BigInt dim = weyl_dim(rs, a + L.bullet_up);
        parts[static_cast<size_t>(i)] = realize(s, kind, c, top).scale(Rat(dim));
    }
    QSeries total = QSeries::zero(top);
    for (const auto& s : parts) total = total + s;
    if (info) {
        info->alphas_used = static_cast<int>(used.size());
        info->max_height = max_height;
    }
    return total.truncate(top);
}

QSeries walg_vacuum_oracle(const ShiftCase& c, long order) {
    const RootSystem& rs = *c.rs;
    if (c.variant == Variant::SuperRamond) throw Unsupported("no vacuum product oracle for the Ramond sector");
    if (c.variant == Variant::Super && rs.rank > 1)
        throw Unsupported("no independent vacuum oracle for super rank " + std::to_string(rs.rank));
    QSeries out = QSeries::monomial(0, 1, 1, order);
    for (int e : rs.exponents) out = out * partial_euler_inv(e + 1, order);
    if (c.variant == Variant::Super) {
        // prod_{k >= 3/2} (1 + q^k), k half-odd, in half-units
        long len = 2 * order;
        std::vector<BigInt> f(static_cast<size_t>(len + 1), BigInt(0));
        f[0] = 1;
        for (long part = 3; part <= len; part += 2)
            for (long n = len; n >= part; --n) f[static_cast<size_t>(n)] += f[static_cast<size_t>(n - part)];
        out = out * QSeries::from_coeffs(0, 2, std::move(f), Rat(order));
    }
    return out.qshift(-c.central_charge / 24);
}

namespace {

QSeries verma_from_shift(const ShiftCase& c, const WeightVec& v, long order) {
    if (!is_super(c.variant)) throw std::invalid_argument("Verma character is for the super family");
    LatticeSum one;
    one.add(c.rs->norm2(v) / (2 * c.p), 1);
    return realize_order(one, CharKind::Ch, c, order);
}

}  // namespace

QSeries verma_char_super(const ShiftCase& c, const WeightVec& mu, long order) {
    const WeightVec& rho = c.rs->rho;
    return verma_from_shift(c, mu - Rat(c.p) * rho + rho, order);
}

QSeries verma_char_super_literal(const ShiftCase& c, const WeightVec& mu, long order) {
    const WeightVec& rho = c.rs->rho;
    return verma_from_shift(c, mu - Rat(c.p) * rho + make_rat(1, c.p) * rho, order);
}

}  // namespace shiftlab
