#pragma once

#include <map>
#include <vector>

#include "shiftlab/qseries.hpp"
#include "shiftlab/shift.hpp"

namespace shiftlab {

enum class CharKind { Ch, SCh, Ramond };

std::string kind_name(CharKind k);
CharKind parse_kind(const std::string& s);

// Lattice point nu (physical vector sqrt(p) nu) carrying h-weight beta.
struct FockPoint {
    WeightVec nu;
    WeightVec weight;
};

FockPoint fock_point(const LambdaParam& lam, const WeightVec& beta, const ShiftCase& c);
Rat fock_delta(const WeightVec& nu, const ShiftCase& c);
// Exponent of q in ch of the Fock module at nu once q^{-c/24} and eta^r are pulled out:
// (p/2)|nu - gamma|^2, so that ch = q^E / eta^r (times the fermion factor).
Rat normalized_exponent(const WeightVec& nu, const ShiftCase& c);
long char_grid(const ShiftCase& c);

// Signed sum of monomials q^E. lead is the smallest exponent that entered, cancelled or not.
struct LatticeSum {
    std::map<Rat, BigInt> terms;
    Rat lead;
    bool any = false;

    void add(const Rat& e, long sign);
    bool is_zero() const;
    friend bool operator==(const LatticeSum& a, const LatticeSum& b) { return a.terms == b.terms; }
};

struct RamondConstants {
    Rat A, B, C;  // coefficients of (alpha_r, nu), (alpha_{r-1}, nu) and the constant, unscaled
};
RamondConstants ramond_constants(const ShiftCase& c);
Rat ramond_shift(const WeightVec& nu, const RamondConstants& k, const RootSystem& rs);

// floor((beta, alpha_r)) as printed; agrees with the lattice parity only in rank one.
BigInt f_literal(const WeightVec& beta, const RootSystem& rs);
// coefficient of alpha_r in lambda^bullet - sigma o beta, the fermion parity of that Fock module
BigInt lattice_parity(const WeightVec& beta_image, const LambdaParam& lam);

// Sum over sigma of (-1)^{l(sigma)} [sign] q^{E(-sigma o beta + lambda_bullet)}.
LatticeSum alternating_sum(const ShiftSystem& sys, const WeightVec& beta, int lam, CharKind kind);
// The same sum written through Lambda and the shift map: sigma*lambda, beta - sigma up lambda.
LatticeSum alternating_sum_shifted(const ShiftSystem& sys, const WeightVec& beta, int lam);
// Supercharacter signs with f_literal in place of the lattice parity.
LatticeSum alternating_sum_literal_f(const ShiftSystem& sys, const WeightVec& beta, int lam);

// eta^{-r} times the fermion factor of the kind (none in the nonsuper case).
QSeries factor_series(CharKind kind, const ShiftCase& c, long order);
Rat factor_base(CharKind kind, const ShiftCase& c);
// Multiply by the factor; exact up to the absolute exponent top.
QSeries realize(const LatticeSum& sum, CharKind kind, const ShiftCase& c, const Rat& top);
// order is counted from the leading exponent.
QSeries realize_order(const LatticeSum& sum, CharKind kind, const ShiftCase& c, long order);

CharKind default_kind(const ShiftCase& c);

QSeries weight_space_char(const ShiftSystem& sys, int lam, const WeightVec& beta, CharKind kind, long order);
QSeries multiplet_char(const ShiftSystem& sys, const WeightVec& alpha, int lam, CharKind kind, long order);

struct FtInfo {
    int alphas_used = 0;
    int max_height = 0;
};
QSeries ft_char(const ShiftSystem& sys, int lam, CharKind kind, long order, FtInfo* info = nullptr);

QSeries walg_vacuum_oracle(const ShiftCase& c, long order);

// (ch F / eta^r) q^{|mu - p rho + rho|^2 / 2p}
QSeries verma_char_super(const ShiftCase& c, const WeightVec& mu, long order);
// same with rho/p in place of rho, as printed
QSeries verma_char_super_literal(const ShiftCase& c, const WeightVec& mu, long order);

}  // namespace shiftlab
