#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "shiftlab/liealg.hpp"

namespace shiftlab {

enum class Variant { NonSuper, Super, SuperRamond };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);
inline bool is_super(Variant v) { return v != Variant::NonSuper; }

struct ShiftCase {
    std::shared_ptr<const RootSystem> rs;
    Variant variant = Variant::NonSuper;
    int m = 1;
    long p = 1;
    WeightVec x;      // rho^v/p or rho/p
    WeightVec gamma;  // rho - rho^v/p or (1 - 1/p) rho, unscaled
    Rat central_charge;
    std::vector<WeightVec> basis;  // alpha_i^* or w_i
    std::vector<long> digit_max;

    std::string id() const;
};

ShiftCase make_case(std::shared_ptr<const RootSystem> rs, Variant v, int m);
ShiftCase make_case(const std::string& type, Variant v, int m);

struct LambdaParam {
    int bullet = 0;         // index into rs.minuscule
    WeightVec bullet_up;    // lambda^bullet
    std::vector<long> digits;
    WeightVec lower;        // lambda_bullet
    WeightVec value;        // -lambda^bullet + lambda_bullet

    std::string label() const;  // "b,d1,...,dr"
    friend bool operator==(const LambdaParam& a, const LambdaParam& b) {
        return a.bullet == b.bullet && a.digits == b.digits;
    }
};

struct Decomposition {
    WeightVec upper;  // mu^bullet in P
    WeightVec lower;  // mu_bullet with 0 < (mu_bullet + x, a_i^v) <= 1
};

bool in_lattice(const WeightVec& mu, const ShiftCase& c);  // mu in (1/p) Q^*
Decomposition canonical_decompose(const WeightVec& mu, const ShiftCase& c);
LambdaParam make_lambda(const ShiftCase& c, int bullet, const std::vector<long>& digits);
LambdaParam parse_lambda(const ShiftCase& c, const std::string& text);
LambdaParam lambda_of_coset(const WeightVec& mu, const ShiftCase& c);  // representative of mu + Q
std::vector<LambdaParam> enumerate_lambda(const ShiftCase& c);

LambdaParam w_act(const IntMat& sigma, const LambdaParam& lam, const ShiftCase& c);
WeightVec shift_map(const IntMat& sigma, const LambdaParam& lam, const ShiftCase& c);
Rat lower_pairing(int i, const LambdaParam& lam, const ShiftCase& c);  // (lambda_bullet + x, a_i^v)
bool is_fixed(int i, const LambdaParam& lam, const ShiftCase& c);
Rat alcove_value(const LambdaParam& lam, const ShiftCase& c);
bool alcove_inequality(const LambdaParam& lam, const ShiftCase& c);
// Residue s in 1..p-1, or 0 as the marker for a sigma_i-fixed lambda.
long screening_degree(int i, const LambdaParam& lam, const ShiftCase& c);
Rat screening_residue_raw(int i, const LambdaParam& lam, const ShiftCase& c);
// w0 up lambda for strong lambda away from the walls: -rho in both families.
WeightVec expected_w0_shift(const ShiftCase& c);
// -rho^v (nonsuper) or -rho (super), the value stated for the strong region.
WeightVec literal_w0_shift(const ShiftCase& c);
bool fixed_somewhere(const LambdaParam& lam, const ShiftCase& c);

// Tabulated W-action and shift map over the whole of W x Lambda.
class ShiftSystem {
public:
    explicit ShiftSystem(ShiftCase c, bool parallel = true);

    const ShiftCase& shift_case() const { return c_; }
    const RootSystem& rs() const { return *c_.rs; }
    const WeylGroup& weyl() const { return *weyl_; }
    const std::vector<LambdaParam>& lambdas() const { return lambdas_; }
    int size() const { return static_cast<int>(lambdas_.size()); }
    int find(int bullet, const std::vector<long>& digits) const;  // -1 when absent
    int index_of(const LambdaParam& lam) const { return find(lam.bullet, lam.digits); }

    int act(int w, int l) const { return act_[static_cast<size_t>(w) * lambdas_.size() + static_cast<size_t>(l)]; }
    const WeightVec& shift(int w, int l) const {
        return shift_[static_cast<size_t>(w) * lambdas_.size() + static_cast<size_t>(l)];
    }
    bool fixed(int i, int l) const { return act(weyl_->simple(i), l) == l; }

    const std::vector<int>& default_word() const { return (*weyl_)[weyl_->longest()].word; }
    bool have_all_words() const { return !w0_words_.empty(); }
    const std::vector<std::vector<int>>& w0_words() const;

    bool check_weak(int l) const;
    // word uses the storage convention (i1..iN) = s_{i1}...s_{iN}; the rightmost letter acts first
    bool check_strong(int l, const std::vector<int>& word) const;
    bool check_strong_alt(int l, const std::vector<int>& word) const;
    bool check_strong_all_words(int l) const;
    WeightVec w0_shift_along(int l, const std::vector<int>& word) const;
    // sigma up lambda rebuilt from simple shifts along a reduced word of sigma
    WeightVec telescoped_shift(int w, int l) const;

private:
    void validate_w0_word(const std::vector<int>& word) const;

    ShiftCase c_;
    std::unique_ptr<WeylGroup> weyl_;
    std::vector<LambdaParam> lambdas_;
    std::map<std::pair<int, std::vector<long>>, int> index_;
    std::vector<int> act_;
    std::vector<WeightVec> shift_;
    std::vector<std::vector<int>> w0_words_;
};

struct Failure {
    std::string check;
    std::string lambda;
    std::string witness;
};

struct LambdaRow {
    std::string lambda;
    bool weak = false;
    bool strong = false;
    bool strong_alt = false;
    bool strong_all_words = false;
    bool alcove = false;
    Rat alcove_value;
    WeightVec w0_shift;
    std::vector<long> screening;  // per simple root, 0 = fixed
};

struct ShiftReport {
    std::string case_id;
    std::map<std::string, long> counts;  // checks evaluated per family
    std::vector<Failure> failures;
    std::vector<LambdaRow> rows;
    bool ok() const { return failures.empty(); }
};

// Axioms (1), (2a)-(2c) and the easy facts, from the tables; OpenMP over lambda.
ShiftReport verify_axioms(const ShiftSystem& sys, bool parallel = true);
// Same checks straight from the definitions, serially and without tables.
ShiftReport verify_axioms_reference(const ShiftCase& c);
// Weak/strong/alcove table and the equivalences between them.
ShiftReport condition_report(const ShiftSystem& sys, bool all_words, bool parallel = true);
// Remark facts that do not need the full axiom sweep: w0 shift, fixed-point criteria, screening degrees.
ShiftReport shift_facts_report(const ShiftSystem& sys);

}  // namespace shiftlab
