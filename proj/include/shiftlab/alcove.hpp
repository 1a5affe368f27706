#pragma once

#include <string>
#include <vector>

#include "shiftlab/shift.hpp"

namespace shiftlab {

// Untwisted: W x| r^v Q acting for the Langlands dual (nonsuper family).
// Twisted: W x| Q of A_{2r}^{(2)} (super family); levels there are counted in Lambda_0^c = Lambda_0 / 2.
enum class AlcoveFamily { Untwisted, Twisted };

std::string family_name(AlcoveFamily f);

struct AffineWeight {
    WeightVec finite;
    Rat level;
    Rat delta_coeff;

    friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
        return a.finite == b.finite && a.level == b.level && a.delta_coeff == b.delta_coeff;
    }
};

// sigma t_gamma : mu -> sigma(mu + k gamma) on the finite part at level k
struct AffineWeylElt {
    int sigma = 0;  // index into the finite Weyl group
    WeightVec translation;

    friend bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
        return a.sigma == b.sigma && a.translation == b.translation;
    }
};

struct Reduction {
    AffineWeylElt w;   // w o mu_hat = nu
    AffineWeight nu;   // in the closed fundamental chamber
    bool on_wall = false;
    long steps = 0;
    // every w' with w' o mu_hat = nu; more than one only on a wall
    std::vector<AffineWeylElt> alternatives;
};

struct YData {
    AffineWeylElt y;        // y_{alpha, lambda^bullet}
    AffineWeight mu_lambda;
    bool on_wall = false;
    bool strong = false;    // lambda inside the alcove region
};

class Alcove {
public:
    explicit Alcove(const ShiftSystem& sys);

    AlcoveFamily family() const { return family_; }
    const ShiftCase& shift_case() const { return sys_->shift_case(); }
    const WeylGroup& weyl() const { return sys_->weyl(); }
    const AffineWeight& rho_hat() const { return rho_hat_; }
    long scale() const { return scale_; }  // translation lattice is scale * Q
    Rat check_level() const { return check_level_; }

    bool in_translation_lattice(const WeightVec& gamma) const;
    AffineWeylElt identity() const;
    AffineWeylElt make(int sigma, const WeightVec& gamma) const;  // validates gamma
    AffineWeylElt translation(const WeightVec& gamma) const { return make(0, gamma); }
    AffineWeylElt simple(int i) const;  // i = 0 is the affine reflection
    AffineWeylElt mul(const AffineWeylElt& a, const AffineWeylElt& b) const;
    AffineWeylElt inverse(const AffineWeylElt& a) const;

    AffineWeight act(const AffineWeylElt& w, const AffineWeight& mu) const;
    AffineWeight dot(const AffineWeylElt& w, const AffineWeight& mu) const;

    // Pairings of mu + rho_hat with a_i^v and with the highest coroot against its bound.
    bool in_chamber(const AffineWeight& mu) const;
    bool on_wall(const AffineWeight& mu) const;
    // reflection_order permutes the simple reflections tried first (used to test uniqueness)
    Reduction dominant_reduce(const AffineWeight& mu, const std::vector<int>& reflection_order = {}) const;
    // Affine reflections fixing the point, closed under products (trivial group off the walls).
    std::vector<AffineWeylElt> stabilizer(const AffineWeight& nu) const;

    // -p(alpha + lambda^bullet + rho) + p lambda_bullet + k Lambda_0 (rho^v in place of rho when twisted)
    AffineWeight start_weight(const WeightVec& alpha, const LambdaParam& lam) const;
    // On a wall, the candidate that also reduces the start point nudged along -rho_hat.
    AffineWeylElt canonical(const Reduction& red) const;
    YData y_alpha(const WeightVec& alpha, const LambdaParam& lam) const;
    // t_{-alpha-rho^v}, times sigma_r on the right when lambda^bullet = w_r; twisted family only
    AffineWeylElt closed_form(const WeightVec& alpha, const LambdaParam& lam) const;
    // sigma_r replaced by w0 w0(J), J the simple roots other than a_r; equal to the above in rank one
    AffineWeylElt closed_form_corrected(const WeightVec& alpha, const LambdaParam& lam) const;
    AffineWeylElt y_sigma(int sigma, const WeightVec& alpha, const LambdaParam& lam) const;
    // Finite part of y_sigma o mu_lambda shifted into the Verma argument.
    WeightVec verma_param(int sigma, const WeightVec& alpha, const LambdaParam& lam) const;

    std::string str(const AffineWeylElt& w) const;

private:
    Rat bound(const AffineWeight& shifted) const { return shifted.level * scale_; }

    const ShiftSystem* sys_;
    AlcoveFamily family_;
    long scale_;
    Rat check_level_;
    AffineWeight rho_hat_;
};

AlcoveFamily family_of(const ShiftCase& c);

}  // namespace shiftlab
