#include "shiftlab/alcove.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shiftlab {

std::string family_name(AlcoveFamily f) { return f == AlcoveFamily::Untwisted ? "untwisted" : "twisted"; }

AlcoveFamily family_of(const ShiftCase& c) {
    return c.variant == Variant::NonSuper ? AlcoveFamily::Untwisted : AlcoveFamily::Twisted;
}

Alcove::Alcove(const ShiftSystem& sys) : sys_(&sys), family_(family_of(sys.shift_case())) {
    const ShiftCase& c = sys.shift_case();
    const RootSystem& rs = *c.rs;
    if (family_ == AlcoveFamily::Untwisted) {
        scale_ = rs.lacing;
        check_level_ = Rat(c.m - rs.dual_coxeter_L);
        rho_hat_ = {rs.rho_check, Rat(rs.dual_coxeter_L), Rat(0)};
    } else {
        scale_ = 1;
        check_level_ = Rat(c.p - (2 * rs.rank + 1));
        rho_hat_ = {rs.rho, Rat(2 * rs.rank + 1), Rat(0)};
    }
}

bool Alcove::in_translation_lattice(const WeightVec& gamma) const {
    return (make_rat(1, scale_) * gamma).is_integral();
}

AffineWeylElt Alcove::identity() const { return {0, WeightVec(shift_case().rs->rank)}; }

AffineWeylElt Alcove::make(int sigma, const WeightVec& gamma) const {
    if (!in_translation_lattice(gamma))
        throw std::invalid_argument("translation " + gamma.str() + " is outside " +
                                    (scale_ == 1 ? std::string("Q") : std::to_string(scale_) + "Q"));
    return {sigma, gamma};
}

AffineWeylElt Alcove::simple(int i) const {
    const RootSystem& rs = *shift_case().rs;
    if (i < 0 || i > rs.rank) throw std::out_of_range("reflection index " + std::to_string(i));
    if (i < rs.rank) return {weyl().simple(i), WeightVec(rs.rank)};
    // affine wall (theta_L, x) = bound: s_{theta_s} t_{-scale theta_s}
    int s = weyl().find(root_reflection_matrix(rs, rs.theta_s));
    return make(s, Rat(-scale_) * rs.theta_s);
}

AffineWeylElt Alcove::mul(const AffineWeylElt& a, const AffineWeylElt& b) const {
    const WeylGroup& W = weyl();
    return {W.mult(a.sigma, b.sigma), W.apply(W.inverse(b.sigma), a.translation) + b.translation};
}

AffineWeylElt Alcove::inverse(const AffineWeylElt& a) const {
    const WeylGroup& W = weyl();
    return {W.inverse(a.sigma), -W.apply(a.sigma, a.translation)};
}

AffineWeight Alcove::act(const AffineWeylElt& w, const AffineWeight& mu) const {
    const RootSystem& rs = *shift_case().rs;
    const Rat& k = mu.level;
    AffineWeight out;
    out.finite = weyl().apply(w.sigma, mu.finite + k * w.translation);
    out.level = k;
    out.delta_coeff = mu.delta_coeff - rs.pairing(mu.finite, w.translation) - k * rs.norm2(w.translation) / 2;
    return out;
}

namespace {

AffineWeight plus(const AffineWeight& a, const AffineWeight& b) {
    return {a.finite + b.finite, a.level + b.level, a.delta_coeff + b.delta_coeff};
}

AffineWeight minus(const AffineWeight& a, const AffineWeight& b) {
    return {a.finite - b.finite, a.level - b.level, a.delta_coeff - b.delta_coeff};
}

}  // namespace

AffineWeight Alcove::dot(const AffineWeylElt& w, const AffineWeight& mu) const {
    return minus(act(w, plus(mu, rho_hat_)), rho_hat_);
}

bool Alcove::in_chamber(const AffineWeight& mu) const {
    const RootSystem& rs = *shift_case().rs;
    AffineWeight x = plus(mu, rho_hat_);
    for (int i = 0; i < rs.rank; ++i)
        if (rs.copairing(x.finite, i) < 0) return false;
    return rs.pairing(x.finite, rs.theta_L) <= bound(x);
}

bool Alcove::on_wall(const AffineWeight& mu) const {
    const RootSystem& rs = *shift_case().rs;
    AffineWeight x = plus(mu, rho_hat_);
    for (int i = 0; i < rs.rank; ++i)
        if (rs.copairing(x.finite, i) == 0) return true;
    return rs.pairing(x.finite, rs.theta_L) == bound(x);
}

Reduction Alcove::dominant_reduce(const AffineWeight& mu, const std::vector<int>& reflection_order) const {
    const RootSystem& rs = *shift_case().rs;
    if (mu.level + rho_hat_.level <= 0) throw std::invalid_argument("reduction needs positive shifted level");
    std::vector<int> order = reflection_order;
    if (order.empty()) {
        order.resize(static_cast<size_t>(rs.rank + 1));
        std::iota(order.begin(), order.end(), 0);
    }
    Reduction red;
    red.w = identity();
    red.nu = mu;
    constexpr long kMaxSteps = 1000000;
    for (;;) {
        AffineWeight x = plus(red.nu, rho_hat_);
        int step = -1;
        for (int i : order) {
            bool outside = i < rs.rank ? rs.copairing(x.finite, i) < 0 : rs.pairing(x.finite, rs.theta_L) > bound(x);
            if (outside) {
                step = i;
                break;
            }
        }
        if (step < 0) break;
        AffineWeylElt s = simple(step);
        red.nu = dot(s, red.nu);
        red.w = mul(s, red.w);
        if (++red.steps > kMaxSteps) throw std::logic_error("alcove walk did not terminate");
    }
    red.on_wall = on_wall(red.nu);
    for (const auto& s : stabilizer(red.nu)) red.alternatives.push_back(mul(s, red.w));
    return red;
}

std::vector<AffineWeylElt> Alcove::stabilizer(const AffineWeight& nu) const {
    const RootSystem& rs = *shift_case().rs;
    AffineWeight x = plus(nu, rho_hat_);
    std::vector<AffineWeylElt> gens;
    for (int i = 0; i < rs.rank; ++i)
        if (rs.copairing(x.finite, i) == 0) gens.push_back(simple(i));
    if (rs.pairing(x.finite, rs.theta_L) == bound(x)) gens.push_back(simple(rs.rank));
    std::vector<AffineWeylElt> group = {identity()};
    for (size_t k = 0; k < group.size(); ++k)
        for (const auto& g : gens) {
            AffineWeylElt h = mul(g, group[k]);
            if (std::find(group.begin(), group.end(), h) == group.end()) group.push_back(h);
        }
    return group;
}

AffineWeight Alcove::start_weight(const WeightVec& alpha, const LambdaParam& lam) const {
    const ShiftCase& c = shift_case();
    const RootSystem& rs = *c.rs;
    const WeightVec& shift = family_ == AlcoveFamily::Untwisted ? rs.rho : rs.rho_check;
    Rat p(c.p);
    AffineWeight mu;
    mu.finite = -p * (alpha + lam.bullet_up + shift) + p * lam.lower;
    mu.level = check_level_;
    mu.delta_coeff = 0;
    return mu;
}

AffineWeylElt Alcove::canonical(const Reduction& red) const {
    if (red.alternatives.size() <= 1) return red.w;
    // Push the start point off the walls along -rho_hat (every label lowered a little) and keep
    // the one candidate that carries it into the open alcove.
    const RootSystem& rs = *shift_case().rs;
    const AffineWeight x = plus(red.nu, rho_hat_);
    std::vector<AffineWeylElt> hits;
    for (const auto& w : red.alternatives) {
        WeightVec d = weyl().apply(w.sigma, -rho_hat_.finite);
        bool inside = true;
        for (int i = 0; i < rs.rank && inside; ++i)
            if (rs.copairing(x.finite, i) == 0 && rs.copairing(d, i) <= 0) inside = false;
        if (inside && rs.pairing(x.finite, rs.theta_L) == bound(x) && rs.pairing(d, rs.theta_L) >= 0) inside = false;
        if (inside) hits.push_back(w);
    }
    if (hits.size() != 1) throw std::logic_error("wall tie-break found " + std::to_string(hits.size()) + " candidates");
    return hits.front();
}

YData Alcove::y_alpha(const WeightVec& alpha, const LambdaParam& lam) const {
    Reduction red = dominant_reduce(start_weight(alpha, lam));
    YData out;
    out.y = inverse(canonical(red));
    out.mu_lambda = red.nu;
    out.on_wall = red.on_wall;
    out.strong = alcove_inequality(lam, shift_case());
    return out;
}

AffineWeylElt Alcove::closed_form(const WeightVec& alpha, const LambdaParam& lam) const {
    if (family_ != AlcoveFamily::Twisted) throw std::invalid_argument("closed form is stated for the twisted family");
    const RootSystem& rs = *shift_case().rs;
    AffineWeylElt t = translation(-alpha - rs.rho_check);
    if (lam.bullet == 0) return t;
    return mul(t, simple(rs.rank - 1));
}

AffineWeylElt Alcove::closed_form_corrected(const WeightVec& alpha, const LambdaParam& lam) const {
    if (family_ != AlcoveFamily::Twisted) throw std::invalid_argument("closed form is stated for the twisted family");
    const RootSystem& rs = *shift_case().rs;
    AffineWeylElt t = translation(-alpha - rs.rho_check);
    if (lam.bullet == 0) return t;
    // w0 times the longest element of the parabolic subgroup without a_r
    std::vector<int> word;
    for (int len = rs.rank - 1; len >= 1; --len)
        for (int i = 0; i < len; ++i) word.push_back(i);
    int wj = weyl().from_word(word);
    if (weyl()[wj].length != (rs.rank - 1) * rs.rank / 2) throw std::logic_error("parabolic longest element");
    return mul(t, {weyl().mult(weyl().longest(), wj), WeightVec(rs.rank)});
}

AffineWeylElt Alcove::y_sigma(int sigma, const WeightVec& alpha, const LambdaParam& lam) const {
    const WeightVec beta = alpha + lam.bullet_up;
    AffineWeylElt y = y_alpha(alpha, lam).y;
    return mul(translation(Rat(scale_) * (beta - weyl().dot(sigma, beta))), y);
}

WeightVec Alcove::verma_param(int sigma, const WeightVec& alpha, const LambdaParam& lam) const {
    const ShiftCase& c = shift_case();
    YData yd = y_alpha(alpha, lam);
    const WeightVec beta = alpha + lam.bullet_up;
    AffineWeylElt ys = mul(translation(Rat(scale_) * (beta - weyl().dot(sigma, beta))), yd.y);
    const WeightVec& shift = family_ == AlcoveFamily::Untwisted ? c.rs->rho : c.rs->rho_check;
    return dot(ys, yd.mu_lambda).finite + Rat(c.p) * shift;
}

std::string Alcove::str(const AffineWeylElt& w) const {
    std::ostringstream os;
    const auto& word = weyl()[w.sigma].word;
    if (word.empty()) os << "e";
    for (size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << "s" << word[k] + 1;
    if (!w.translation.is_zero()) os << " t" << w.translation.str();
    return os.str();
}

}  // namespace shiftlab
