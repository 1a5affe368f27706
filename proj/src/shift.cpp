#include "shiftlab/shift.hpp"

#include <sstream>
#include <stdexcept>

#include "shiftlab/config.hpp"

namespace shiftlab {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::NonSuper: return "nonsuper";
        case Variant::Super: return "super";
        case Variant::SuperRamond: return "ramond";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    if (s == "nonsuper") return Variant::NonSuper;
    if (s == "super") return Variant::Super;
    if (s == "ramond") return Variant::SuperRamond;
    throw std::invalid_argument("unknown variant '" + s + "' (expected nonsuper, super or ramond)");
}

std::string ShiftCase::id() const {
    return rs->lie_type.name() + "/" + variant_name(variant) + "/m=" + std::to_string(m);
}

ShiftCase make_case(std::shared_ptr<const RootSystem> rs, Variant v, int m) {
    if (m < 1) throw std::invalid_argument("m must be a positive integer");
    const RootSystem& R = *rs;
    bool b1 = R.lie_type.series == 'B' && R.rank == 1;
    ShiftCase c;
    c.rs = rs;
    c.variant = v;
    c.m = m;
    if (v == Variant::NonSuper) {
        if (b1) throw std::invalid_argument("B1 only carries the super variants; use A1 for the nonsuper rank-one case");
        c.p = static_cast<long>(R.lacing) * m;
        c.x = make_rat(1, c.p) * R.rho_check;
        c.gamma = R.rho - make_rat(1, c.p) * R.rho_check;
        c.basis = R.fund_coweights;
        for (int i = 0; i < R.rank; ++i) c.digit_max.push_back(static_cast<long>(R.r_check(i)) * m);
    } else {
        if (R.lie_type.series != 'B') throw std::invalid_argument("super variants require series B, got " + R.lie_type.name());
        c.p = 2L * m - 1;
        c.x = make_rat(1, c.p) * R.rho;
        c.gamma = (Rat(1) - make_rat(1, c.p)) * R.rho;
        c.basis = R.fund_weights;
        c.digit_max.assign(static_cast<size_t>(R.rank), c.p);
    }
    c.central_charge = Rat(R.rank) - 12 * c.p * R.norm2(c.gamma);
    if (is_super(v)) c.central_charge += make_rat(1, 2);
    return c;
}

ShiftCase make_case(const std::string& type, Variant v, int m) {
    auto rs = std::make_shared<const RootSystem>(build_root_system(SimpleLieType::parse(type)));
    return make_case(rs, v, m);
}

std::string LambdaParam::label() const {
    std::ostringstream os;
    os << bullet;
    for (long d : digits) os << ',' << d;
    return os.str();
}

bool in_lattice(const WeightVec& mu, const ShiftCase& c) {
    const RootSystem& R = *c.rs;
    WeightVec pm = Rat(c.p) * mu;
    for (int i = 0; i < R.rank; ++i)
        if (!is_integer(R.pairing(pm, R.simple_roots[static_cast<size_t>(i)]))) return false;
    return true;
}

namespace {

Decomposition decompose_any(const WeightVec& mu, const ShiftCase& c) {
    const RootSystem& R = *c.rs;
    WeightVec mx = mu + c.x;
    Decomposition d{WeightVec(R.rank), WeightVec(R.rank)};
    for (int i = 0; i < R.rank; ++i) {
        BigInt k = BigInt(1) - ceil_rat(R.copairing(mx, i));
        if (k != 0) d.upper += Rat(k) * R.fund_weights[static_cast<size_t>(i)];
    }
    d.lower = mu + d.upper;
    return d;
}

}  // namespace

Decomposition canonical_decompose(const WeightVec& mu, const ShiftCase& c) {
    if (!in_lattice(mu, c))
        throw std::invalid_argument("weight " + mu.str() + " is not in (1/" + std::to_string(c.p) + ")Q*");
    return decompose_any(mu, c);
}

LambdaParam make_lambda(const ShiftCase& c, int bullet, const std::vector<long>& digits) {
    const RootSystem& R = *c.rs;
    if (bullet < 0 || bullet >= static_cast<int>(R.minuscule.size()))
        throw std::invalid_argument("minuscule index " + std::to_string(bullet) + " out of range 0.." +
                                    std::to_string(R.minuscule.size() - 1));
    if (static_cast<int>(digits.size()) != R.rank)
        throw std::invalid_argument("expected " + std::to_string(R.rank) + " digits, got " + std::to_string(digits.size()));
    for (int i = 0; i < R.rank; ++i) {
        long d = digits[static_cast<size_t>(i)];
        if (d < 1 || d > c.digit_max[static_cast<size_t>(i)])
            throw std::invalid_argument("digit " + std::to_string(i + 1) + " = " + std::to_string(d) + " outside 1.." +
                                        std::to_string(c.digit_max[static_cast<size_t>(i)]));
    }
    LambdaParam lam;
    lam.bullet = bullet;
    lam.bullet_up = R.minuscule[static_cast<size_t>(bullet)];
    if (is_super(c.variant)) {
        Rat par = Rat(digits.back()) + R.copairing(lam.bullet_up, R.rank - 1);
        if (!is_integer(par) || BigInt(par.get_num() % 2) == 0)
            throw std::invalid_argument("digit " + std::to_string(R.rank) + " violates the parity rule for this minuscule class");
    }
    lam.digits = digits;
    lam.lower = WeightVec(R.rank);
    for (int i = 0; i < R.rank; ++i)
        lam.lower += make_rat(digits[static_cast<size_t>(i)] - 1, c.p) * c.basis[static_cast<size_t>(i)];
    lam.value = lam.lower - lam.bullet_up;
    return lam;
}

LambdaParam parse_lambda(const ShiftCase& c, const std::string& text) {
    std::vector<long> parts;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            parts.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad lambda entry '" + item + "' in '" + text + "'");
        }
    }
    if (parts.empty()) throw std::invalid_argument("empty lambda");
    int bullet = static_cast<int>(parts.front());
    std::vector<long> digits(parts.begin() + 1, parts.end());
    return make_lambda(c, bullet, digits);
}

LambdaParam lambda_of_coset(const WeightVec& mu, const ShiftCase& c) {
    const RootSystem& R = *c.rs;
    Decomposition d = canonical_decompose(mu, c);
    int k = R.minuscule_index(d.upper);
    if (k < 0) throw std::logic_error("upper part " + d.upper.str() + " is not in P");
    WeightVec lx = d.lower + c.x;
    std::vector<long> digits;
    for (int i = 0; i < R.rank; ++i) {
        Rat v = Rat(c.p) * R.copairing(lx, i);
        if (c.variant == Variant::NonSuper) v *= R.norms[static_cast<size_t>(i)] / 2;
        digits.push_back(to_long(v));
    }
    return make_lambda(c, k, digits);
}

std::vector<LambdaParam> enumerate_lambda(const ShiftCase& c) {
    const RootSystem& R = *c.rs;
    std::vector<LambdaParam> out;
    for (int b = 0; b < static_cast<int>(R.minuscule.size()); ++b) {
        std::vector<long> d(static_cast<size_t>(R.rank), 1);
        for (;;) {
            bool ok = true;
            if (is_super(c.variant)) {
                Rat par = Rat(d.back()) + R.copairing(R.minuscule[static_cast<size_t>(b)], R.rank - 1);
                ok = BigInt(par.get_num() % 2) != 0;
            }
            if (ok) out.push_back(make_lambda(c, b, d));
            int pos = R.rank - 1;
            while (pos >= 0 && d[static_cast<size_t>(pos)] == c.digit_max[static_cast<size_t>(pos)]) {
                d[static_cast<size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++d[static_cast<size_t>(pos)];
        }
    }
    return out;
}

LambdaParam w_act(const IntMat& sigma, const LambdaParam& lam, const ShiftCase& c) {
    WeightVec nu = act(sigma, lam.value + c.x) - c.x;
    return lambda_of_coset(nu, c);
}

WeightVec shift_map(const IntMat& sigma, const LambdaParam& lam, const ShiftCase& c) {
    WeightVec moved = act(sigma, lam.lower + c.x) - c.x;
    return -decompose_any(moved, c).upper;
}

Rat lower_pairing(int i, const LambdaParam& lam, const ShiftCase& c) { return c.rs->copairing(lam.lower + c.x, i); }

bool is_fixed(int i, const LambdaParam& lam, const ShiftCase& c) { return lower_pairing(i, lam, c) == 1; }

Rat alcove_value(const LambdaParam& lam, const ShiftCase& c) {
    const RootSystem& R = *c.rs;
    const WeightVec& shiftv = c.variant == Variant::NonSuper ? R.rho_check : R.rho;
    return R.pairing(Rat(c.p) * lam.lower + shiftv, R.theta_L);
}

bool alcove_inequality(const LambdaParam& lam, const ShiftCase& c) { return alcove_value(lam, c) <= c.p; }

Rat screening_residue_raw(int i, const LambdaParam& lam, const ShiftCase& c) {
    const RootSystem& R = *c.rs;
    if (c.variant == Variant::NonSuper)
        return R.pairing(Rat(c.p) * lam.value + R.rho_check, R.simple_roots[static_cast<size_t>(i)]);
    return R.copairing(Rat(c.p) * lam.value + R.rho, i);
}

long screening_degree(int i, const LambdaParam& lam, const ShiftCase& c) {
    if (is_fixed(i, lam, c)) return 0;
    long raw = to_long(screening_residue_raw(i, lam, c));
    return ((raw % c.p) + c.p) % c.p;
}

WeightVec expected_w0_shift(const ShiftCase& c) { return -c.rs->rho; }

WeightVec literal_w0_shift(const ShiftCase& c) {
    return c.variant == Variant::NonSuper ? -c.rs->rho_check : -c.rs->rho;
}

bool fixed_somewhere(const LambdaParam& lam, const ShiftCase& c) {
    for (int i = 0; i < c.rs->rank; ++i)
        if (is_fixed(i, lam, c)) return true;
    return false;
}

ShiftSystem::ShiftSystem(ShiftCase c, bool parallel) : c_(std::move(c)) {
    weyl_ = std::make_unique<WeylGroup>(*c_.rs, caps().weyl);
    lambdas_ = enumerate_lambda(c_);
    for (size_t l = 0; l < lambdas_.size(); ++l)
        index_.emplace(std::make_pair(lambdas_[l].bullet, lambdas_[l].digits), static_cast<int>(l));
    const size_t nl = lambdas_.size();
    const long nw = weyl_->size();
    act_.assign(static_cast<size_t>(nw) * nl, -1);
    shift_.assign(static_cast<size_t>(nw) * nl, WeightVec());
    const long total = nw * static_cast<long>(nl);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long k = 0; k < total; ++k) {
        int w = static_cast<int>(k / static_cast<long>(nl));
        size_t l = static_cast<size_t>(k % static_cast<long>(nl));
        const IntMat& a = (*weyl_)[w].action;
        act_[static_cast<size_t>(k)] = index_of(w_act(a, lambdas_[l], c_));
        shift_[static_cast<size_t>(k)] = shift_map(a, lambdas_[l], c_);
    }
    WeylElement w0 = (*weyl_)[weyl_->longest()];
    if (count_reduced_words(*c_.rs, w0) <= caps().words) w0_words_ = all_reduced_words(*c_.rs, w0, caps().words);
}

int ShiftSystem::find(int bullet, const std::vector<long>& digits) const {
    auto it = index_.find(std::make_pair(bullet, digits));
    return it == index_.end() ? -1 : it->second;
}

const std::vector<std::vector<int>>& ShiftSystem::w0_words() const {
    if (w0_words_.empty())
        throw SizeError("reduced words of w0 for " + c_.rs->lie_type.name() + " exceed the word cap " +
                        std::to_string(caps().words));
    return w0_words_;
}

void ShiftSystem::validate_w0_word(const std::vector<int>& word) const {
    for (int i : word)
        if (i < 0 || i >= c_.rs->rank) throw std::invalid_argument("letter out of range in word");
    if (static_cast<int>(word.size()) != (*weyl_)[weyl_->longest()].length ||
        weyl_->from_word(word) != weyl_->longest())
        throw std::invalid_argument("not a reduced word of the longest element");
}

bool ShiftSystem::check_weak(int l) const {
    const RootSystem& R = *c_.rs;
    for (int j = 0; j < R.rank; ++j) {
        if (fixed(j, l)) continue;
        const WeightVec& s = shift(weyl_->simple(j), l);
        for (int i = 0; i < R.rank; ++i)
            if (R.copairing(s, i) != (i == j ? -1 : 0)) return false;
    }
    return true;
}

bool ShiftSystem::check_strong(int l, const std::vector<int>& word) const {
    validate_w0_word(word);
    int w = weyl_->identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (c_.rs->copairing(shift(w, l), *it) != 0) return false;
        w = weyl_->left_mult(*it, w);
    }
    return true;
}

bool ShiftSystem::check_strong_alt(int l, const std::vector<int>& word) const {
    validate_w0_word(word);
    int w = weyl_->identity();
    WeightVec sum(c_.rs->rank);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        sum += shift(weyl_->simple(*it), act(w, l));
        w = weyl_->left_mult(*it, w);
        if (shift(w, l) != sum) return false;
    }
    return true;
}

bool ShiftSystem::check_strong_all_words(int l) const {
    for (const auto& word : w0_words())
        if (!check_strong(l, word)) return false;
    return true;
}

WeightVec ShiftSystem::w0_shift_along(int l, const std::vector<int>& word) const {
    validate_w0_word(word);
    int w = weyl_->identity();
    WeightVec s(c_.rs->rank);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        s = c_.rs->reflect(*it, s) + shift(weyl_->simple(*it), act(w, l));
        w = weyl_->left_mult(*it, w);
    }
    return s;
}

WeightVec ShiftSystem::telescoped_shift(int w, int l) const {
    const auto& word = (*weyl_)[w].word;
    int u = weyl_->identity();
    WeightVec s(c_.rs->rank);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        s = c_.rs->reflect(*it, s) + shift(weyl_->simple(*it), act(u, l));
        u = weyl_->left_mult(*it, u);
    }
    return s;
}

namespace {

std::string word_str(const std::vector<int>& word) {
    std::ostringstream os;
    os << '[';
    for (size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << word[k] + 1;
    os << ']';
    return os.str();
}

struct Sink {
    std::map<std::string, long> counts;
    std::vector<Failure> failures;

    void check(bool ok, const std::string& name, const std::string& lam, const std::string& witness) {
        ++counts[name];
        if (!ok) failures.push_back({name, lam, witness});
    }
};

ShiftReport merge(const ShiftCase& c, std::vector<Sink>& parts) {
    ShiftReport rep;
    rep.case_id = c.id();
    for (auto& s : parts) {
        for (const auto& [k, v] : s.counts) rep.counts[k] += v;
        for (auto& f : s.failures) rep.failures.push_back(std::move(f));
    }
    return rep;
}

}  // namespace

ShiftReport verify_axioms(const ShiftSystem& sys, bool parallel) {
    const RootSystem& R = sys.rs();
    const WeylGroup& W = sys.weyl();
    const int n = sys.size();
    std::vector<Sink> parts(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (int l = 0; l < n; ++l) {
        Sink& out = parts[static_cast<size_t>(l)];
        const std::string lab = sys.lambdas()[static_cast<size_t>(l)].label();
        out.check(sys.act(W.identity(), l) == l, "action-identity", lab, "e*lambda moved");
        out.check(sys.shift(W.identity(), l).is_zero(), "id-shift", lab, "id up lambda = " + sys.shift(W.identity(), l).str());
        for (int w = 0; w < W.size(); ++w) {
            const WeightVec& sw = sys.shift(w, l);
            const std::string ws = word_str(W[w].word);
            out.check(R.in_weight_lattice(sw), "integral", lab, "w=" + ws + " shift=" + sw.str());
            WeightVec tel = sys.telescoped_shift(w, l);
            out.check(tel == sw, "telescope", lab, "w=" + ws + " telescoped=" + tel.str() + " direct=" + sw.str());
            for (int i = 0; i < R.rank; ++i) {
                int siw = W.left_mult(i, w);
                int via = sys.act(W.simple(i), sys.act(w, l));
                out.check(sys.act(siw, l) == via, "action-law", lab, "w=" + ws + " i=" + std::to_string(i + 1));
                WeightVec rhs = R.reflect(i, sw) + sys.shift(W.simple(i), sys.act(w, l));
                out.check(sys.shift(siw, l) == rhs, "2a", lab,
                          "w=" + ws + " i=" + std::to_string(i + 1) + " lhs=" + sys.shift(siw, l).str() + " rhs=" + rhs.str());
                Rat pr = R.copairing(sw, i);
                if (W[siw].length == W[w].length + 1)
                    out.check(pr >= 0, "2b", lab, "w=" + ws + " i=" + std::to_string(i + 1) + " pairing=" + rat_str(pr));
                else
                    out.check(pr < 0, "descent", lab, "w=" + ws + " i=" + std::to_string(i + 1) + " pairing=" + rat_str(pr));
            }
        }
        for (int i = 0; i < R.rank; ++i) {
            const std::string is = "i=" + std::to_string(i + 1);
            int si = W.simple(i);
            bool fx = sys.fixed(i, l);
            const WeightVec& s = sys.shift(si, l);
            const WeightVec& ai = R.simple_roots[static_cast<size_t>(i)];
            if (fx)
                out.check(s == -ai, "2c", lab, is + " fixed, shift=" + s.str());
            else
                out.check(R.copairing(s, i) == -1, "2c", lab, is + " pairing=" + rat_str(R.copairing(s, i)));
            WeightVec pair = s + sys.shift(si, sys.act(si, l));
            out.check(pair == (fx ? Rat(-2) : Rat(-1)) * ai, "pair-sum", lab, is + " sum=" + pair.str());
            bool crit = is_fixed(i, sys.lambdas()[static_cast<size_t>(l)], sys.shift_case());
            out.check(crit == fx, "fixed-criterion", lab, is);
        }
    }
    return merge(sys.shift_case(), parts);
}

ShiftReport verify_axioms_reference(const ShiftCase& c) {
    const RootSystem& R = *c.rs;
    auto elems = enumerate_weyl(R, caps().weyl);
    auto lams = enumerate_lambda(c);
    std::vector<IntMat> simple;
    for (int i = 0; i < R.rank; ++i) simple.push_back(reflection_matrix(R, i));
    auto positive = [&](const WeightVec& v) {
        for (int k = 0; k < v.rank(); ++k)
            if (v[k] < 0) return false;
        return true;
    };
    std::vector<Sink> parts(lams.size());
    for (size_t l = 0; l < lams.size(); ++l) {
        Sink& out = parts[l];
        const LambdaParam& lam = lams[l];
        const std::string lab = lam.label();
        IntMat id = apply_word(R, {});
        out.check(w_act(id, lam, c) == lam, "action-identity", lab, "e*lambda moved");
        out.check(shift_map(id, lam, c).is_zero(), "id-shift", lab, "id up lambda nonzero");
        for (const auto& e : elems) {
            WeightVec sw = shift_map(e.action, lam, c);
            LambdaParam wl = w_act(e.action, lam, c);
            const std::string ws = word_str(e.word);
            out.check(R.in_weight_lattice(sw), "integral", lab, "w=" + ws);
            // (2a) iterated along the stored word from the right
            WeightVec tel(R.rank);
            IntMat u = id;
            for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) {
                tel = R.reflect(*it, tel) + shift_map(simple[static_cast<size_t>(*it)], w_act(u, lam, c), c);
                u = mat_mul(simple[static_cast<size_t>(*it)], u);
            }
            out.check(tel == sw, "telescope", lab, "w=" + ws);
            IntMat inv = apply_word(R, std::vector<int>(e.word.rbegin(), e.word.rend()));
            for (int i = 0; i < R.rank; ++i) {
                IntMat siw = mat_mul(simple[static_cast<size_t>(i)], e.action);
                out.check(w_act(siw, lam, c) == w_act(simple[static_cast<size_t>(i)], wl, c), "action-law", lab,
                          "w=" + ws + " i=" + std::to_string(i + 1));
                WeightVec rhs = R.reflect(i, sw) + shift_map(simple[static_cast<size_t>(i)], wl, c);
                out.check(shift_map(siw, lam, c) == rhs, "2a", lab, "w=" + ws + " i=" + std::to_string(i + 1));
                bool up = positive(act(inv, R.simple_roots[static_cast<size_t>(i)]));
                Rat pr = R.copairing(sw, i);
                if (up)
                    out.check(pr >= 0, "2b", lab, "w=" + ws + " i=" + std::to_string(i + 1));
                else
                    out.check(pr < 0, "descent", lab, "w=" + ws + " i=" + std::to_string(i + 1));
            }
        }
        for (int i = 0; i < R.rank; ++i) {
            const IntMat& si = simple[static_cast<size_t>(i)];
            LambdaParam moved = w_act(si, lam, c);
            bool fx = moved == lam;
            WeightVec s = shift_map(si, lam, c);
            const WeightVec& ai = R.simple_roots[static_cast<size_t>(i)];
            const std::string is = "i=" + std::to_string(i + 1);
            if (fx)
                out.check(s == -ai, "2c", lab, is);
            else
                out.check(R.copairing(s, i) == -1, "2c", lab, is);
            WeightVec pair = s + shift_map(si, moved, c);
            out.check(pair == (fx ? Rat(-2) : Rat(-1)) * ai, "pair-sum", lab, is);
            out.check(is_fixed(i, lam, c) == fx, "fixed-criterion", lab, is);
        }
    }
    return merge(c, parts);
}

ShiftReport condition_report(const ShiftSystem& sys, bool all_words, bool parallel) {
    const ShiftCase& c = sys.shift_case();
    const RootSystem& R = sys.rs();
    const WeylGroup& W = sys.weyl();
    const int n = sys.size();
    if (all_words) (void)sys.w0_words();  // surface the size error before the sweep
    const auto& word = sys.default_word();
    const WeightVec expect = expected_w0_shift(c);
    std::vector<Sink> parts(static_cast<size_t>(n));
    std::vector<LambdaRow> rows(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (int l = 0; l < n; ++l) {
        Sink& out = parts[static_cast<size_t>(l)];
        LambdaRow& row = rows[static_cast<size_t>(l)];
        const LambdaParam& lam = sys.lambdas()[static_cast<size_t>(l)];
        row.lambda = lam.label();
        row.weak = sys.check_weak(l);
        row.strong = sys.check_strong(l, word);
        row.strong_alt = sys.check_strong_alt(l, word);
        row.alcove_value = alcove_value(lam, c);
        row.alcove = row.alcove_value <= c.p;
        row.w0_shift = sys.shift(W.longest(), l);
        for (int i = 0; i < R.rank; ++i) row.screening.push_back(screening_degree(i, lam, c));
        row.strong_all_words = row.strong;
        if (all_words) {
            bool all = true, any = false;
            std::string bad;
            for (const auto& wd : sys.w0_words()) {
                bool ok = sys.check_strong(l, wd);
                all = all && ok;
                any = any || ok;
                if (!ok && bad.empty()) bad = word_str(wd);
            }
            row.strong_all_words = all;
            out.check(all == any, "word-independence", row.lambda, "fails along " + bad);
        }
        out.check(row.strong == row.strong_alt, "strong-vs-alt", row.lambda,
                  "strong=" + std::to_string(row.strong) + " alt=" + std::to_string(row.strong_alt));
        out.check(row.strong_all_words == row.alcove, "strong-vs-alcove", row.lambda,
                  "strong=" + std::to_string(row.strong_all_words) + " alcove value=" + rat_str(row.alcove_value));
        // a sigma_i-fixed lambda (strong only in rank one) has sigma_i up lambda = -alpha_i instead
        if (row.strong && !fixed_somewhere(lam, c))
            out.check(row.w0_shift == expect, "w0-shift", row.lambda, "w0 up lambda = " + row.w0_shift.str());
        WeightVec along = sys.w0_shift_along(l, word);
        out.check(along == row.w0_shift, "w0-telescope", row.lambda, along.str());
    }
    ShiftReport rep = merge(c, parts);
    rep.rows = std::move(rows);
    long weak = 0, strong = 0, alc = 0;
    for (const auto& r : rep.rows) {
        weak += r.weak;
        strong += r.strong_all_words;
        alc += r.alcove;
    }
    rep.counts["lambda"] = n;
    rep.counts["weak-true"] = weak;
    rep.counts["strong-true"] = strong;
    rep.counts["alcove-true"] = alc;
    return rep;
}

ShiftReport shift_facts_report(const ShiftSystem& sys) {
    const ShiftCase& c = sys.shift_case();
    const RootSystem& R = sys.rs();
    const WeylGroup& W = sys.weyl();
    std::vector<Sink> parts(1);
    Sink& out = parts[0];
    for (int l = 0; l < sys.size(); ++l) {
        const LambdaParam& lam = sys.lambdas()[static_cast<size_t>(l)];
        const std::string lab = lam.label();
        out.check(sys.shift(W.identity(), l).is_zero(), "id-shift", lab, "");
        out.check(lambda_of_coset(lam.value, c) == lam, "round-trip", lab, "");
        Decomposition d = canonical_decompose(lam.value, c);
        out.check(d.lower == lam.lower, "decompose", lab, d.lower.str());
        for (int i = 0; i < R.rank; ++i) {
            const std::string is = "i=" + std::to_string(i + 1);
            int si = W.simple(i);
            bool fx = sys.fixed(i, l);
            WeightVec pair = sys.shift(si, l) + sys.shift(si, sys.act(si, l));
            out.check(pair == (fx ? Rat(-2) : Rat(-1)) * R.simple_roots[static_cast<size_t>(i)], "pair-sum", lab, is);
            long s = screening_degree(i, lam, c);
            out.check(fx ? s == 0 : (s >= 1 && s <= c.p - 1), "screening-degree", lab, is + " s=" + std::to_string(s));
        }
        WeightVec along = sys.w0_shift_along(l, sys.default_word());
        out.check(along == sys.shift(W.longest(), l), "w0-telescope", lab, along.str());
    }
    return merge(c, parts);
}

}  // namespace shiftlab
