#include "shiftlab/liealg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

#include "shiftlab/config.hpp"

namespace shiftlab {

namespace {

struct DynkinData {
    std::vector<Rat> norms;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> exponents;
};

DynkinData dynkin(const SimpleLieType& t) {
    const int r = t.rank;
    DynkinData d;
    d.norms.assign(static_cast<size_t>(r), Rat(2));
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
    };
    switch (t.series) {
        case 'A':
            chain(r);
            for (int i = 1; i <= r; ++i) d.exponents.push_back(i);
            break;
        case 'B':
            chain(r);
            d.norms[static_cast<size_t>(r - 1)] = 1;
            for (int i = 1; i <= r; ++i) d.exponents.push_back(2 * i - 1);
            break;
        case 'C':
            chain(r);
            for (int i = 0; i + 1 < r; ++i) d.norms[static_cast<size_t>(i)] = 1;
            for (int i = 1; i <= r; ++i) d.exponents.push_back(2 * i - 1);
            break;
        case 'D':
            chain(r - 1);
            d.edges.emplace_back(r - 3, r - 1);
            for (int i = 1; i <= r - 1; ++i) d.exponents.push_back(2 * i - 1);
            d.exponents.push_back(r - 1);
            std::sort(d.exponents.begin(), d.exponents.end());
            break;
        case 'E':
            d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
            for (int i = 4; i + 1 < r; ++i) d.edges.emplace_back(i, i + 1);
            if (r == 6) d.exponents = {1, 4, 5, 7, 8, 11};
            if (r == 7) d.exponents = {1, 5, 7, 9, 11, 13, 17};
            if (r == 8) d.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
            break;
        case 'F':
            chain(4);
            d.norms[2] = 1;
            d.norms[3] = 1;
            d.exponents = {1, 5, 7, 11};
            break;
        case 'G':
            d.edges = {{0, 1}};
            d.norms[1] = make_rat(2, 3);
            d.exponents = {1, 5};
            break;
        default:
            break;
    }
    return d;
}

RatMat inverse(RatMat a) {
    const size_t n = a.size();
    RatMat inv(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat s = 1 / a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Rat determinant(RatMat a) {
    const size_t n = a.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            Rat f = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

std::vector<long> int_coords(const WeightVec& v) {
    std::vector<long> out;
    out.reserve(static_cast<size_t>(v.rank()));
    for (int i = 0; i < v.rank(); ++i) out.push_back(to_long(v[i]));
    return out;
}

}  // namespace

SimpleLieType SimpleLieType::parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad Lie type '" + s + "'");
    SimpleLieType t;
    t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    try {
        size_t used = 0;
        t.rank = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad Lie type '" + s + "'");
    }
    t.validate();
    return t;
}

void SimpleLieType::validate() const {
    bool ok = false;
    switch (series) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 1; break;
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 4; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: ok = false;
    }
    if (!ok) throw std::invalid_argument("invalid Dynkin type " + name());
}

BigInt weyl_group_order(const SimpleLieType& t) {
    t.validate();
    auto fact = [](int n) {
        BigInt f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    const int r = t.rank;
    switch (t.series) {
        case 'A': return fact(r + 1);
        case 'B':
        case 'C': return (BigInt(1) << r) * fact(r);
        case 'D': return (BigInt(1) << (r - 1)) * fact(r);
        case 'E':
            if (r == 6) return BigInt(51840);
            if (r == 7) return BigInt(2903040);
            return BigInt(696729600);
        case 'F': return BigInt(1152);
        case 'G': return BigInt(12);
    }
    throw std::invalid_argument("unknown series");
}

Rat RootSystem::pairing(const WeightVec& mu, const WeightVec& nu) const {
    if (mu.rank() != rank || nu.rank() != rank) throw std::invalid_argument("rank mismatch in pairing");
    Rat s = 0;
    for (int i = 0; i < rank; ++i) {
        if (mu[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < rank; ++j)
            if (nu[j] != 0) row += gram[static_cast<size_t>(i)][static_cast<size_t>(j)] * nu[j];
        s += mu[i] * row;
    }
    return s;
}

Rat RootSystem::copairing(const WeightVec& mu, int i) const {
    if (mu.rank() != rank) throw std::invalid_argument("rank mismatch in copairing");
    if (i < 0 || i >= rank) throw std::out_of_range("simple index out of range");
    Rat s = 0;
    const auto& row = cartan[static_cast<size_t>(i)];
    for (int k = 0; k < rank; ++k)
        if (row[static_cast<size_t>(k)] != 0 && mu[k] != 0) s += mu[k] * row[static_cast<size_t>(k)];
    return s;
}

WeightVec RootSystem::reflect(int i, const WeightVec& mu) const {
    WeightVec out(mu);
    out[i] -= copairing(mu, i);
    return out;
}

WeightVec RootSystem::coroot(const WeightVec& root) const { return (Rat(2) / norm2(root)) * root; }

bool RootSystem::is_long_root(const WeightVec& root) const {
    Rat n = norm2(root);
    return n == 2;
}

bool RootSystem::is_dominant_integral(const WeightVec& beta) const {
    for (int i = 0; i < rank; ++i) {
        Rat c = copairing(beta, i);
        if (!is_integer(c) || c < 0) return false;
    }
    return true;
}

bool RootSystem::in_weight_lattice(const WeightVec& mu) const {
    for (int i = 0; i < rank; ++i)
        if (!is_integer(copairing(mu, i))) return false;
    return true;
}

WeightVec RootSystem::from_fundamental(const std::vector<Rat>& coeffs) const {
    WeightVec out(rank);
    for (int i = 0; i < rank; ++i)
        if (coeffs[static_cast<size_t>(i)] != 0) out += coeffs[static_cast<size_t>(i)] * fund_weights[static_cast<size_t>(i)];
    return out;
}

std::vector<Rat> RootSystem::to_fundamental(const WeightVec& mu) const {
    std::vector<Rat> out;
    for (int i = 0; i < rank; ++i) out.push_back(copairing(mu, i));
    return out;
}

int RootSystem::minuscule_index(const WeightVec& mu) const {
    for (size_t k = 0; k < minuscule.size(); ++k)
        if ((mu - minuscule[k]).is_integral()) return static_cast<int>(k);
    return -1;
}

RootSystem build_root_system(const SimpleLieType& t) {
    t.validate();
    RootSystem rs;
    rs.lie_type = t;
    const int r = t.rank;
    rs.rank = r;
    DynkinData d = dynkin(t);
    rs.norms = d.norms;
    rs.exponents = d.exponents;
    if (t.series == 'B' && r == 1) rs.exponents = {1};

    rs.gram.assign(static_cast<size_t>(r), std::vector<Rat>(static_cast<size_t>(r)));
    for (int i = 0; i < r; ++i) rs.gram[static_cast<size_t>(i)][static_cast<size_t>(i)] = d.norms[static_cast<size_t>(i)];
    for (auto [i, j] : d.edges) {
        Rat v = -std::max(d.norms[static_cast<size_t>(i)], d.norms[static_cast<size_t>(j)]) / 2;
        rs.gram[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        rs.gram[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
    }
    rs.cartan.assign(static_cast<size_t>(r), std::vector<long>(static_cast<size_t>(r)));
    RatMat cartan_q(static_cast<size_t>(r), std::vector<Rat>(static_cast<size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rat c = 2 * rs.gram[static_cast<size_t>(i)][static_cast<size_t>(j)] / rs.gram[static_cast<size_t>(i)][static_cast<size_t>(i)];
            rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] = to_long(c);
            cartan_q[static_cast<size_t>(i)][static_cast<size_t>(j)] = c;
        }
    rs.det_cartan = to_long(determinant(cartan_q));

    Rat max_norm = *std::max_element(d.norms.begin(), d.norms.end());
    Rat min_norm = *std::min_element(d.norms.begin(), d.norms.end());
    if (t.series == 'B' && r == 1) {
        rs.lacing = 2;
        rs.simple_long = {false};
    } else {
        rs.lacing = to_long(max_norm / min_norm);
        for (int i = 0; i < r; ++i) rs.simple_long.push_back(d.norms[static_cast<size_t>(i)] == max_norm);
    }

    for (int i = 0; i < r; ++i) {
        rs.simple_roots.push_back(unit_vec(r, i));
        rs.simple_coroots.push_back((Rat(2) / d.norms[static_cast<size_t>(i)]) * unit_vec(r, i));
    }
    // w_i = sum_k M_ik a_k with M C^T = 1
    RatMat ct(static_cast<size_t>(r), std::vector<Rat>(static_cast<size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) ct[static_cast<size_t>(i)][static_cast<size_t>(j)] = cartan_q[static_cast<size_t>(j)][static_cast<size_t>(i)];
    RatMat m = inverse(ct);
    rs.rho = WeightVec(r);
    rs.rho_check = WeightVec(r);
    for (int i = 0; i < r; ++i) {
        WeightVec w(m[static_cast<size_t>(i)]);
        rs.fund_weights.push_back(w);
        WeightVec wc = (Rat(2) / d.norms[static_cast<size_t>(i)]) * w;
        rs.fund_coweights.push_back(wc);
        rs.rho += w;
        rs.rho_check += wc;
    }

    // roots: orbit of the simple roots under simple reflections
    std::set<WeightVec> roots;
    std::deque<WeightVec> queue;
    for (const auto& a : rs.simple_roots) {
        roots.insert(a);
        queue.push_back(a);
    }
    while (!queue.empty()) {
        WeightVec b = queue.front();
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            WeightVec c = rs.reflect(i, b);
            if (roots.insert(c).second) queue.push_back(c);
        }
    }
    for (const auto& b : roots) {
        bool pos = true;
        for (int i = 0; i < r; ++i)
            if (b[i] < 0) pos = false;
        if (pos) rs.positive_roots.push_back(b);
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const WeightVec& a, const WeightVec& b) {
        Rat ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.theta = rs.positive_roots.back();
    for (const auto& b : rs.positive_roots)
        if (rs.norm2(b) == min_norm) rs.theta_s = b;  // last short root has maximal height
    rs.theta_L = rs.coroot(rs.theta_s);

    rs.coxeter = to_long(height(rs.theta)) + 1;
    WeightVec theta_v = rs.coroot(rs.theta);
    rs.dual_coxeter = to_long(rs.pairing(rs.rho, theta_v)) + 1;
    rs.dual_coxeter_L = to_long(rs.pairing(rs.rho_check, rs.theta_s)) + 1;

    rs.minuscule.push_back(WeightVec(r));
    for (int i = 0; i < r; ++i)
        if (rs.pairing(rs.fund_weights[static_cast<size_t>(i)], rs.theta_L) == 1) rs.minuscule.push_back(rs.fund_weights[static_cast<size_t>(i)]);
    rs.weyl_order = weyl_group_order(t);
    return rs;
}

Rat height(const WeightVec& mu) {
    Rat h = 0;
    for (int i = 0; i < mu.rank(); ++i) h += mu[i];
    return h;
}

WeightVec act(const IntMat& a, const WeightVec& mu) {
    const int r = mu.rank();
    WeightVec out(r);
    for (int i = 0; i < r; ++i) {
        Rat s = 0;
        for (int k = 0; k < r; ++k) {
            long v = a[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (v != 0 && mu[k] != 0) s += mu[k] * v;
        }
        out[i] = s;
    }
    return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const size_t n = a.size();
    IntMat out(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            long v = a[i][k];
            if (v == 0) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += v * b[k][j];
        }
    return out;
}

IntMat reflection_matrix(const RootSystem& rs, int i) {
    const int r = rs.rank;
    IntMat s(static_cast<size_t>(r), std::vector<long>(static_cast<size_t>(r), 0));
    for (int k = 0; k < r; ++k) s[static_cast<size_t>(k)][static_cast<size_t>(k)] = 1;
    // s_i(e_k) = e_k - C_ik e_i
    for (int k = 0; k < r; ++k) s[static_cast<size_t>(i)][static_cast<size_t>(k)] -= rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(k)];
    return s;
}

IntMat root_reflection_matrix(const RootSystem& rs, const WeightVec& root) {
    const int r = rs.rank;
    WeightVec cr = rs.coroot(root);
    IntMat s(static_cast<size_t>(r), std::vector<long>(static_cast<size_t>(r), 0));
    for (int k = 0; k < r; ++k) {
        WeightVec e = unit_vec(r, k);
        WeightVec img = e - rs.pairing(e, cr) * root;
        for (int i = 0; i < r; ++i) s[static_cast<size_t>(i)][static_cast<size_t>(k)] = to_long(img[i]);
    }
    return s;
}

IntMat apply_word(const RootSystem& rs, const std::vector<int>& word) {
    const int r = rs.rank;
    IntMat a(static_cast<size_t>(r), std::vector<long>(static_cast<size_t>(r), 0));
    for (int k = 0; k < r; ++k) a[static_cast<size_t>(k)][static_cast<size_t>(k)] = 1;
    for (int i : word) a = mat_mul(a, reflection_matrix(rs, i));
    return a;
}

WeylGroup::WeylGroup(const RootSystem& rs, long cap) : rs_(&rs) {
    if (rs.weyl_order > cap)
        throw SizeError("Weyl group of " + rs.lie_type.name() + " has " + rs.weyl_order.get_str() +
                        " elements, above the enumeration cap " + std::to_string(cap));
    const int r = rs.rank;
    std::vector<IntMat> refl;
    for (int i = 0; i < r; ++i) refl.push_back(reflection_matrix(rs, i));

    WeylElement e;
    e.action = apply_word(rs, {});
    std::vector<WeylElement> found{e};
    std::map<std::vector<long>, int> seen{{key_of(e.action), 0}};
    size_t head = 0;
    while (head < found.size()) {
        WeylElement cur = found[head++];
        for (int i = 0; i < r; ++i) {
            IntMat a = mat_mul(refl[static_cast<size_t>(i)], cur.action);
            auto k = key_of(a);
            if (seen.count(k)) continue;
            WeylElement nx;
            nx.action = std::move(a);
            nx.word.push_back(i);
            nx.word.insert(nx.word.end(), cur.word.begin(), cur.word.end());
            nx.length = cur.length + 1;
            seen.emplace(std::move(k), static_cast<int>(found.size()));
            found.push_back(std::move(nx));
        }
    }
    std::sort(found.begin(), found.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    elems_ = std::move(found);
    for (size_t w = 0; w < elems_.size(); ++w) index_.emplace(key_of(elems_[w].action), static_cast<int>(w));

    left_.assign(static_cast<size_t>(r), std::vector<int>(elems_.size()));
    for (int i = 0; i < r; ++i)
        for (size_t w = 0; w < elems_.size(); ++w)
            left_[static_cast<size_t>(i)][w] = find(mat_mul(refl[static_cast<size_t>(i)], elems_[w].action));
    for (int i = 0; i < r; ++i) simple_.push_back(find(refl[static_cast<size_t>(i)]));
    inverse_.assign(elems_.size(), -1);
    for (size_t w = 0; w < elems_.size(); ++w) {
        std::vector<int> rev(elems_[w].word.rbegin(), elems_[w].word.rend());
        inverse_[w] = from_word(rev);
    }
    longest_ = static_cast<int>(elems_.size()) - 1;
}

std::vector<long> WeylGroup::key_of(const IntMat& a) const {
    WeightVec img = act(a, Rat(2) * rs_->rho);
    return int_coords(img);
}

int WeylGroup::find(const IntMat& action) const {
    auto it = index_.find(key_of(action));
    return it == index_.end() ? -1 : it->second;
}

int WeylGroup::from_word(const std::vector<int>& word) const {
    int w = identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = left_mult(*it, w);
    return w;
}

int WeylGroup::mult(int a, int b) const {
    int w = b;
    const auto& word = elems_[static_cast<size_t>(a)].word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = left_mult(*it, w);
    return w;
}

WeightVec WeylGroup::dot(int w, const WeightVec& mu) const { return apply(w, mu + rs_->rho) - rs_->rho; }

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, long cap) {
    WeylGroup g(rs, cap);
    return g.elements();
}

WeylElement longest_element(const RootSystem& rs) {
    const int r = rs.rank;
    WeylElement w;
    w.action = apply_word(rs, {});
    for (;;) {
        int next = -1;
        for (int i = 0; i < r && next < 0; ++i) {
            bool positive = true;
            for (int k = 0; k < r; ++k)
                if (w.action[static_cast<size_t>(k)][static_cast<size_t>(i)] < 0) positive = false;
            if (positive) next = i;
        }
        if (next < 0) break;
        w.action = mat_mul(w.action, reflection_matrix(rs, next));
        w.word.push_back(next);
    }
    w.length = static_cast<int>(w.word.size());
    return w;
}

namespace {

std::vector<int> right_descents(const RootSystem& rs, const IntMat& a) {
    std::vector<int> out;
    for (int i = 0; i < rs.rank; ++i) {
        bool neg = false;
        for (int k = 0; k < rs.rank; ++k)
            if (a[static_cast<size_t>(k)][static_cast<size_t>(i)] < 0) neg = true;
        if (neg) out.push_back(i);
    }
    return out;
}

}  // namespace

BigInt count_reduced_words(const RootSystem& rs, const WeylElement& w) {
    std::map<IntMat, BigInt> memo;
    std::function<BigInt(const IntMat&)> count = [&](const IntMat& a) -> BigInt {
        auto desc = right_descents(rs, a);
        if (desc.empty()) return 1;
        auto it = memo.find(a);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        for (int i : desc) total += count(mat_mul(a, reflection_matrix(rs, i)));
        memo.emplace(a, total);
        return total;
    };
    return count(w.action);
}

std::vector<std::vector<int>> all_reduced_words(const RootSystem& rs, const WeylElement& w, long cap) {
    BigInt n = count_reduced_words(rs, w);
    if (n > cap)
        throw SizeError("element has " + n.get_str() + " reduced words, above the cap " + std::to_string(cap));
    std::vector<std::vector<int>> out;
    std::vector<int> suffix;
    std::function<void(const IntMat&)> rec = [&](const IntMat& a) {
        auto desc = right_descents(rs, a);
        if (desc.empty()) {
            out.emplace_back(suffix.rbegin(), suffix.rend());
            return;
        }
        for (int i : desc) {
            suffix.push_back(i);
            rec(mat_mul(a, reflection_matrix(rs, i)));
            suffix.pop_back();
        }
    };
    rec(w.action);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt weyl_dim(const RootSystem& rs, const WeightVec& beta) {
    if (!rs.is_dominant_integral(beta))
        throw std::invalid_argument("weyl_dim needs a dominant integral weight, got " + beta.str());
    Rat num = 1, den = 1;
    WeightVec br = beta + rs.rho;
    for (const auto& a : rs.positive_roots) {
        WeightVec av = rs.coroot(a);
        num *= rs.pairing(br, av);
        den *= rs.pairing(rs.rho, av);
    }
    Rat q = num / den;
    if (!is_integer(q)) throw std::logic_error("Weyl dimension not integral");
    return q.get_num();
}

std::vector<WeightVec> dominant_in_root_lattice(const RootSystem& rs, int max_height) {
    std::vector<WeightVec> out;
    const int r = rs.rank;
    std::vector<long> c(static_cast<size_t>(r), 0);
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == r) {
            WeightVec v(r);
            for (int k = 0; k < r; ++k) v[k] = c[static_cast<size_t>(k)];
            if (rs.is_dominant_integral(v)) out.push_back(v);
            return;
        }
        for (long x = 0; x <= left; ++x) {
            c[static_cast<size_t>(i)] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, max_height);
    std::sort(out.begin(), out.end(), [](const WeightVec& a, const WeightVec& b) {
        Rat ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

}  // namespace shiftlab
