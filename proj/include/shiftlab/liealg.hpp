#pragma once

#include <map>
#include <string>
#include <vector>

#include "shiftlab/weight.hpp"

namespace shiftlab {

// Bourbaki labelling. B1 is the rank-one type whose root is short (|a|^2 = 1);
// it is only used by the osp(1|2) family.
struct SimpleLieType {
    char series = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, series) + std::to_string(rank); }
    static SimpleLieType parse(const std::string& s);
    void validate() const;
    friend bool operator==(const SimpleLieType& a, const SimpleLieType& b) {
        return a.series == b.series && a.rank == b.rank;
    }
};

using IntMat = std::vector<std::vector<long>>;
using RatMat = std::vector<std::vector<Rat>>;

struct RootSystem {
    SimpleLieType lie_type;
    int rank = 0;
    RatMat gram;    // (a_i, a_j)
    IntMat cartan;  // C_ij = (a_j, a_i^v)
    std::vector<Rat> norms;
    std::vector<bool> simple_long;

    std::vector<WeightVec> simple_roots, simple_coroots, fund_weights, fund_coweights;
    WeightVec rho, rho_check, theta, theta_s, theta_L;
    int lacing = 1;
    int coxeter = 0, dual_coxeter = 0, dual_coxeter_L = 0;
    std::vector<int> exponents;
    std::vector<WeightVec> positive_roots;  // sorted by height, then coordinates
    std::vector<WeightVec> minuscule;       // minuscule[0] == 0
    BigInt weyl_order;                      // closed form
    long det_cartan = 1;

    Rat pairing(const WeightVec& mu, const WeightVec& nu) const;
    Rat copairing(const WeightVec& mu, int i) const;  // (mu, a_i^v)
    WeightVec reflect(int i, const WeightVec& mu) const;
    WeightVec coroot(const WeightVec& root) const;  // 2a/|a|^2
    Rat norm2(const WeightVec& mu) const { return pairing(mu, mu); }
    bool is_long_root(const WeightVec& root) const;
    int r_check(int i) const { return simple_long[static_cast<size_t>(i)] ? lacing : 1; }
    bool is_dominant_integral(const WeightVec& beta) const;
    bool in_root_lattice(const WeightVec& mu) const { return mu.is_integral(); }
    bool in_weight_lattice(const WeightVec& mu) const;
    WeightVec from_fundamental(const std::vector<Rat>& coeffs) const;  // sum c_i w_i
    std::vector<Rat> to_fundamental(const WeightVec& mu) const;       // (mu, a_i^v)
    int minuscule_index(const WeightVec& mu) const;                   // class of mu in P/Q
};

RootSystem build_root_system(const SimpleLieType& t);
BigInt weyl_group_order(const SimpleLieType& t);

struct WeylElement {
    std::vector<int> word;  // (i1,...,ik) means s_{i1} s_{i2} ... s_{ik}
    IntMat action;          // on simple-root coordinates
    int length = 0;
};

IntMat apply_word(const RootSystem& rs, const std::vector<int>& word);
WeightVec act(const IntMat& a, const WeightVec& mu);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat reflection_matrix(const RootSystem& rs, int i);
IntMat root_reflection_matrix(const RootSystem& rs, const WeightVec& root);

// Fully enumerated Weyl group with multiplication tables.
class WeylGroup {
public:
    WeylGroup(const RootSystem& rs, long cap);

    const RootSystem& root_system() const { return *rs_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const WeylElement& operator[](int w) const { return elems_[static_cast<size_t>(w)]; }
    const std::vector<WeylElement>& elements() const { return elems_; }

    int identity() const { return 0; }
    int longest() const { return longest_; }
    int simple(int i) const { return simple_[static_cast<size_t>(i)]; }
    int left_mult(int i, int w) const { return left_[static_cast<size_t>(i)][static_cast<size_t>(w)]; }
    int mult(int a, int b) const;
    int inverse(int a) const { return inverse_[static_cast<size_t>(a)]; }
    int find(const IntMat& action) const;  // -1 when absent
    int from_word(const std::vector<int>& word) const;
    WeightVec apply(int w, const WeightVec& mu) const { return act(elems_[static_cast<size_t>(w)].action, mu); }
    // sigma o mu = sigma(mu + rho) - rho
    WeightVec dot(int w, const WeightVec& mu) const;

private:
    std::vector<long> key_of(const IntMat& a) const;

    const RootSystem* rs_;
    std::vector<WeylElement> elems_;
    std::map<std::vector<long>, int> index_;
    std::vector<std::vector<int>> left_;
    std::vector<int> inverse_;
    std::vector<int> simple_;
    int longest_ = 0;
};

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, long cap);
// Built letter by letter, no enumeration needed.
WeylElement longest_element(const RootSystem& rs);
std::vector<std::vector<int>> all_reduced_words(const RootSystem& rs, const WeylElement& w, long cap);
BigInt count_reduced_words(const RootSystem& rs, const WeylElement& w);
BigInt weyl_dim(const RootSystem& rs, const WeightVec& beta);

// Dominant elements of Q (or of a shifted coset lambda_up + Q) with height <= max_height.
std::vector<WeightVec> dominant_in_root_lattice(const RootSystem& rs, int max_height);
Rat height(const WeightVec& mu);

}  // namespace shiftlab
