#include <map>
#include <set>

#include "doctest.h"
#include "shiftlab/config.hpp"
#include "shiftlab/liealg.hpp"

using namespace shiftlab;

namespace {

RootSystem rs_of(const std::string& t) { return build_root_system(SimpleLieType::parse(t)); }

// orbit of rho under the simple reflections; its size is |W| since rho is regular
size_t rho_orbit(const RootSystem& rs) {
    std::set<WeightVec> seen = {rs.rho};
    std::vector<WeightVec> todo = {rs.rho};
    while (!todo.empty()) {
        WeightVec v = todo.back();
        todo.pop_back();
        for (int i = 0; i < rs.rank; ++i) {
            WeightVec u = rs.reflect(i, v);
            if (seen.insert(u).second) todo.push_back(u);
        }
    }
    return seen.size();
}

// paths from rho to -rho that lower the length one step at a time
BigInt count_paths(const RootSystem& rs, const WeightVec& v, std::map<WeightVec, BigInt>& memo) {
    if (v == -rs.rho) return 1;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    BigInt n = 0;
    for (int i = 0; i < rs.rank; ++i)
        if (rs.copairing(v, i) > 0) n += count_paths(rs, rs.reflect(i, v), memo);
    memo[v] = n;
    return n;
}

std::set<WeightVec> root_closure(const RootSystem& rs) {
    std::set<WeightVec> roots(rs.simple_roots.begin(), rs.simple_roots.end());
    for (bool grew = true; grew;) {
        grew = false;
        for (auto r : std::vector<WeightVec>(roots.begin(), roots.end()))
            for (int i = 0; i < rs.rank; ++i) grew |= roots.insert(rs.reflect(i, r)).second;
    }
    std::set<WeightVec> pos;
    for (const auto& r : roots)
        if (height(r) > 0) pos.insert(r);
    return pos;
}

}  // namespace

TEST_CASE("type parsing") {
    CHECK(SimpleLieType::parse("G2").name() == "G2");
    CHECK(SimpleLieType::parse("e8").series == 'E');
    CHECK_THROWS_AS(SimpleLieType::parse("D3"), std::invalid_argument);
    CHECK_THROWS_AS(SimpleLieType::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(SimpleLieType::parse("A"), std::invalid_argument);
    CHECK_THROWS_AS(SimpleLieType::parse("A2x"), std::invalid_argument);
    CHECK_THROWS_AS(SimpleLieType::parse("C1"), std::invalid_argument);
}

TEST_CASE("Cartan data") {
    for (const char* t : {"A1", "A3", "B1", "B3", "C3", "D4", "G2", "F4", "E6"}) {
        std::string name = t;
        CAPTURE(name);
        RootSystem rs = rs_of(t);
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j)
                CHECK(Rat(rs.cartan[i][j]) == 2 * rs.gram[i][j] / rs.gram[i][i]);
        std::set<WeightVec> pos = root_closure(rs);
        CHECK(pos.size() == rs.positive_roots.size());
        CHECK(std::set<WeightVec>(rs.positive_roots.begin(), rs.positive_roots.end()) == pos);
        long sum_exp = 0;
        for (int e : rs.exponents) sum_exp += e;
        CHECK(sum_exp == static_cast<long>(pos.size()));
        CHECK(rs.coxeter == to_long(height(rs.theta)) + 1);
        for (int i = 0; i < rs.rank; ++i) {
            CHECK(rs.copairing(rs.rho, i) == 1);
            CHECK(rs.copairing(rs.fund_weights[i], i) == 1);
        }
        Rat longest = 0;
        for (const auto& n : rs.norms) longest = std::max(longest, n);
        CHECK(rs.norm2(rs.theta) == longest);
        CHECK(rs.dual_coxeter == to_long(rs.pairing(rs.rho, rs.coroot(rs.theta))) + 1);
    }
}

TEST_CASE("hand values") {
    RootSystem a2 = rs_of("A2");
    CHECK(a2.fund_weights[0] == WeightVec({make_rat(2, 3), make_rat(1, 3)}));
    CHECK(a2.rho == WeightVec({1, 1}));
    CHECK(a2.det_cartan == 3);
    RootSystem b2 = rs_of("B2");
    CHECK(b2.lacing == 2);
    CHECK(b2.coxeter == 4);
    CHECK(b2.dual_coxeter == 3);
    CHECK(b2.positive_roots.size() == 4);
    RootSystem g2 = rs_of("G2");
    CHECK(g2.lacing == 3);
    CHECK(g2.coxeter == 6);
    CHECK(g2.dual_coxeter == 4);
    CHECK(g2.exponents == std::vector<int>{1, 5});
    RootSystem b1 = rs_of("B1");
    CHECK(b1.norms[0] == 1);
    CHECK(b1.rank == 1);
}

TEST_CASE("Weyl group order: closed form, enumeration, rho orbit") {
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "G2", "F4"}) {
        std::string name = t;
        CAPTURE(name);
        RootSystem rs = rs_of(t);
        WeylGroup W(rs, caps().weyl);
        CHECK(BigInt(W.size()) == rs.weyl_order);
        CHECK(rho_orbit(rs) == static_cast<size_t>(W.size()));
        CHECK(W[W.longest()].length == static_cast<int>(rs.positive_roots.size()));
        CHECK(W.apply(W.longest(), rs.rho) == -rs.rho);
    }
    CHECK(weyl_group_order(SimpleLieType::parse("E8")) == BigInt("696729600"));
    CHECK(weyl_group_order(SimpleLieType::parse("E7")) == BigInt("2903040"));
}

TEST_CASE("Weyl group tables") {
    RootSystem rs = rs_of("B3");
    WeylGroup W(rs, caps().weyl);
    for (int a = 0; a < W.size(); a += 7) {
        CHECK(W.mult(a, W.inverse(a)) == W.identity());
        CHECK(W.from_word(W[a].word) == a);
        CHECK(static_cast<int>(W[a].word.size()) == W[a].length);
        for (int b = 0; b < W.size(); b += 5) {
            WeightVec mu{3, -1, 2};
            CHECK(W.apply(W.mult(a, b), mu) == W.apply(a, W.apply(b, mu)));
        }
    }
    for (int i = 0; i < rs.rank; ++i) CHECK(W.left_mult(i, W.identity()) == W.simple(i));
    CHECK(W.dot(W.simple(0), -rs.rho) == -rs.rho);
}

TEST_CASE("reduced words of w0 against a path count") {
    for (const char* t : {"A2", "A3", "A4", "B2", "B3", "C3", "G2"}) {
        std::string name = t;
        CAPTURE(name);
        RootSystem rs = rs_of(t);
        std::map<WeightVec, BigInt> memo;
        BigInt oracle = count_paths(rs, rs.rho, memo);
        WeylElement w0 = longest_element(rs);
        CHECK(count_reduced_words(rs, w0) == oracle);
        if (oracle < 5000) {
            auto words = all_reduced_words(rs, w0, 10000);
            CHECK(BigInt(static_cast<long>(words.size())) == oracle);
            std::set<std::vector<int>> distinct(words.begin(), words.end());
            CHECK(distinct.size() == words.size());
            for (const auto& wd : words) CHECK(apply_word(rs, wd) == w0.action);
        }
    }
    CHECK(count_reduced_words(rs_of("A3"), longest_element(rs_of("A3"))) == 16);
    CHECK(count_reduced_words(rs_of("B3"), longest_element(rs_of("B3"))) == 42);
    CHECK_THROWS_AS(all_reduced_words(rs_of("A4"), longest_element(rs_of("A4")), 100), SizeError);
}

TEST_CASE("enumeration caps") {
    RootSystem e7 = rs_of("E7");
    CHECK_THROWS_AS(WeylGroup(e7, caps().weyl), SizeError);
    CHECK(longest_element(e7).length == 63);
}

TEST_CASE("Weyl dimension") {
    RootSystem a1 = rs_of("A1");
    for (long n = 0; n < 10; ++n) CHECK(weyl_dim(a1, Rat(n) * a1.fund_weights[0]) == n + 1);
    RootSystem a2 = rs_of("A2");
    CHECK(weyl_dim(a2, a2.theta) == 8);
    CHECK(weyl_dim(a2, 2 * a2.fund_weights[1]) == 6);
    RootSystem b2 = rs_of("B2");
    std::multiset<long> b2dims = {to_long(weyl_dim(b2, b2.fund_weights[0])), to_long(weyl_dim(b2, b2.fund_weights[1]))};
    CHECK(b2dims == std::multiset<long>{4, 5});
    RootSystem g2 = rs_of("G2");
    std::multiset<long> g2dims = {to_long(weyl_dim(g2, g2.fund_weights[0])), to_long(weyl_dim(g2, g2.fund_weights[1]))};
    CHECK(g2dims == std::multiset<long>{7, 14});
    CHECK(weyl_dim(g2, g2.theta) == 14);
    RootSystem c3 = rs_of("C3");
    CHECK(weyl_dim(c3, c3.fund_weights[0]) == 6);
    CHECK(weyl_dim(c3, c3.theta) == 21);
    RootSystem e8 = rs_of("E8");
    CHECK(weyl_dim(e8, e8.theta) == 248);
    CHECK_THROWS_AS(weyl_dim(a2, WeightVec({1, 0})), std::invalid_argument);
}

TEST_CASE("property: dim is invariant under -w0") {
    for (const char* t : {"A3", "B3", "G2"}) {
        RootSystem rs = rs_of(t);
        WeylGroup W(rs, caps().weyl);
        for (const auto& mu : dominant_in_root_lattice(rs, 5)) {
            WeightVec dual = -W.apply(W.longest(), mu);
            CHECK(weyl_dim(rs, mu) == weyl_dim(rs, dual));
        }
    }
}

TEST_CASE("dominant root-lattice elements against a box scan") {
    for (const char* t : {"A2", "B2", "G2", "A3", "C3"}) {
        std::string name = t;
        CAPTURE(name);
        RootSystem rs = rs_of(t);
        const int h = 6;
        std::set<WeightVec> box;
        std::vector<long> n(static_cast<size_t>(rs.rank), 0);
        for (;;) {
            WeightVec v(rs.rank);
            long total = 0;
            for (int j = 0; j < rs.rank; ++j) {
                v[j] = n[j];
                total += n[j];
            }
            if (total <= h && rs.is_dominant_integral(v)) box.insert(v);
            int j = 0;
            while (j < rs.rank && ++n[j] > h) n[j++] = 0;
            if (j == rs.rank) break;
        }
        auto got = dominant_in_root_lattice(rs, h);
        CHECK(std::set<WeightVec>(got.begin(), got.end()) == box);
        CHECK(got.size() == box.size());
        CHECK(got.front().is_zero());
    }
}

TEST_CASE("minuscule representatives") {
    for (const char* t : {"A1", "A3", "B2", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"}) {
        std::string name = t;
        CAPTURE(name);
        RootSystem rs = rs_of(t);
        CHECK(static_cast<long>(rs.minuscule.size()) == rs.det_cartan);
        CHECK(rs.minuscule[0].is_zero());
        std::set<int> classes;
        for (const auto& mu : rs.minuscule) {
            CHECK(rs.is_dominant_integral(mu));
            CHECK(rs.pairing(mu, rs.theta_L) <= 1);
            classes.insert(rs.minuscule_index(mu));
        }
        CHECK(classes.size() == rs.minuscule.size());
    }
}
