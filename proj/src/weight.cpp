#include "shiftlab/weight.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shiftlab {

void WeightVec::check_rank(const WeightVec& o) const {
    if (o.c_.size() != c_.size())
        throw std::invalid_argument("rank mismatch: " + std::to_string(c_.size()) + " vs " +
                                    std::to_string(o.c_.size()));
}

bool WeightVec::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool WeightVec::is_integral() const {
    for (const auto& v : c_)
        if (!is_integer(v)) return false;
    return true;
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
    check_rank(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
    check_rank(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

WeightVec& WeightVec::operator*=(const Rat& s) {
    for (auto& v : c_) v *= s;
    return *this;
}

WeightVec WeightVec::operator-() const {
    WeightVec out(*this);
    for (auto& v : out.c_) v = -v;
    return out;
}

bool operator<(const WeightVec& a, const WeightVec& b) {
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::vector<std::string> WeightVec::str_coords() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.get_str());
    return out;
}

std::string WeightVec::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].get_str();
    os << ']';
    return os.str();
}

WeightVec unit_vec(int rank, int i) {
    WeightVec v(rank);
    v[i] = 1;
    return v;
}

}  // namespace shiftlab
