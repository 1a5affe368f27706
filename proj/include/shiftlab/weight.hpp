#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "shiftlab/rational.hpp"

namespace shiftlab {

// Element of h* in simple-root coordinates.
class WeightVec {
public:
    WeightVec() = default;
    explicit WeightVec(int rank) : c_(static_cast<size_t>(rank)) {}
    explicit WeightVec(std::vector<Rat> coords) : c_(std::move(coords)) {}
    WeightVec(std::initializer_list<long> coords) {
        for (long v : coords) c_.emplace_back(v);
    }

    int rank() const { return static_cast<int>(c_.size()); }
    const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rat& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const;
    bool is_integral() const;  // all coordinates integral, i.e. in Q

    WeightVec& operator+=(const WeightVec& o);
    WeightVec& operator-=(const WeightVec& o);
    WeightVec& operator*=(const Rat& s);

    friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
    friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
    friend WeightVec operator*(const Rat& s, WeightVec a) { return a *= s; }
    friend WeightVec operator*(WeightVec a, const Rat& s) { return a *= s; }
    WeightVec operator-() const;

    friend bool operator==(const WeightVec& a, const WeightVec& b) { return a.c_ == b.c_; }
    friend bool operator!=(const WeightVec& a, const WeightVec& b) { return !(a == b); }
    friend bool operator<(const WeightVec& a, const WeightVec& b);

    std::string str() const;  // "[a, b, ...]"
    std::vector<std::string> str_coords() const;

private:
    void check_rank(const WeightVec& o) const;
    std::vector<Rat> c_;
};

WeightVec unit_vec(int rank, int i);

}  // namespace shiftlab
