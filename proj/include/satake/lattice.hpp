#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace satake {

// Integer vector tagged by the lattice it lives in. Weights use the
// fundamental-weight basis, coweights the fundamental-coweight basis, so the
// pairing of a simple root with a coweight is just one coordinate.
template <class Tag>
struct LatticeVector {
    // Inline storage: weights are map keys everywhere, and ranks are small.
    boost::container::small_vector<int, 8> coords;

    LatticeVector() = default;
    explicit LatticeVector(std::size_t rank) : coords(rank, 0) {}
    explicit LatticeVector(const std::vector<int>& c) : coords(c.begin(), c.end()) {}
    LatticeVector(std::initializer_list<int> c) : coords(c.begin(), c.end()) {}

    std::size_t size() const { return coords.size(); }
    int operator[](std::size_t i) const { return coords[i]; }
    int& operator[](std::size_t i) { return coords[i]; }

    bool is_zero() const
    {
        for (int c : coords)
            if (c != 0)
                return false;
        return true;
    }

    LatticeVector& operator+=(const LatticeVector& o)
    {
        check(o);
        for (std::size_t i = 0; i < coords.size(); ++i)
            coords[i] += o.coords[i];
        return *this;
    }
    LatticeVector& operator-=(const LatticeVector& o)
    {
        check(o);
        for (std::size_t i = 0; i < coords.size(); ++i)
            coords[i] -= o.coords[i];
        return *this;
    }
    LatticeVector& operator*=(int k)
    {
        for (auto& c : coords)
            c *= k;
        return *this;
    }
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(int k, LatticeVector a) { return a *= k; }
    friend LatticeVector operator-(LatticeVector a) { return a *= -1; }

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords == b.coords; }
    friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b)
    {
        return std::lexicographical_compare_three_way(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                                      b.coords.end());
    }
    std::vector<int> to_vector() const { return {coords.begin(), coords.end()}; }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

private:
    void check(const LatticeVector& o) const
    {
        if (o.coords.size() != coords.size())
            throw std::invalid_argument("rank mismatch between lattice vectors");
    }
};

struct WeightTag {};
struct CoweightTag {};

using Weight = LatticeVector<WeightTag>;
using Coweight = LatticeVector<CoweightTag>;

}  // namespace satake
