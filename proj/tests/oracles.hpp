#pragma once

// Small brute-force oracles, written against the Cartan matrix only, so the
// library's own enumeration code is not used to check itself.

#include "satake/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using Mat = std::vector<std::vector<int>>;

// s_i on coweights in fundamental-coweight coordinates: c - c_i * col_i(A).
inline Mat coweight_reflection(const Mat& a, std::size_t i)
{
    const std::size_t n = a.size();
    Mat m(n, Vec(n, 0));
    for (std::size_t r = 0; r < n; ++r)
        m[r][r] = 1;
    for (std::size_t r = 0; r < n; ++r)
        m[r][i] -= a[r][i];
    return m;
}

inline Mat mul(const Mat& x, const Mat& y)
{
    const std::size_t n = x.size();
    Mat z(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                z[i][j] += x[i][k] * y[k][j];
    return z;
}

inline Vec apply(const Mat& m, const Vec& v)
{
    Vec out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += m[i][j] * v[j];
    return out;
}

/// Every element of W as a matrix on coweight coordinates.
inline std::set<Mat> weyl_group(const Mat& a)
{
    const std::size_t n = a.size();
    Mat id(n, Vec(n, 0));
    for (std::size_t r = 0; r < n; ++r)
        id[r][r] = 1;
    std::set<Mat> group{id};
    std::vector<Mat> frontier{id};
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const auto& g : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                auto h = mul(coweight_reflection(a, i), g);
                if (group.insert(h).second)
                    next.push_back(h);
            }
        frontier = std::move(next);
    }
    return group;
}

inline std::set<Vec> orbit(const Mat& a, const Vec& c)
{
    std::set<Vec> out;
    for (const auto& g : weyl_group(a))
        out.insert(apply(g, c));
    return out;
}

/// Positive roots in simple-root coordinates, by closure of the simple roots
/// under s_i(beta) = beta - (beta, alpha_i^v) alpha_i.
inline std::set<Vec> positive_roots(const Mat& a)
{
    const std::size_t n = a.size();
    std::set<Vec> all;
    std::vector<Vec> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        all.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& b : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                int p = 0;
                for (std::size_t k = 0; k < n; ++k)
                    p += b[k] * a[k][i];
                Vec r = b;
                r[i] -= p;
                if (all.insert(r).second)
                    next.push_back(r);
            }
        frontier = std::move(next);
    }
    std::set<Vec> pos;
    for (const auto& r : all)
        if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }))
            pos.insert(r);
    return pos;
}

/// (alpha, c) for alpha in simple-root coordinates, c in coweight coordinates.
inline int pair(const Vec& root, const Vec& c)
{
    return std::inner_product(root.begin(), root.end(), c.begin(), 0);
}

/// Weyl dimension formula: prod over alpha > 0 of (alpha, lambda + rho^v) / (alpha, rho^v).
inline long weyl_dimension(const Mat& a, const Vec& lambda)
{
    long num = 1, den = 1;
    for (const auto& r : positive_roots(a)) {
        Vec shifted = lambda;
        for (auto& x : shifted)
            x += 1;
        num *= pair(r, shifted);
        den *= pair(r, Vec(lambda.size(), 1));
        const long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

inline int two_rho(const Mat& a, const Vec& c)
{
    int s = 0;
    for (const auto& r : positive_roots(a))
        s += pair(r, c);
    return s;
}

}  // namespace oracle
