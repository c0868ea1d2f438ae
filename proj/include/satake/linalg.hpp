#pragma once

#include "satake/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace satake {

using QVector = std::vector<Rational>;

/// Reduced "p/q" rendering used everywhere a rational leaves the process.
std::string to_string(const Rational& q);
/// Accepts "p/q" or "p"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

// Dense row-major matrix over Q. Weight blocks are small, so dense storage is
// the right trade-off even inside large tensor products.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix scalar(std::size_t n, const Rational& s);
    static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVector column(std::size_t c) const;
    QVector apply(const QVector& v) const;

    bool is_zero() const;
    /// True iff the matrix is s * I for some s; writes s.
    bool is_scalar(Rational* s = nullptr) const;

    QMatrix transpose() const;
    /// Rescales by a positive rational to an integer matrix whose entries
    /// have gcd 1. Rank, kernel and vanishing are unchanged; this keeps
    /// long products of blocks from growing without bound.
    QMatrix& make_primitive();

    QMatrix& operator+=(const QMatrix& other);
    QMatrix& operator-=(const QMatrix& other);
    QMatrix& operator*=(const Rational& s);

    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b);

    /// Copies `block` into this matrix with its (0,0) entry at (r0, c0).
    void place(const QMatrix& block, std::size_t r0, std::size_t c0);
    /// Adds `block` into this matrix with its (0,0) entry at (r0, c0).
    void accumulate(const QMatrix& block, std::size_t r0, std::size_t c0);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

QMatrix kron(const QMatrix& a, const QMatrix& b);

struct EchelonForm {
    QMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

EchelonForm rref(QMatrix a);
std::size_t rank(const QMatrix& a);
/// Basis of {x : a x = 0}, one vector per free column, in column order.
std::vector<QVector> nullspace(const QMatrix& a);
/// Throws std::domain_error when singular or non-square.
QMatrix inverse(const QMatrix& a);

/// Rank over F_p of a matrix over Q whose denominators are prime to p.
/// Returns nullopt if some denominator vanishes mod p. Any F_p rank is a
/// lower bound for the rational rank.
std::optional<std::size_t> rank_mod_p(const QMatrix& a, std::uint64_t p);

// Incrementally maintained subspace of Q^n in reduced row echelon form: every
// basis vector has a 1 at its own pivot and 0 at every other pivot, so the
// coordinates of a member vector are its entries at the pivots.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }

    /// Adds v if it is outside the span; returns whether the span grew.
    bool insert(QVector v);
    bool contains(QVector v) const;
    /// Coordinates of a member vector against basis(), pivot order.
    QVector coordinates(const QVector& v) const;
    /// Basis vectors sorted by pivot.
    std::vector<QVector> basis() const;

private:
    void reduce(QVector& v) const;

    std::size_t ambient_;
    std::vector<QVector> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace satake
