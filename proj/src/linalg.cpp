#include "satake/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace satake {

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    auto ok = [](const std::string& s, bool allow_sign) {
        if (s.empty())
            return false;
        std::size_t start = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size())
            return false;
        return std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!ok(num, true) || !ok(den, false))
        throw std::invalid_argument("malformed rational literal: " + text);
    if (num[0] == '+')
        num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator: " + text);
    return Rational(mpq_class(n, d));
}

QMatrix QMatrix::identity(std::size_t n) { return scalar(n, 1); }

QMatrix QMatrix::scalar(std::size_t n, const Rational& s)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = s;
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows)
{
    QMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

QVector QMatrix::column(std::size_t c) const
{
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

QVector QMatrix::apply(const QVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector shape mismatch");
    QVector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] == 0)
            continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if ((*this)(r, c) != 0)
                out[r] += (*this)(r, c) * v[c];
    }
    return out;
}

bool QMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

bool QMatrix::is_scalar(Rational* s) const
{
    if (rows_ != cols_)
        return false;
    Rational d = rows_ ? (*this)(0, 0) : Rational(0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? d : Rational(0)))
                return false;
    if (s)
        *s = d;
    return true;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (other.data_[k] != 0)
            data_[k] += other.data_[k];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (other.data_[k] != 0)
            data_[k] -= other.data_[k];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s)
{
    for (auto& q : data_)
        q *= s;
    return *this;
}

QMatrix& QMatrix::make_primitive()
{
    bool small = true;
    std::int64_t l = 1, g = 0;
    for (const auto& q : data_) {
        if (q.is_zero())
            continue;
        if (!q.is_small()) {
            small = false;
            break;
        }
        const std::int64_t den = q.small_den();
        const std::int64_t step = den / std::gcd(l, den);
        if (__builtin_mul_overflow(l, step, &l)) {
            small = false;
            break;
        }
        g = std::gcd(g, q.small_num() < 0 ? -q.small_num() : q.small_num());
    }
    if (small) {
        if (g == 0)
            return *this;
        // g divides the numerators; l is the lcm of the denominators.
        const Rational s(l, g);
        if (s != 1)
            for (auto& q : data_)
                if (!q.is_zero())
                    q *= s;
        return *this;
    }
    mpz_class lm = 1, gm = 0;
    for (const auto& q : data_)
        if (!q.is_zero()) {
            mpz_lcm(lm.get_mpz_t(), lm.get_mpz_t(), q.get_den().get_mpz_t());
            mpz_class num = abs(q.get_num());
            mpz_gcd(gm.get_mpz_t(), gm.get_mpz_t(), num.get_mpz_t());
        }
    const Rational s(mpq_class(lm, gm));
    for (auto& q : data_)
        if (!q.is_zero())
            q *= s;
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(r, k);
            if (x == 0)
                continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (b(k, c) != 0)
                    out(r, c) += x * b(k, c);
        }
    return out;
}

bool operator==(const QMatrix& a, const QMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void QMatrix::place(const QMatrix& block, std::size_t r0, std::size_t c0)
{
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
        throw std::out_of_range("block placement out of range");
    for (std::size_t r = 0; r < block.rows_; ++r)
        for (std::size_t c = 0; c < block.cols_; ++c)
            (*this)(r0 + r, c0 + c) = block(r, c);
}

void QMatrix::accumulate(const QMatrix& block, std::size_t r0, std::size_t c0)
{
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
        throw std::out_of_range("block placement out of range");
    for (std::size_t r = 0; r < block.rows_; ++r)
        for (std::size_t c = 0; c < block.cols_; ++c)
            if (block(r, c) != 0)
                (*this)(r0 + r, c0 + c) += block(r, c);
}

QMatrix kron(const QMatrix& a, const QMatrix& b)
{
    QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b(k, l) != 0)
                        out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

EchelonForm rref(QMatrix a)
{
    EchelonForm out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0)
            ++piv;
        if (piv == a.rows())
            continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a(piv, c), a(row, c));
        Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c)
            a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0)
                continue;
            Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (a(row, c) != 0)
                    a(r, c) -= factor * a(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(a);
    return out;
}

std::size_t rank(const QMatrix& a) { return rref(a).pivots.size(); }

std::vector<QVector> nullspace(const QMatrix& a)
{
    auto ech = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : ech.pivots)
        is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        QVector v(a.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix inverse(const QMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::domain_error("inverse of a non-square matrix");
    std::size_t n = a.rows();
    QMatrix aug(n, 2 * n);
    aug.place(a, 0, 0);
    aug.place(QMatrix::identity(n), 0, n);
    auto ech = rref(std::move(aug));
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
        throw std::domain_error("singular matrix");
    QMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::optional<std::size_t> rank_mod_p(const QMatrix& a, std::uint64_t p)
{
    std::vector<std::uint64_t> m(a.rows() * a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const Rational& q = a(r, c);
            if (q == 0)
                continue;
            const mpq_class big = q.to_mpq();
            std::uint64_t n = mpz_fdiv_ui(big.get_num_mpz_t(), p);
            std::uint64_t d = mpz_fdiv_ui(big.get_den_mpz_t(), p);
            if (d == 0)
                return std::nullopt;
            m[r * a.cols() + c] = mulmod(n, powmod(d, p - 2, p), p);
        }
    std::size_t rows = a.rows(), cols = a.cols(), rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t piv = rk;
        while (piv < rows && m[piv * cols + col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rk)
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(m[piv * cols + c], m[rk * cols + c]);
        std::uint64_t inv = powmod(m[rk * cols + col], p - 2, p);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            std::uint64_t f = m[r * cols + col];
            if (f == 0)
                continue;
            f = mulmod(f, inv, p);
            for (std::size_t c = col; c < cols; ++c)
                m[r * cols + c] = (m[r * cols + c] + p - mulmod(f, m[rk * cols + c], p)) % p;
        }
        ++rk;
    }
    return rk;
}

void Subspace::reduce(QVector& v) const
{
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Rational& x = v[pivots_[k]];
        if (x == 0)
            continue;
        Rational factor = x;
        const QVector& b = basis_[k];
        for (std::size_t i = 0; i < ambient_; ++i)
            if (b[i] != 0)
                v[i] -= factor * b[i];
    }
}

bool Subspace::insert(QVector v)
{
    if (v.size() != ambient_)
        throw std::invalid_argument("vector length does not match subspace");
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    if (it == v.end())
        return false;
    std::size_t piv = static_cast<std::size_t>(it - v.begin());
    Rational inv = 1 / v[piv];
    for (auto& q : v)
        if (q != 0)
            q *= inv;
    for (auto& b : basis_) {
        if (b[piv] == 0)
            continue;
        Rational factor = b[piv];
        for (std::size_t i = 0; i < ambient_; ++i)
            if (v[i] != 0)
                b[i] -= factor * v[i];
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool Subspace::contains(QVector v) const
{
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

QVector Subspace::coordinates(const QVector& v) const
{
    std::vector<std::size_t> order(basis_.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    QVector out(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        out[k] = v[pivots_[order[k]]];
    return out;
}

std::vector<QVector> Subspace::basis() const
{
    std::vector<std::size_t> order(basis_.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<QVector> out;
    out.reserve(order.size());
    for (auto k : order)
        out.push_back(basis_[k]);
    return out;
}

}  // namespace satake
