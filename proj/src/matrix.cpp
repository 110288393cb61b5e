#include "exotic/matrix.hpp"

#include <stdexcept>

namespace exotic {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    RatMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("RatMatrix::from_ints: ragged rows");
        std::size_t j = 0;
        for (long v : row)
            m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool RatMatrix::is_zero() const {
    for (const Rational& e : entries_)
        if (e != 0)
            return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("RatMatrix::operator+: size mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("RatMatrix::operator-: size mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("RatMatrix::operator*: size mismatch");
    RatMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            const Rational& a = at(i, l);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& b = other.at(l, j);
                if (b != 0)
                    out.at(i, j) += a * b;
            }
        }
    return out;
}

std::string RatMatrix::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        s += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                s += " ";
            s += rat_to_string(at(i, j));
        }
        s += "]\n";
    }
    return s;
}

RatMatrix rref(const RatMatrix& m) {
    RatMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // first nonzero entry in this column at or below pivot_row
        std::size_t sel = pivot_row;
        while (sel < rows && a.at(sel, col) == 0)
            ++sel;
        if (sel == rows)
            continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a.at(sel, j), a.at(pivot_row, j));
        const Rational inv = 1 / Rational(a.at(pivot_row, col));
        for (std::size_t j = col; j < cols; ++j)
            a.at(pivot_row, j) = a.at(pivot_row, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || a.at(i, col) == 0)
                continue;
            const Rational factor = a.at(i, col);
            for (std::size_t j = col; j < cols; ++j)
                a.at(i, j) -= factor * a.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return a;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix r = rref(m);
    std::size_t count = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (r.at(i, j) != 0) {
                nonzero = true;
                break;
            }
        if (nonzero)
            ++count;
    }
    return count;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const RatMatrix red = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (red.at(i, j) != Rational(i == j ? 1 : 0))
                throw std::invalid_argument("inverse: matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = red.at(i, n + j);
    return inv;
}

bool is_nilpotent(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("is_nilpotent: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return true;
    RatMatrix power = m;
    for (std::size_t i = 1; i < n; ++i) {
        if (power.is_zero())
            return true;
        power = power * m;
    }
    return power.is_zero();
}

Partition jordan_type(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("jordan_type: matrix not square");
    const std::size_t n = m.rows();
    // conjugate parts: #{parts >= i} = rk m^(i-1) - rk m^i
    std::vector<unsigned> conj;
    RatMatrix power = RatMatrix::identity(n);
    std::size_t prev_rank = n;
    for (std::size_t i = 1; prev_rank > 0; ++i) {
        if (i > n)
            throw std::invalid_argument("jordan_type: matrix is not nilpotent");
        power = power * m;
        const std::size_t r = rank(power);
        conj.push_back(static_cast<unsigned>(prev_rank - r));
        prev_rank = r;
    }
    return dual(Partition(std::move(conj)));
}

ThetaSplit theta_split(const RatMatrix& m, std::size_t p, std::size_t q) {
    if (m.rows() != p + q || m.cols() != p + q)
        throw std::invalid_argument("theta_split: matrix is not (p+q)x(p+q)");
    ThetaSplit split;
    split.p = p;
    split.q = q;
    split.theta_part = RatMatrix::zero(p + q, p + q);
    split.minus_theta_part = RatMatrix::zero(p + q, p + q);
    for (std::size_t i = 0; i < p + q; ++i)
        for (std::size_t j = 0; j < p + q; ++j) {
            const bool diagonal_block = (i < p) == (j < p);
            (diagonal_block ? split.theta_part : split.minus_theta_part).at(i, j) = m.at(i, j);
        }
    return split;
}

} // namespace exotic
