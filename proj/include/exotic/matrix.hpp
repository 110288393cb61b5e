#ifndef EXOTIC_MATRIX_HPP
#define EXOTIC_MATRIX_HPP

#include "exotic/partitions.hpp"
#include "exotic/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace exotic {

// Dense exact rational matrix, row-major. Sizes here never exceed ~50x50,
// and 0-row / 0-column matrices are legal (they show up when q = 0).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
    static RatMatrix identity(std::size_t n);
    // Convenience for tests and representatives: integer entries, row-major.
    static RatMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return entries_; }
    std::vector<Rational>& entries() { return entries_; }

    bool is_zero() const;
    RatMatrix transpose() const;

    RatMatrix operator+(const RatMatrix& other) const;
    RatMatrix operator-(const RatMatrix& other) const;
    RatMatrix operator*(const RatMatrix& other) const;

    bool operator==(const RatMatrix&) const = default;

    std::string to_string() const; // multi-line, for diagnostics

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

// Reduced row echelon form (Gauss-Jordan with exact first-nonzero pivoting).
RatMatrix rref(const RatMatrix& m);

// Exact rank over Q.
std::size_t rank(const RatMatrix& m);

// Exact inverse; throws std::invalid_argument on non-square or singular input.
RatMatrix inverse(const RatMatrix& m);

bool is_nilpotent(const RatMatrix& m); // requires square

// Jordan type of a nilpotent matrix: the partition lam of n with
// #{parts >= i} = rk m^(i-1) - rk m^i. Throws on non-square or
// non-nilpotent input.
Partition jordan_type(const RatMatrix& m);

// Decomposition x = x^theta + x^(-theta) relative to the (p,q) block
// structure: block-diagonal part and block-antidiagonal part.
struct ThetaSplit {
    RatMatrix theta_part;
    RatMatrix minus_theta_part;
    std::size_t p = 0;
    std::size_t q = 0;
};

ThetaSplit theta_split(const RatMatrix& m, std::size_t p, std::size_t q);

} // namespace exotic

#endif
