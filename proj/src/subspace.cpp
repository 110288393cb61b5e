#include "exotic/subspace.hpp"

#include <stdexcept>

namespace exotic {

namespace {

// Drop zero rows of an RREF matrix; what remains is the canonical basis.
RatMatrix drop_zero_rows(const RatMatrix& echelon) {
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < echelon.rows(); ++i)
        for (std::size_t j = 0; j < echelon.cols(); ++j)
            if (echelon.at(i, j) != 0) {
                ++nonzero;
                break;
            }
    RatMatrix basis(nonzero, echelon.cols());
    std::size_t out = 0;
    for (std::size_t i = 0; i < echelon.rows(); ++i) {
        bool any = false;
        for (std::size_t j = 0; j < echelon.cols(); ++j)
            if (echelon.at(i, j) != 0) {
                any = true;
                break;
            }
        if (!any)
            continue;
        for (std::size_t j = 0; j < echelon.cols(); ++j)
            basis.at(out, j) = echelon.at(i, j);
        ++out;
    }
    return basis;
}

} // namespace

Subspace Subspace::zero(std::size_t ambient_dim) {
    return Subspace(ambient_dim, RatMatrix(0, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return Subspace(ambient_dim, RatMatrix::identity(ambient_dim));
}

Subspace Subspace::from_rows(const RatMatrix& spanning_rows) {
    return Subspace(spanning_rows.cols(), drop_zero_rows(rref(spanning_rows)));
}

Subspace Subspace::from_columns(const RatMatrix& m) {
    return from_rows(m.transpose());
}

Subspace kernel(const RatMatrix& m) {
    const RatMatrix r = rref(m);
    const std::size_t cols = m.cols();
    // locate pivot columns
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < r.rows(); ++col) {
        if (r.at(row, col) != 0) {
            pivot_of_col[col] = static_cast<long>(row);
            ++row;
        }
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t col = 0; col < cols; ++col)
        if (pivot_of_col[col] < 0)
            free_cols.push_back(col);
    RatMatrix basis(free_cols.size(), cols);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t f = free_cols[i];
        basis.at(i, f) = 1;
        for (std::size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0)
                basis.at(i, col) = -r.at(static_cast<std::size_t>(pivot_of_col[col]), f);
    }
    return Subspace::from_rows(basis);
}

Subspace image(const RatMatrix& m) {
    return Subspace::from_columns(m);
}

namespace {

void require_same_ambient(const Subspace& s, const Subspace& t, const char* what) {
    if (s.ambient_dim() != t.ambient_dim())
        throw std::invalid_argument(std::string(what) + ": ambient-dimension mismatch");
}

RatMatrix stack_rows(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

} // namespace

Subspace sum(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "sum");
    return Subspace::from_rows(stack_rows(s.basis(), t.basis()));
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "intersect");
    // Zassenhaus: row-reduce [S S ; T 0]; rows of the lower-right block that
    // have a zero left block span the intersection.
    const std::size_t n = s.ambient_dim();
    const std::size_t rows = s.dim() + t.dim();
    RatMatrix work(rows, 2 * n);
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            work.at(i, j) = s.basis().at(i, j);
            work.at(i, n + j) = s.basis().at(i, j);
        }
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            work.at(s.dim() + i, j) = t.basis().at(i, j);
    const RatMatrix reduced = rref(work);
    RatMatrix candidates(rows, n);
    std::size_t out = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n; ++j)
            if (reduced.at(i, j) != 0) {
                left_zero = false;
                break;
            }
        if (!left_zero)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            candidates.at(out, j) = reduced.at(i, n + j);
        ++out;
    }
    RatMatrix rows_out(out, n);
    for (std::size_t i = 0; i < out; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows_out.at(i, j) = candidates.at(i, j);
    return Subspace::from_rows(rows_out);
}

bool contains(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "contains");
    return sum(s, t).dim() == s.dim();
}

bool contains_vector(const Subspace& s, const RatMatrix& column) {
    if (column.cols() != 1 || column.rows() != s.ambient_dim())
        throw std::invalid_argument("contains_vector: expected an ambient-dim column vector");
    if (column.is_zero())
        return true;
    return contains(s, Subspace::from_rows(column.transpose()));
}

Subspace transform(const Subspace& s, const RatMatrix& g) {
    if (g.rows() != g.cols() || g.rows() != s.ambient_dim())
        throw std::invalid_argument("transform: g must be ambient_dim x ambient_dim");
    return Subspace::from_rows(s.basis() * g.transpose());
}

RatMatrix random_vector(std::size_t dim, SeededRng& rng, long bound) {
    RatMatrix v(dim, 1);
    for (std::size_t i = 0; i < dim; ++i)
        v.at(i, 0) = rng.uniform_int(-bound, bound);
    return v;
}

RatMatrix random_invertible_matrix(std::size_t n, SeededRng& rng, long bound) {
    while (true) {
        RatMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                g.at(i, j) = rng.uniform_int(-bound, bound);
        if (rank(g) == n)
            return g;
    }
}

RatMatrix random_in_subspace(const Subspace& s, SeededRng& rng, long bound) {
    RatMatrix v(s.ambient_dim(), 1);
    for (std::size_t row = 0; row < s.dim(); ++row) {
        const long coeff = rng.uniform_int(-bound, bound);
        if (coeff == 0)
            continue;
        for (std::size_t j = 0; j < s.ambient_dim(); ++j)
            v.at(j, 0) += coeff * s.basis().at(row, j);
    }
    return v;
}

} // namespace exotic
