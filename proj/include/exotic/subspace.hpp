#ifndef EXOTIC_SUBSPACE_HPP
#define EXOTIC_SUBSPACE_HPP

#include "exotic/matrix.hpp"
#include "exotic/rng.hpp"

#include <cstddef>

namespace exotic {

// Linear subspace of Q^n in canonical form: the basis is a reduced
// row-echelon matrix with dim rows, so equal subspaces compare equal
// structurally. Immutable after construction.
class Subspace {
public:
    Subspace() = default; // zero subspace of Q^0

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    // Span of the rows (canonicalized; zero rows dropped).
    static Subspace from_rows(const RatMatrix& spanning_rows);
    // Span of the columns.
    static Subspace from_columns(const RatMatrix& m);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }

    bool operator==(const Subspace&) const = default;

private:
    std::size_t ambient_dim_ = 0;
    RatMatrix basis_; // dim x ambient_dim, RREF

    Subspace(std::size_t ambient_dim, RatMatrix canonical_basis)
        : ambient_dim_(ambient_dim), basis_(std::move(canonical_basis)) {}
};

// Null space {v : m v = 0}, a subspace of Q^cols.
Subspace kernel(const RatMatrix& m);

// Column space, a subspace of Q^rows.
Subspace image(const RatMatrix& m);

// All three require equal ambient dimensions and throw otherwise.
Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);
bool contains(const Subspace& s, const Subspace& t); // t subset of s?

// Membership of a column vector (dim x 1).
bool contains_vector(const Subspace& s, const RatMatrix& column);

// Image g(S) of a subspace under an invertible endomorphism g (n x n).
Subspace transform(const Subspace& s, const RatMatrix& g);

// Column vector with integer entries uniform in [-bound, bound].
RatMatrix random_vector(std::size_t dim, SeededRng& rng, long bound = 1000);

// Uniformly sampled integer matrix, resampled until invertible.
RatMatrix random_invertible_matrix(std::size_t n, SeededRng& rng, long bound = 5);

// Random integer combination of the basis rows, as a column vector in the
// ambient space. The zero subspace yields the zero vector.
RatMatrix random_in_subspace(const Subspace& s, SeededRng& rng, long bound = 1000);

} // namespace exotic

#endif
