#ifndef EXOTIC_PARTITIONS_HPP
#define EXOTIC_PARTITIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace exotic {

// Integer partition: weakly decreasing positive parts. The empty partition
// (of 0) is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts); // throws if not weakly decreasing / positive

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    unsigned long n() const { return n_; }
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    std::string to_string() const; // "(2,1,1)"

    bool operator==(const Partition&) const = default;

private:
    std::vector<unsigned> parts_;
    unsigned long n_ = 0;
};

// Composition of n: positive parts in any order.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<unsigned> parts); // throws if some part is 0

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    unsigned long n() const { return n_; }

    bool operator==(const Composition&) const = default;

private:
    std::vector<unsigned> parts_;
    unsigned long n_ = 0;
};

// Young diagram transposition: dual(lam)_i = #{j : lam_j >= i}.
Partition dual(const Partition& lam);

// Dominance order: mu <= lam iff all prefix sums satisfy
// mu_1+...+mu_i <= lam_1+...+lam_i. Requires equal n.
bool dominance_leq(const Partition& mu, const Partition& lam);

// dim O_lam = n^2 - sum_i (lam*_i)^2.
unsigned long dim_nilpotent_orbit(const Partition& lam);

// Richardson orbit partition for P_d: sort d nonincreasing, then dualize.
Partition richardson_partition(const Composition& d);

// dim G/P_d = (n^2 - sum d_i^2) / 2.
unsigned long flag_dim(const Composition& d);

// dim of the Spaltenstein variety F_{lam,d} = dim G/P - dim O_lam / 2,
// or nullopt when F is empty (lam not dominated by the Richardson partition).
// Emptiness and dimension 0 are distinct geometric facts, hence optional.
std::optional<unsigned long> spaltenstein_dim(const Partition& lam, const Composition& d);

// For a two-step nilpotent of rank ell and the maximal parabolic P_(k,n-k):
// dim Gr_{k-ell}(ker x / Im x) = (k-ell)(n-k-ell). Requires ell <= min{k,n-k}.
unsigned long spaltenstein_grassmann_dim(unsigned ell, unsigned k, unsigned n);

// Number of semistandard tableaux of shape lam and weight d, with rows
// strictly increasing to the right and columns weakly increasing downward.
// (Note: conjugate of the common convention; this matches the Spaltenstein
// component count.) Returns 0 when |lam| != |d|.
unsigned long count_ssyt(const Partition& lam, const Composition& d);

// The two-step Jordan type (n-ell, ell)* = (2^ell, 1^(n-2ell)).
Partition two_step_partition(unsigned n, unsigned ell); // throws if 2*ell > n

// All partitions of n, for exhaustive property sweeps.
std::vector<Partition> all_partitions(unsigned n);

} // namespace exotic

#endif
