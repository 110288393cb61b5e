#ifndef EXOTIC_COMMON_HPP
#define EXOTIC_COMMON_HPP

#include <algorithm>
#include <stdexcept>
#include <string>

namespace exotic {

// Ambient data (p, q, k): V = Q^n splits as V1 (+) V2 with dim V1 = p >= 1,
// dim V2 = q >= 0, and k is the Grassmannian parameter, 0 <= k <= n.
struct Ambient {
    unsigned p = 1;
    unsigned q = 0;
    unsigned k = 0;

    Ambient() = default;
    Ambient(unsigned p_, unsigned q_, unsigned k_) : p(p_), q(q_), k(k_) {
        if (p < 1)
            throw std::invalid_argument("Ambient: p must be >= 1");
        if (k > n())
            throw std::invalid_argument("Ambient: k must satisfy 0 <= k <= p+q");
    }

    unsigned n() const { return p + q; }
    unsigned min_k_nk() const { return std::min(k, n() - k); }

    bool operator==(const Ambient&) const = default;
};

enum class RenderFormat { ascii, latex };

// A supplied point violates a structural invariant (named in what()).
class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Randomized genericity failed: no strict majority even after escalation,
// or a rejection-sampling budget ran out.
class GenericityError : public std::runtime_error {
public:
    explicit GenericityError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed (totality, fiber law, counting identity, ...).
// This always indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace exotic

#endif
