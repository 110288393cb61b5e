#include "exotic/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace exotic {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    s += ")";
    return s;
}

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_) {
        if (p == 0)
            throw std::invalid_argument("Composition: parts must be positive");
        n_ += p;
    }
}

Partition dual(const Partition& lam) {
    std::vector<unsigned> out;
    const unsigned first = lam.length() ? lam.parts()[0] : 0;
    out.reserve(first);
    for (unsigned i = 1; i <= first; ++i) {
        unsigned count = 0;
        for (unsigned part : lam.parts())
            if (part >= i)
                ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
    if (mu.n() != lam.n())
        throw std::invalid_argument("dominance_leq: partitions of different n");
    const std::size_t len = std::max(mu.length(), lam.length());
    unsigned long mu_sum = 0, lam_sum = 0;
    for (std::size_t i = 0; i < len; ++i) {
        mu_sum += mu.part(i);
        lam_sum += lam.part(i);
        if (mu_sum > lam_sum)
            return false;
    }
    return true;
}

unsigned long dim_nilpotent_orbit(const Partition& lam) {
    const unsigned long n = lam.n();
    unsigned long sum = 0;
    for (unsigned c : dual(lam).parts())
        sum += static_cast<unsigned long>(c) * c;
    return n * n - sum;
}

Partition richardson_partition(const Composition& d) {
    std::vector<unsigned> sorted = d.parts();
    std::sort(sorted.begin(), sorted.end(), std::greater<unsigned>());
    return dual(Partition(std::move(sorted)));
}

unsigned long flag_dim(const Composition& d) {
    const unsigned long n = d.n();
    unsigned long sum = 0;
    for (unsigned p : d.parts())
        sum += static_cast<unsigned long>(p) * p;
    return (n * n - sum) / 2;
}

std::optional<unsigned long> spaltenstein_dim(const Partition& lam, const Composition& d) {
    if (lam.n() != d.n())
        throw std::invalid_argument("spaltenstein_dim: |lam| != |d|");
    if (!dominance_leq(lam, richardson_partition(d)))
        return std::nullopt; // x outside the Richardson orbit closure
    return flag_dim(d) - dim_nilpotent_orbit(lam) / 2;
}

unsigned long spaltenstein_grassmann_dim(unsigned ell, unsigned k, unsigned n) {
    if (k > n)
        throw std::invalid_argument("spaltenstein_grassmann_dim: k > n");
    if (ell > std::min(k, n - k))
        throw std::invalid_argument("spaltenstein_grassmann_dim: ell > min{k, n-k}");
    return static_cast<unsigned long>(k - ell) * (n - k - ell);
}

namespace {

// Backtracking over cells in row-major order. Shapes here are tiny (n <= ~12).
unsigned long count_fillings(const std::vector<unsigned>& shape,
                             std::vector<std::vector<unsigned>>& grid,
                             std::vector<unsigned>& remaining,
                             std::size_t row, std::size_t col) {
    if (row == shape.size())
        return 1;
    if (col == shape[row])
        return count_fillings(shape, grid, remaining, row + 1, 0);
    unsigned long total = 0;
    for (unsigned v = 1; v <= remaining.size(); ++v) {
        if (remaining[v - 1] == 0)
            continue;
        if (col > 0 && grid[row][col - 1] >= v)
            continue; // rows strictly increasing
        if (row > 0 && grid[row - 1][col] > v)
            continue; // columns weakly increasing
        grid[row][col] = v;
        --remaining[v - 1];
        total += count_fillings(shape, grid, remaining, row, col + 1);
        ++remaining[v - 1];
    }
    return total;
}

} // namespace

unsigned long count_ssyt(const Partition& lam, const Composition& d) {
    if (lam.n() != d.n())
        return 0;
    if (lam.n() == 0)
        return 1;
    std::vector<std::vector<unsigned>> grid;
    for (unsigned len : lam.parts())
        grid.emplace_back(len, 0u);
    std::vector<unsigned> remaining = d.parts();
    return count_fillings(lam.parts(), grid, remaining, 0, 0);
}

Partition two_step_partition(unsigned n, unsigned ell) {
    if (2u * ell > n)
        throw std::invalid_argument("two_step_partition: 2*ell > n");
    std::vector<unsigned> parts(ell, 2u);
    parts.resize(ell + (n - 2 * ell), 1u);
    return Partition(std::move(parts));
}

std::vector<Partition> all_partitions(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> current;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned max_part) {
        if (rest == 0) {
            out.emplace_back(current);
            return;
        }
        for (unsigned part = std::min(rest, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(rest - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace exotic
