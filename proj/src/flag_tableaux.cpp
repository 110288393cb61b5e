#include "exotic/flag_tableaux.hpp"

#include "exotic/exotic_cone.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace exotic {

bool tableau_valid(const MarkedTableau& t) {
    const Ambient& amb = t.ambient;
    if (t.n1 + t.n2 + t.ell != amb.k)
        return false;
    if (t.n1 + t.ell > amb.p || t.n2 + t.ell > amb.q)
        return false;
    switch (t.mark) {
    case 2: return t.n1 >= 1;
    case 1: return t.ell >= 1;
    case 0: return amb.p - t.n1 - t.ell >= 1;
    default: return false;
    }
}

std::vector<MarkedTableau> enumerate_theta2k(const Ambient& amb) {
    std::vector<MarkedTableau> out;
    for (unsigned n1 = 0; n1 <= std::min(amb.p, amb.k); ++n1)
        for (unsigned n2 = 0; n1 + n2 <= amb.k && n2 <= amb.q; ++n2) {
            const unsigned ell = amb.k - n1 - n2;
            for (unsigned mark = 0; mark <= 2; ++mark) {
                const MarkedTableau t{amb, n1, n2, ell, mark};
                if (tableau_valid(t))
                    out.push_back(t);
            }
        }
    std::sort(out.begin(), out.end(), [](const MarkedTableau& a, const MarkedTableau& b) {
        return std::make_tuple(-(long)(a.n1 + a.n2), -(long)a.n1, a.mark) <
               std::make_tuple(-(long)(b.n1 + b.n2), -(long)b.n1, b.mark);
    });
    return out;
}

MarkedTableau classify_flag_pair(const FlagPair& fp) {
    const Ambient& amb = fp.ambient;
    if (fp.W.ambient_dim() != amb.n())
        throw InvariantViolation("FlagPair: W lives in the wrong ambient space");
    if (fp.W.dim() != amb.k)
        throw InvariantViolation("FlagPair: dim W != k");
    if (fp.L.ambient_dim() != amb.n() || fp.L.dim() != 1)
        throw InvariantViolation("FlagPair: L is not a line in Q^n");
    for (unsigned j = 0; j < amb.q; ++j)
        if (fp.L.basis().at(0, amb.p + j) != 0)
            throw InvariantViolation("FlagPair: L is not contained in V1");

    const unsigned n1 = static_cast<unsigned>(intersect(fp.W, v1_subspace(amb)).dim());
    const unsigned n2 = static_cast<unsigned>(intersect(fp.W, v2_subspace(amb)).dim());
    const unsigned ell = amb.k - n1 - n2;
    unsigned mark;
    if (contains(fp.W, fp.L))
        mark = 2;
    else if (contains(sum(fp.W, v2_subspace(amb)), fp.L))
        mark = 1;
    else
        mark = 0;
    const MarkedTableau t{amb, n1, n2, ell, mark};
    if (!tableau_valid(t))
        throw ConsistencyError("classify_flag_pair: classified tableau violates invariants");
    return t;
}

FlagPair representative_flag(const MarkedTableau& t) {
    if (!tableau_valid(t))
        throw std::invalid_argument("representative_flag: invalid tableau");
    const Ambient& amb = t.ambient;
    const unsigned n = amb.n(), p = amb.p;
    RatMatrix rows(amb.k, n);
    unsigned row = 0;
    for (unsigned j = 0; j < t.n1; ++j, ++row)
        rows.at(row, j) = 1; // e_(j+1)
    for (unsigned j = 0; j < t.n2; ++j, ++row)
        rows.at(row, p + j) = 1; // f_(j+1)
    for (unsigned j = 0; j < t.ell; ++j, ++row) {
        rows.at(row, t.n1 + j) = 1;     // e_(n1+j+1)
        rows.at(row, p + t.n2 + j) = 1; // f_(n2+j+1)
    }
    std::size_t v_index = 0;
    switch (t.mark) {
    case 2: v_index = 0; break;        // e_1
    case 1: v_index = t.n1; break;     // e_(n1+1)
    case 0: v_index = p - 1; break;    // e_p
    }
    return FlagPair{amb, Subspace::from_rows(rows), coordinate_line(n, v_index)};
}

std::string render_tableau(const MarkedTableau& t, RenderFormat fmt) {
    if (!tableau_valid(t))
        throw std::invalid_argument("render_tableau: invalid tableau");
    const Ambient& amb = t.ambient;
    auto column = [&](unsigned boxes, unsigned twos, unsigned ones) {
        std::string col(boxes - twos - ones, '0');
        col.append(ones, '1');
        col.append(twos, '2');
        return col;
    };
    const std::string col1 = column(amb.p, t.n1, t.ell);
    const std::string col2 = column(amb.q, t.n2, t.ell);
    std::string body;
    for (unsigned row = 0; row < std::max(amb.p, amb.q); ++row) {
        if (row)
            body += '/';
        if (row < amb.p)
            body += col1[row];
        if (row < amb.q)
            body += col2[row];
    }
    if (fmt == RenderFormat::ascii)
        return "(" + body + ", i=" + std::to_string(t.mark) + ")";
    return "\\markedtableau{" + body + "}{" + std::to_string(t.mark) + "}";
}

FlagPair apply_k(const FlagPair& fp, const RatMatrix& g1, const RatMatrix& g2) {
    const Ambient& amb = fp.ambient;
    if (g1.rows() != amb.p || g1.cols() != amb.p || g2.rows() != amb.q || g2.cols() != amb.q)
        throw std::invalid_argument("apply_k: g1 must be p x p and g2 q x q");
    RatMatrix g(amb.n(), amb.n());
    for (unsigned i = 0; i < amb.p; ++i)
        for (unsigned j = 0; j < amb.p; ++j)
            g.at(i, j) = g1.at(i, j);
    for (unsigned i = 0; i < amb.q; ++i)
        for (unsigned j = 0; j < amb.q; ++j)
            g.at(amb.p + i, amb.p + j) = g2.at(i, j);
    return FlagPair{amb, transform(fp.W, g), transform(fp.L, g)};
}

} // namespace exotic
