#include "exotic/exotic_cone.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace exotic {

std::string to_string(ExoticType t) {
    switch (t) {
    case ExoticType::I: return "I";
    case ExoticType::II: return "II";
    case ExoticType::III: return "III";
    }
    return "?";
}

std::string to_string(RefinedType t) {
    switch (t) {
    case RefinedType::I: return "I";
    case RefinedType::II0: return "II0";
    case RefinedType::IIstar: return "IIstar";
    case RefinedType::III: return "III";
    }
    return "?";
}

std::vector<ExoticOrbitLabel> enumerate_pi2k(const Ambient& amb) {
    const unsigned cap = std::min({amb.p, amb.q, amb.k, amb.n() - amb.k});
    std::vector<ExoticOrbitLabel> out;
    for (unsigned r = 0; r <= cap; ++r)
        for (unsigned s = 0; r + s <= cap; ++s) {
            if (r >= 1)
                out.push_back({amb, r, s, ExoticType::I});
            if (r + s < amb.p)
                out.push_back({amb, r, s, ExoticType::II});
            if (s >= 1)
                out.push_back({amb, r, s, ExoticType::III});
        }
    std::sort(out.begin(), out.end(),
              [](const ExoticOrbitLabel& a, const ExoticOrbitLabel& b) {
                  return std::make_tuple(-(long)(a.r + a.s), -(long)a.r, (int)a.typ) <
                         std::make_tuple(-(long)(b.r + b.s), -(long)b.r, (int)b.typ);
              });
    return out;
}

std::vector<int> mu_of(const ExoticOrbitLabel& lab) {
    const unsigned p = lab.ambient.p, q = lab.ambient.q;
    const unsigned r = lab.r, s = lab.s;
    int c = 0, e = 0; // values on positions r+1..r+s and r+s+1..p
    switch (lab.typ) {
    case ExoticType::I: c = 0; e = -1; break;
    case ExoticType::II: c = 0; e = 1; break;
    case ExoticType::III: c = 2; e = 1; break;
    }
    std::vector<int> mu;
    mu.reserve(lab.ambient.n() - r - s);
    mu.insert(mu.end(), r, 1);
    mu.insert(mu.end(), s, c);
    mu.insert(mu.end(), p - r - s, e);
    mu.insert(mu.end(), q - r - s, 0);
    return mu;
}

RefinedType refine_type(const ExoticOrbitLabel& lab) {
    switch (lab.typ) {
    case ExoticType::I: return RefinedType::I;
    case ExoticType::III: return RefinedType::III;
    case ExoticType::II: break;
    }
    const unsigned q = lab.ambient.q, p = lab.ambient.p;
    const unsigned ell = lab.r + lab.s;
    const bool star = (q == ell) && (q + 2 <= p) && (q < lab.ambient.min_k_nk());
    return star ? RefinedType::IIstar : RefinedType::II0;
}

unsigned long dim_s_orbit(unsigned r, unsigned s, const Ambient& amb) {
    const unsigned long ell = r + s;
    return ell * (amb.n() - ell);
}

unsigned long dim_exotic_orbit(const ExoticOrbitLabel& lab) {
    long ceil_sum = 0;
    for (int m : mu_of(lab))
        ceil_sum += (m + 1) / 2; // ceil(m/2) for m in {-1,0,1,2}
    return dim_s_orbit(lab.r, lab.s, lab.ambient) + static_cast<unsigned long>(ceil_sum) - 1;
}

Subspace v1_subspace(const Ambient& amb) {
    RatMatrix rows(amb.p, amb.n());
    for (unsigned i = 0; i < amb.p; ++i)
        rows.at(i, i) = 1;
    return Subspace::from_rows(rows);
}

Subspace v2_subspace(const Ambient& amb) {
    RatMatrix rows(amb.q, amb.n());
    for (unsigned i = 0; i < amb.q; ++i)
        rows.at(i, amb.p + i) = 1;
    return Subspace::from_rows(rows);
}

Subspace coordinate_line(std::size_t ambient_dim, std::size_t index) {
    RatMatrix row(1, ambient_dim);
    row.at(0, index) = 1;
    return Subspace::from_rows(row);
}

namespace {

void validate_label(const ExoticOrbitLabel& lab) {
    const Ambient& amb = lab.ambient;
    const unsigned ell = lab.r + lab.s;
    if (ell > std::min(amb.p, amb.q))
        throw std::invalid_argument("ExoticOrbitLabel: r+s > min{p,q}");
    if (ell > amb.min_k_nk())
        throw std::invalid_argument("ExoticOrbitLabel: r+s > min{k,n-k}");
    if (lab.typ == ExoticType::I && lab.r < 1)
        throw std::invalid_argument("ExoticOrbitLabel: type I needs r >= 1");
    if (lab.typ == ExoticType::II && ell >= amb.p)
        throw std::invalid_argument("ExoticOrbitLabel: type II needs r+s < p");
    if (lab.typ == ExoticType::III && lab.s < 1)
        throw std::invalid_argument("ExoticOrbitLabel: type III needs s >= 1");
}

} // namespace

ExoticPoint representative(const ExoticOrbitLabel& lab) {
    validate_label(lab);
    const Ambient& amb = lab.ambient;
    const unsigned p = amb.p, q = amb.q;
    RatMatrix a(p, q), b(q, p);
    for (unsigned j = 0; j < lab.r; ++j)
        a.at(j, j) = 1; // f_(j+1) -> e_(j+1)
    for (unsigned j = 0; j < lab.s; ++j)
        b.at(q - lab.s + j, p - lab.s + j) = 1; // e_(p-s+j+1) -> f_(q-s+j+1)
    std::size_t v_index = 0;
    switch (lab.typ) {
    case ExoticType::I: v_index = 0; break;          // e_1
    case ExoticType::II: v_index = lab.r; break;     // e_(r+1)
    case ExoticType::III: v_index = p - 1; break;    // e_p
    }
    return ExoticPoint{amb, coordinate_line(amb.n(), v_index), std::move(a), std::move(b)};
}

ExoticOrbitLabel classify_exotic_point(const ExoticPoint& pt) {
    const Ambient& amb = pt.ambient;
    const unsigned p = amb.p, q = amb.q;
    if (pt.a.rows() != p || pt.a.cols() != q)
        throw InvariantViolation("ExoticPoint: a is not p x q");
    if (pt.b.rows() != q || pt.b.cols() != p)
        throw InvariantViolation("ExoticPoint: b is not q x p");
    if (pt.L.ambient_dim() != amb.n() || pt.L.dim() != 1)
        throw InvariantViolation("ExoticPoint: L is not a line in Q^n");
    // L inside V1: the last q coordinates of its basis vector vanish
    for (unsigned j = 0; j < q; ++j)
        if (pt.L.basis().at(0, p + j) != 0)
            throw InvariantViolation("ExoticPoint: L is not contained in V1");
    if (!(pt.a * pt.b).is_zero() || !(pt.b * pt.a).is_zero())
        throw InvariantViolation("ExoticPoint: two-step condition violated (ab != 0 or ba != 0)");
    const unsigned r = static_cast<unsigned>(rank(pt.a));
    const unsigned s = static_cast<unsigned>(rank(pt.b));
    if (r + s > amb.min_k_nk())
        throw InvariantViolation("ExoticPoint: rank bound exceeded (rk a + rk b > min{k,n-k})");

    RatMatrix v(p, 1);
    for (unsigned i = 0; i < p; ++i)
        v.at(i, 0) = pt.L.basis().at(0, i);

    ExoticType typ;
    if (contains_vector(image(pt.a), v))
        typ = ExoticType::I;
    else if ((pt.b * v).is_zero())
        typ = ExoticType::II;
    else
        typ = ExoticType::III;
    return ExoticOrbitLabel{amb, r, s, typ};
}

namespace {

// Block-diagonal diag(g1, g2) acting on the ambient Q^n.
RatMatrix block_diag(const Ambient& amb, const RatMatrix& g1, const RatMatrix& g2) {
    RatMatrix g(amb.n(), amb.n());
    for (unsigned i = 0; i < amb.p; ++i)
        for (unsigned j = 0; j < amb.p; ++j)
            g.at(i, j) = g1.at(i, j);
    for (unsigned i = 0; i < amb.q; ++i)
        for (unsigned j = 0; j < amb.q; ++j)
            g.at(amb.p + i, amb.p + j) = g2.at(i, j);
    return g;
}

} // namespace

ExoticPoint apply_k(const ExoticPoint& pt, const RatMatrix& g1, const RatMatrix& g2) {
    const Ambient& amb = pt.ambient;
    if (g1.rows() != amb.p || g1.cols() != amb.p || g2.rows() != amb.q || g2.cols() != amb.q)
        throw std::invalid_argument("apply_k: g1 must be p x p and g2 q x q");
    return ExoticPoint{amb, transform(pt.L, block_diag(amb, g1, g2)),
                       g1 * pt.a * inverse(g2), g2 * pt.b * inverse(g1)};
}

namespace {

struct DiagramRow {
    int start;           // leftmost occupied column (= -mu_i)
    std::string symbols; // "+-", "-+", "+", or "-"
};

std::vector<DiagramRow> diagram_rows(const ExoticOrbitLabel& lab) {
    const unsigned p = lab.ambient.p, q = lab.ambient.q;
    const unsigned r = lab.r, s = lab.s;
    const std::vector<int> mu = mu_of(lab);
    std::vector<DiagramRow> rows;
    rows.reserve(mu.size());
    std::size_t i = 0;
    for (unsigned j = 0; j < r; ++j, ++i)
        rows.push_back({-mu[i], "+-"});
    for (unsigned j = 0; j < s; ++j, ++i)
        rows.push_back({-mu[i], "-+"});
    for (unsigned j = 0; j < p - r - s; ++j, ++i)
        rows.push_back({-mu[i], "+"});
    for (unsigned j = 0; j < q - r - s; ++j, ++i)
        rows.push_back({-mu[i], "-"});
    return rows;
}

std::string render_row_ascii(const DiagramRow& row, int min_col) {
    const int last = row.start + static_cast<int>(row.symbols.size()) - 1;
    const bool line_adjacent =
        (row.start <= -1 && last >= -1) || (row.start <= 0 && last >= 0);
    std::string out;
    for (int col = min_col; col <= last; ++col) {
        if (col == 0 && line_adjacent)
            out += '|';
        if (col >= row.start)
            out += row.symbols[static_cast<std::size_t>(col - row.start)];
        else
            out += ':';
    }
    if (last == -1 && line_adjacent)
        out += '|';
    return out;
}

} // namespace

std::string render_striped_diagram(const ExoticOrbitLabel& lab, RenderFormat fmt) {
    validate_label(lab);
    const std::vector<DiagramRow> rows = diagram_rows(lab);
    int min_col = 0;
    for (const DiagramRow& row : rows)
        min_col = std::min(min_col, row.start);
    std::vector<std::string> lines;
    lines.reserve(rows.size());
    for (const DiagramRow& row : rows)
        lines.push_back(render_row_ascii(row, min_col));
    if (fmt == RenderFormat::ascii) {
        std::string out;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (i)
                out += '\n';
            out += lines[i];
        }
        return out;
    }
    // LaTeX: same cell syntax, one macro per diagram; rows comma-separated.
    std::string out = "\\stripeddiagram{";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i)
            out += ',';
        out += lines[i];
    }
    out += "}";
    return out;
}

} // namespace exotic
