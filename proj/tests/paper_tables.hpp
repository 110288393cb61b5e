// Frozen correspondence tables for the worked examples: (p,q) = (3,1) with
// k = 1, 2; p = q = k = 2; and p = q = k = 3. One row per marked tableau:
// (n1, n2, ell, mark) -> ((r, s), type).
#ifndef EXOTIC_TESTS_PAPER_TABLES_HPP
#define EXOTIC_TESTS_PAPER_TABLES_HPP

#include "exotic/exotic_cone.hpp"

#include <vector>

namespace exotic_tests {

struct TableRow {
    unsigned n1, n2, ell, mark;
    unsigned r, s;
    exotic::ExoticType typ;
};

inline const std::vector<TableRow>& table_311_k1() {
    using exotic::ExoticType;
    static const std::vector<TableRow> rows = {
        {1, 0, 0, 2, 1, 0, ExoticType::I},
        {1, 0, 0, 0, 1, 0, ExoticType::II},
        {0, 0, 1, 1, 0, 1, ExoticType::II},
        {0, 1, 0, 0, 0, 1, ExoticType::III},
        {0, 0, 1, 0, 0, 0, ExoticType::II},
    };
    return rows;
}

inline const std::vector<TableRow>& table_311_k2() {
    using exotic::ExoticType;
    static const std::vector<TableRow> rows = {
        {1, 0, 1, 2, 1, 0, ExoticType::I},
        {2, 0, 0, 0, 1, 0, ExoticType::II},
        {2, 0, 0, 2, 1, 0, ExoticType::II},
        {1, 0, 1, 1, 0, 1, ExoticType::II},
        {1, 1, 0, 2, 0, 1, ExoticType::II},
        {1, 1, 0, 0, 0, 1, ExoticType::III},
        {1, 0, 1, 0, 0, 0, ExoticType::II},
    };
    return rows;
}

inline const std::vector<TableRow>& table_222() {
    using exotic::ExoticType;
    static const std::vector<TableRow> rows = {
        {2, 0, 0, 2, 2, 0, ExoticType::I},
        {1, 1, 0, 2, 1, 1, ExoticType::I},
        {1, 1, 0, 0, 1, 1, ExoticType::III},
        {0, 2, 0, 0, 0, 2, ExoticType::III},
        {1, 0, 1, 2, 1, 0, ExoticType::I},
        {1, 0, 1, 1, 1, 0, ExoticType::II},
        {0, 1, 1, 1, 0, 1, ExoticType::II},
        {0, 1, 1, 0, 0, 1, ExoticType::III},
        {0, 0, 2, 1, 0, 0, ExoticType::II},
    };
    return rows;
}

inline const std::vector<TableRow>& table_333() {
    using exotic::ExoticType;
    static const std::vector<TableRow> rows = {
        {3, 0, 0, 2, 3, 0, ExoticType::I},
        {2, 1, 0, 0, 2, 1, ExoticType::III},
        {2, 1, 0, 2, 2, 1, ExoticType::I},
        {1, 2, 0, 0, 1, 2, ExoticType::III},
        {1, 2, 0, 2, 1, 2, ExoticType::I},
        {0, 3, 0, 0, 0, 3, ExoticType::III},
        {2, 0, 1, 1, 2, 0, ExoticType::II},
        {2, 0, 1, 2, 2, 0, ExoticType::I},
        {1, 1, 1, 0, 1, 1, ExoticType::III},
        {1, 1, 1, 1, 1, 1, ExoticType::II},
        {1, 1, 1, 2, 1, 1, ExoticType::I},
        {0, 2, 1, 0, 0, 2, ExoticType::III},
        {0, 2, 1, 1, 0, 2, ExoticType::II},
        {1, 0, 2, 1, 1, 0, ExoticType::II},
        {1, 0, 2, 2, 1, 0, ExoticType::I},
        {0, 1, 2, 0, 0, 1, ExoticType::III},
        {0, 1, 2, 1, 0, 1, ExoticType::II},
        {0, 0, 3, 1, 0, 0, ExoticType::II},
    };
    return rows;
}

} // namespace exotic_tests

#endif
