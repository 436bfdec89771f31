#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace grex {

// Root-coefficient tables for the finite-type correspondences.  One row per
// line: the simple-root coefficients c1..cN, a pipe, and the variable name.
// Names: "p[a,b,c]" for a maximal minor, "Xabcdef"/"Yabcdef" for the
// quadratic six-column functions, and "A"/"B" with "^r<j>" (rotation) and
// "^s" (reflection) modifiers for the two cubic eight-column orbits.

struct TableRow {
    std::vector<int> coeffs;
    std::string name;
};

inline std::vector<TableRow> parse_table(const std::string& text, int rank) {
    std::vector<TableRow> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto bar = line.find('|');
        if (bar == std::string::npos) throw std::invalid_argument("table row lacks a name: " + line);
        TableRow row;
        std::istringstream cs(line.substr(0, bar));
        int c;
        while (cs >> c) row.coeffs.push_back(c);
        if (static_cast<int>(row.coeffs.size()) != rank)
            throw std::invalid_argument("table row has wrong arity: " + line);
        std::istringstream ns(line.substr(bar + 1));
        ns >> row.name;
        if (row.name.empty()) throw std::invalid_argument("table row lacks a name: " + line);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline const char* d4_table_text() {
    return R"(
-1  0  0  0 | p[1,4,5]
 1  0  0  0 | p[2,3,6]
 1  1  0  0 | p[3,5,6]
 0  1  1  1 | p[1,2,4]
 0 -1  0  0 | Y123456
 0  1  0  0 | p[1,3,5]
 1  1  1  1 | p[2,4,6]
 1  2  1  1 | X123456
 0  0 -1  0 | p[1,3,6]
 0  0  1  0 | p[2,4,5]
 0  1  1  0 | p[1,2,5]
 1  1  0  1 | p[3,4,6]
 0  0  0 -1 | p[2,3,5]
 0  0  0  1 | p[1,4,6]
 0  1  0  1 | p[1,3,4]
 1  1  1  0 | p[2,5,6]
)";
}

inline const char* e6_table_text() {
    return R"(
-1  0  0  0  0  0 | p[2,3,7]
 1  0  0  0  0  0 | p[1,5,6]
 1  0  1  0  0  0 | p[1,2,4]
 0  0  1  1  0  0 | p[4,6,7]
 0  1  0  1  1  0 | p[3,5,6]
 0  1  0  1  1  1 | p[2,3,5]
 0  0  1  1  1  1 | p[4,5,7]
 1  0  1  1  1  0 | p[1,3,4]
 1  1  1  1  0  0 | p[1,2,6]
 0  1  1  1  0  0 | p[2,6,7]
 0  0  0  1  1  0 | p[1,3,7]
 0  0  0  0  1  1 | p[1,5,7]
 0  0  0  0  0  1 | p[2,4,5]
 0  0  0  0  0 -1 | p[3,4,6]
 0  0 -1  0  0  0 | Y123567
 0  0  1  0  0  0 | p[2,4,7]
 1  0  1  1  0  0 | p[1,4,6]
 1  1  1  1  1  0 | X123456
 0  1  1  2  1  1 | X234567
 0  1  1  2  2  1 | p[3,5,7]
 1  1  1  2  2  1 | p[1,3,5]
 1  1  2  2  1  1 | X124567
 1  1  2  2  1  0 | X123467
 1  1  1  2  1  0 | p[1,3,6]
 0  1  1  1  1  1 | p[2,5,7]
 0  0  0  1  1  1 | Y123457
 0  0  0  0  1  0 | Y134567
 0  0  0  0 -1  0 | p[2,4,6]
 0 -1  0  0  0  0 | p[1,4,7]
 0  1  0  0  0  0 | p[2,5,6]
 0  1  0  1  0  0 | p[2,3,6]
 0  0  1  1  1  0 | p[3,4,7]
 1  0  1  1  1  1 | p[1,4,5]
 1  1  1  1  1  1 | p[1,2,5]
 0  1  1  2  1  0 | p[3,6,7]
 0  0  0 -1  0  0 | Y124567
 0  0  0  1  0  0 | Y123467
 0  1  1  1  1  0 | Y234567
 1  1  1  2  1  1 | Y123456
 1  1  2  2  2  1 | X123457
 1  1  2  3  2  1 | X134567
 1  2  2  3  2  1 | X123567
)";
}

// Three rows are corrected misprints: as printed, the A^r3 row is not a
// root at all, and the Y123478 and X234567 rows duplicate the coefficient
// vectors of the A^r2 and p[2,3,6] rows, so the printed table cannot be a
// bijection.  Each correction lowers a single coefficient by one and lands
// on the unique otherwise-unmatched root, which also agrees with the
// computed denominator vector of the named function.
inline const char* e8_table_text() {
    return R"(
-1  0  0  0  0  0  0  0 | p[3,4,8]
 1  0  0  0  0  0  0  0 | p[2,6,7]
 1  0  1  0  0  0  0  0 | p[1,2,5]
 0  0  1  1  0  0  0  0 | p[1,5,8]
 0  1  0  1  1  0  0  0 | p[3,6,7]
 0  1  0  1  1  1  0  0 | p[3,4,7]
 0  0  1  1  1  1  1  0 | p[4,5,8]
 1  0  1  1  1  1  1  1 | p[2,5,6]
 1  1  1  1  1  1  1  1 | p[1,2,6]
 0  1  1  2  1  1  1  0 | p[1,4,8]
 0  1  1  2  2  1  0  0 | p[3,7,8]
 1  1  1  2  2  1  0  0 | p[2,3,7]
 1  1  2  2  1  1  1  0 | p[1,4,5]
 1  1  2  2  1  1  1  1 | p[1,5,6]
 1  1  1  2  2  1  1  1 | p[2,3,6]
 0  1  1  2  2  2  1  0 | p[4,7,8]
 0 -1  0  0  0  0  0  0 | p[2,5,8]
 0  1  0  0  0  0  0  0 | X123467
 0  1  0  1  0  0  0  0 | Y134678
 0  0  1  1  1  0  0  0 | p[3,5,8]
 1  0  1  1  1  1  0  0 | p[2,5,7]
 1  1  1  1  1  1  1  0 | X124567
 0  1  1  2  1  1  1  1 | Y134568
 0  1  1  2  2  1  1  1 | p[3,6,8]
 1  1  1  2  2  2  1  0 | p[2,4,7]
 1  1  2  2  2  2  1  0 | X124578
 1  1  2  3  2  1  1  1 | Y123568
 1  2  2  3  2  1  1  1 | p[1,3,6]
 1  2  2  3  2  2  1  0 | p[1,4,7]
 1  1  2  3  3  2  1  0 | X234578
 1  1  2  3  3  2  1  1 | X235678
 1  2  2  3  2  2  2  1 | p[1,4,6]
 0  0 -1  0  0  0  0  0 | Y234678
 0  0  1  0  0  0  0  0 | X123458
 1  0  1  1  0  0  0  0 | Y125678
 1  1  1  1  1  0  0  0 | X123567
 0  1  1  2  1  1  0  0 | Y134578
 0  1  1  2  2  1  1  0 | Y345678
 1  1  1  2  2  2  1  1 | Y234567
 1  1  2  2  2  2  2  1 | X124568
 1  1  2  3  2  2  2  1 | Y124568
 1  2  2  3  3  2  1  1 | X123678
 1  2  2  4  3  2  1  0 | Y123478
 1  2  3  4  3  2  1  0 | X134578
 2  2  3  4  3  2  1  1 | Y123567
 2  2  3  4  3  2  2  1 | Y123456
 1  2  3  4  3  3  2  1 | X145678
 1  2  2  4  4  3  2  1 | X234678
 0  0  0 -1  0  0  0  0 | B
 0  0  0  1  0  0  0  0 | B^s
 0  1  1  1  1  0  0  0 | B^sr5
 1  1  1  2  1  1  0  0 | B^r5
 1  1  2  2  2  1  1  0 | B^r3
 1  1  2  3  2  2  1  1 | B^sr3
 1  2  2  3  3  2  2  1 | B^sr2
 1  2  2  4  3  3  2  1 | B^r2
 1  2  3  4  4  3  2  1 | B^r6
 2  2  3  5  4  3  2  1 | B^sr6
 2  3  4  5  4  3  2  1 | B^sr7
 2  3  4  6  4  3  2  1 | B^r7
 2  3  4  6  5  3  2  1 | B^r1
 2  3  4  6  5  4  2  1 | B^sr1
 2  3  4  6  5  4  3  1 | B^sr4
 2  3  4  6  5  4  3  2 | B^r4
 0  0  0  0 -1  0  0  0 | A
 0  0  0  0  1  0  0  0 | Y235678
 0  0  0  1  1  1  0  0 | Y234578
 0  1  1  1  1  1  1  0 | A^r3
 1  1  1  2  1  1  1  1 | A^r5
 1  1  2  2  2  1  1  1 | X123568
 1  1  2  3  2  2  1  0 | Y124578
 1  2  2  3  3  2  1  0 | A^r6
 1  2  2  4  3  2  1  1 | A^r2
 1  2  3  4  3  2  2  1 | X134568
 2  2  3  4  3  3  2  1 | Y124567
 2  2  3  4  4  3  2  1 | A^r1
 1  2  3  5  4  3  2  1 | A^r7
 1  3  3  5  4  3  2  1 | X134678
 2  3  3  5  4  3  2  1 | Y123467
 2  2  4  5  4  3  2  1 | A^r4
 0  0  0  0  0 -1  0  0 | Y135678
 0  0  0  0  0  1  0  0 | X123457
 0  0  0  0  1  1  1  0 | Y245678
 0  0  0  1  1  1  1  1 | Y234568
 0  1  1  1  1  1  1  1 | X123468
 1  1  1  2  1  1  1  0 | Y124678
 1  1  2  2  2  1  0  0 | X123578
 1  1  2  3  2  1  0  0 | Y123578
 1  2  2  3  2  1  1  0 | X134567
 1  2  2  3  2  2  1  1 | Y134567
 1  1  2  3  3  2  2  1 | X234568
 1  1  2  3  3  3  2  1 | X245678
 1  2  2  3  3  3  2  1 | X124678
 1  2  2  4  3  2  2  1 | Y123468
 1  2  3  4  3  2  1  1 | X135678
 2  2  3  4  3  2  1  0 | Y123457
 0  0  0  0  0  0 -1  0 | p[3,5,7]
 0  0  0  0  0  0  1  0 | Y145678
 0  0  0  0  0  1  1  1 | X123456
 0  0  0  0  1  1  1  1 | p[2,6,8]
 0  0  0  1  1  1  1  0 | p[2,4,8]
 0  1  1  1  1  1  0  0 | X123478
 1  1  1  2  1  0  0  0 | Y123678
 1  1  2  2  1  0  0  0 | p[1,3,5]
 1  1  2  2  1  1  0  0 | p[1,5,7]
 1  1  1  2  2  1  1  0 | X234567
 0  1  1  2  2  2  1  1 | X345678
 0  1  1  2  2  2  2  1 | p[4,6,8]
 1  1  1  2  2  2  2  1 | p[2,4,6]
 1  1  2  2  2  2  1  1 | X125678
 1  1  2  3  2  1  1  0 | Y123458
 1  2  2  3  2  1  0  0 | p[1,3,7]
 0  0  0  0  0  0  0 -1 | p[4,5,7]
 0  0  0  0  0  0  0  1 | p[3,5,6]
 0  0  0  0  0  0  1  1 | p[1,6,8]
 0  0  0  0  0  1  1  0 | p[1,2,4]
 0  0  0  0  1  1  0  0 | p[2,7,8]
 0  0  0  1  1  0  0  0 | p[2,3,8]
 0  1  1  1  0  0  0  0 | p[1,3,4]
 1  1  1  1  0  0  0  0 | p[1,6,7]
 1  0  1  1  1  0  0  0 | p[2,3,5]
 0  0  1  1  1  1  0  0 | p[5,7,8]
 0  1  0  1  1  1  1  0 | p[4,6,7]
 0  1  0  1  1  1  1  1 | p[3,4,6]
 0  0  1  1  1  1  1  1 | p[5,6,8]
 1  0  1  1  1  1  1  0 | p[2,4,5]
 1  1  1  1  1  1  0  0 | p[1,2,7]
 0  1  1  2  1  0  0  0 | p[1,3,8]
)";
}

}  // namespace grex
