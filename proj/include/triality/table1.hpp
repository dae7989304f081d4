#pragma once

#include "triality/atlas.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace triality {

/// One row of the classical table of subgroup classes of W(D4), as printed.
struct Table1Row {
    int n = 0;
    int order = 0;
    int ell = 0;
    std::string g1;  // kernel part, e.g. "C", "<C,w1>", "S2^3"
    std::string g;   // isomorphism type, e.g. "Q8", "[2^2]4"
    G0Type g0 = G0Type::Trivial;
    std::vector<int> ms;
    std::array<int, 2> t{};
    std::string s0;  // algebra columns, transcribed loosely
    std::string s;
    /// Factor dimensions read off the S column; empty when the printed
    /// entry does not add up to eight.
    std::vector<int> s_shape;

    int g1_order() const;
    std::vector<int> s0_shape() const;
};

/// A correction applied on top of the printed table.
struct Table1Erratum {
    int row = 0;
    std::string column;
    std::string printed;
    std::string corrected;
    std::string reason;
};

const std::vector<Table1Row>& table1_printed();
const std::vector<Table1Erratum>& table1_errata();
/// The printed table with every erratum applied.
const std::vector<Table1Row>& table1_corrected();
const Table1Row& table1_row(const std::vector<Table1Row>& rows, int n);

/// Element-order histogram expected for the isomorphism type in column G;
/// nullopt for types the table leaves unnamed at this level of detail.
std::optional<std::map<int, int>> expected_order_histogram(const std::string& g);

/// Orbit sizes on the four fibers forced by the image type.
std::vector<int> g0_orbit_shape(G0Type t);

struct Table1Match {
    std::vector<int> row_of_class;  // class id -> row N
    std::vector<int> class_of_row;  // index N-1 -> class id
    /// For each class: every row it receives among the best-scoring assignments.
    std::vector<std::vector<int>> ambiguity;
    std::size_t solutions = 0;
    std::size_t best_solutions = 0;
    bool truncated = false;
    int best_score = 0;
    int max_score = 0;
    int t_direction_agreements = 0;  // classes c with row(μ̃ c) = T1(row c)
    int s_shape_agreements = 0;
    int s_shape_known = 0;

    /// True when every class with several candidate rows only varies inside
    /// one triality orbit of the table.
    bool ambiguities_within_t_orbits(const std::vector<Table1Row>& rows) const;
};

struct MatchOptions {
    std::size_t max_solutions = 1'000'000;
};

/// Finds the assignments of computed classes to rows that respect order,
/// ℓ, G1, G0, the expected isomorphism type, maximal subgroups (as a
/// relation between rows) and the triality orbits of column T. Among them,
/// prefers agreement with the direction of T and with the S column.
/// Throws FingerprintMismatch when no assignment exists.
Table1Match match_table1(const Atlas& atlas, const std::vector<Table1Row>& rows, const MatchOptions& opt = {});

/// Convenience: match against the corrected table, computed once.
const Table1Match& standard_table1_match();

}  // namespace triality
