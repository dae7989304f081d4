#pragma once

#include "triality/atlas.hpp"
#include "triality/table1.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace triality::cli {

/// Entry point shared by the executable and the tests. Returns 0 when every
/// check passes, 1 on a failed check or domain error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// One object per class, in row order of the classical subgroup table.
nlohmann::ordered_json atlas_json(const Atlas& atlas, const Table1Match& match);
/// Columns N, |G|, l, |G1|, G0, MS, T, orbit shapes.
std::string atlas_csv(const Atlas& atlas, const Table1Match& match);
std::string atlas_text(const Atlas& atlas, const Table1Match& match);

struct VerifyOptions {
    std::uint64_t seed = 1;
    int iterations = 100;
};

/// Each returns true on success and writes a human-readable report.
bool verify_functors(std::ostream& out);
bool verify_witt(const VerifyOptions& opt, std::ostream& out);
bool verify_automorphisms(std::ostream& out);
bool verify_hurwitz(std::ostream& out);
bool verify_resolvents(const VerifyOptions& opt, std::ostream& out);
bool verify_atlas(std::ostream& out);

}  // namespace triality::cli
