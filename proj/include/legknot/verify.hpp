#pragma once

#include <string>
#include <vector>

#include "legknot/catalog.hpp"

namespace legknot {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short stat for passing lines
};

struct VerificationReport {
    std::vector<CheckLine> lines;
    int families_checked = 0;
    int rows_checked = 0;  // generated diagrams / table rows compared
    bool all_pass() const;
};

// Replays the classification for one ambient space: builds every catalog
// diagram in range, compares invariants against the published tables,
// checks pairwise distinctness, and matches class cardinalities per tb
// level against the solid-torus realization counts. Exceptional levels
// run over 0..nmax, tight levels over nmin..-1. p is the lens parameter
// for lp1 (>= 2; rp3 pins it to 2, s3 ignores it).
VerificationReport verify_classification(Space space, long long p, long long nmin,
                                         long long nmax);

}  // namespace legknot
