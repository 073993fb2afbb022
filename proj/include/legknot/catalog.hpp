#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legknot/diagram.hpp"
#include "legknot/torus.hpp"

namespace legknot {

// The ambient spaces the verifier knows. L(5,2) comes in two flavours,
// one per Heegaard spine of the rational unknot.
enum class Space { s3, rp3, lp1, l52_k1, l52_k2 };

// Exceptional (non-loose) families, named after the figures they encode,
// plus the two generators of tight realisations. The L(p,1) families
// specialise: olga_* is p = 1, rp3_* is p = 2.
enum class Family {
    olga_a,
    olga_b,
    olga_c,
    rp3_tb3_a,
    rp3_tb3_b,
    rp3_tb3_c,
    rp3_tb5_a,
    rp3_tb5_b,
    lp1_a,
    lp1_b,
    lp1_c,
    tight_lp1,
    tight_s3,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// Parameters: n is the tb level, p the lens parameter, k the rotation
// index; for tight families k picks the surgery curve's rotation
// (1..p-1) and j the marked knot's stabilisation (1..|n|).
struct FamilyId {
    Family name = Family::olga_a;
    std::optional<long long> n, p, k, j;
};

// Construct the marked surgery diagram of a family member. Out-of-range
// parameters throw DomainError.
MarkedDiagram build(const FamilyId& id);

// All tight realisations with tb_q = n + 1/p (tb_q = n for s3), i.e. the
// (p-1)*|n| stabilised vertical unknots (|n| for s3). Needs n <= -1.
std::vector<MarkedDiagram> tight_family(Space space, long long n, long long p);

// One row of the published invariant tables, with rot_q for the
// generated orientation; the verifier expands the +- pairs itself.
struct ExpectedRow {
    std::string label;
    std::optional<long long> n, k;
    Rat tb_q;
    Rat rot_q;
    std::optional<Rat> d3;  // not tabulated for L(5,2)
};

// The classification tables: scope rp3 (7 row families), lp1 for given p,
// and the two L(5,2) tables (where n buckets rows by tb_q level).
std::vector<ExpectedRow> expected_table(Space scope, long long p, long long nmax);

// Expected realization data per tb level n for the L(5,2) spines: the
// normalized negative continued fraction and the tight count.
struct CountRow {
    std::vector<long long> cfe_terms;  // empty = slope -1 sentinel
    Int count;
};
CountRow expected_realizations(Space space, long long n);

// Predicted number of coarse classes with tb level n for s3/rp3/lp1.
Int expected_exceptional_count(Space space, long long p, long long n);  // n >= 0
Int expected_tight_count(Space space, long long p, long long n);        // n <= -1

GluingMap space_gluing(Space space, long long p);

}  // namespace legknot
