#pragma once

#include "legknot/diagram.hpp"

namespace legknot {

struct ClassicalInvariants {
    Rat tb_q;
    Rat rot_q;
    Int order_r = 1;  // order of the knot's class in H1
    Int h1_order = 1;
};

// Rational Thurston-Bennequin invariant: tb0 + det(M0)/det(M).
Rat tb_q(const MarkedDiagram& m);

// Rational rotation number: rot0 - <rot, M^{-1} lk0>.
Rat rot_q(const MarkedDiagram& m);

ClassicalInvariants classical_invariants(const MarkedDiagram& m);

// Topological surgery coefficient a0 = -r * det(M0) / det(M) of the marked
// knot. Checks that it is an integer and that r*tb_q = r*tb0 - a0 holds;
// a violation throws ConsistencyError.
Int a0_crosscheck(const MarkedDiagram& m);

// d3 of the surgered contact structure via the surgery formula
//   d3 = (c^2 - 3*sigma - 2*chi)/4 + q,
// where M*C = rot, c^2 = <C, rot>, sigma/chi are taken on the 4-manifold
// of the integral surgery presentation and q counts (+1)-surgeries.
// Every (+1)-component must have tb != 0, else FormulaError.
struct D3Report {
    Rat d3;
    Rat c_squared;
    int sigma = 0;
    int chi = 0;
    int q_plus = 0;
};
D3Report d3_invariant(const ContactSurgeryDiagram& d);

// Rational Bennequin bound for a rational unknot: violated iff
// tb_q + |rot_q| > -chi(Sigma)/r, with chi(Sigma) the Euler characteristic
// of the rational Seifert surface. Equality does not violate the bound.
bool bennequin_violated(const ClassicalInvariants& inv, long long chi_sigma);

}  // namespace legknot
