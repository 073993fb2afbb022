#include "legknot/invariants.hpp"

namespace legknot {

namespace {

Int nonzero_det(const IntMatrix& m, const char* who) {
    Int d = det(m);
    if (d == 0)
        throw SingularMatrixError(std::string(who) +
                                  ": singular linking matrix (not a rational homology sphere)");
    return d;
}

}  // namespace

Rat tb_q(const MarkedDiagram& m) {
    IntMatrix m0 = extended_matrix(m);  // validates lk0 length
    Int dm = nonzero_det(linking_matrix(m.diagram), "tb_q");
    return Rat(m.knot.tb) + Rat(det(m0), dm);
}

Rat rot_q(const MarkedDiagram& m) {
    extended_matrix(m);  // validates lk0 length
    const int n = m.diagram.size();
    std::vector<Rat> lk0(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) lk0[size_t(i)] = Rat(m.knot.lk[size_t(i)]);
    IntMatrix mat = linking_matrix(m.diagram);
    if (det(mat) == 0)
        throw SingularMatrixError("rot_q: singular linking matrix (not a rational homology sphere)");
    std::vector<Rat> x = solve(mat, lk0);
    Rat acc = Rat(m.knot.rot);
    for (int i = 0; i < n; ++i) acc -= Rat(m.diagram.component(i).rot) * x[size_t(i)];
    return acc;
}

ClassicalInvariants classical_invariants(const MarkedDiagram& m) {
    ClassicalInvariants inv;
    inv.tb_q = tb_q(m);
    inv.rot_q = rot_q(m);
    inv.order_r = order_of_marked_knot(m);
    inv.h1_order = abs(det(linking_matrix(m.diagram)));
    return inv;
}

Int a0_crosscheck(const MarkedDiagram& m) {
    Int r = order_of_marked_knot(m);
    Int dm = nonzero_det(linking_matrix(m.diagram), "a0_crosscheck");
    Int dm0 = det(extended_matrix(m));
    Rat a0 = Rat(-r) * Rat(dm0, dm);
    if (!a0.is_integer())
        throw ConsistencyError("surgery coefficient a0 = -r*det(M0)/det(M) = " + a0.str() +
                               " is not an integer");
    // r*tb_q = r*tb0 - a0 must hold identically.
    if (Rat(r) * tb_q(m) != Rat(r) * Rat(m.knot.tb) - a0)
        throw ConsistencyError("r*tb_q = r*tb0 - a0 failed");
    return a0.num();
}

D3Report d3_invariant(const ContactSurgeryDiagram& d) {
    const int n = d.size();
    D3Report rep;
    for (int i = 0; i < n; ++i) {
        const LegendrianComponent& c = d.component(i);
        if (c.sign > 0) {
            if (c.tb == 0)
                throw FormulaError("d3 surgery formula needs tb != 0 on every (+1)-component");
            ++rep.q_plus;
        }
    }
    IntMatrix m = linking_matrix(d);
    if (det(m) == 0)
        throw SingularMatrixError("d3: singular linking matrix (not a rational homology sphere)");

    std::vector<Rat> rot(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rot[size_t(i)] = Rat(d.component(i).rot);
    std::vector<Rat> c = solve(m, rot);
    Rat c2;
    for (int i = 0; i < n; ++i) c2 += c[size_t(i)] * rot[size_t(i)];

    rep.c_squared = c2;
    rep.sigma = signature(m);
    rep.chi = 1 + n;
    rep.d3 = (c2 - Rat(3 * rep.sigma + 2 * rep.chi)) / Rat(4) + Rat(rep.q_plus);
    return rep;
}

bool bennequin_violated(const ClassicalInvariants& inv, long long chi_sigma) {
    return inv.tb_q + abs(inv.rot_q) > Rat(Int(-chi_sigma), inv.order_r);
}

}  // namespace legknot
