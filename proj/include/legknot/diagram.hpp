#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legknot/linalg.hpp"

namespace legknot {

// One Legendrian unknot in a contact (+-1)-surgery presentation. The
// integral surgery coefficient of the component is tb + sign.
struct LegendrianComponent {
    long long tb = -1;
    long long rot = 0;
    int sign = -1;  // contact surgery coefficient: +1 or -1

    long long surgery_coefficient() const { return tb + sign; }
};

// Legendrian surgery link together with the symmetric linking pairing.
// Component order is significant: it fixes the matrix indexing and the
// file-format round trip.
class ContactSurgeryDiagram {
public:
    ContactSurgeryDiagram() = default;
    explicit ContactSurgeryDiagram(std::vector<LegendrianComponent> components)
        : components_(std::move(components)) {}

    int size() const { return int(components_.size()); }
    const LegendrianComponent& component(int i) const { return components_.at(size_t(i)); }
    LegendrianComponent& component(int i) { return components_.at(size_t(i)); }
    void add_component(const LegendrianComponent& c) { components_.push_back(c); }

    // Pairwise linking numbers; unset pairs are 0. Indices are 0-based.
    long long linking(int i, int j) const;
    void set_linking(int i, int j, long long lk);

    // Sparse view of the stored pairs, keyed by (min, max).
    const std::map<std::pair<int, int>, long long>& linking_pairs() const { return lk_; }

private:
    std::vector<LegendrianComponent> components_;
    std::map<std::pair<int, int>, long long> lk_;
};

// The non-surgery knot whose rational invariants get computed. lk[i] is
// the linking number with surgery component i.
struct MarkedKnot {
    long long tb = -1;
    long long rot = 0;
    std::vector<long long> lk;
};

struct MarkedDiagram {
    ContactSurgeryDiagram diagram;
    MarkedKnot knot;
};

// Linking matrix M: surgery coefficients on the diagonal, linking numbers
// off it.
IntMatrix linking_matrix(const ContactSurgeryDiagram& d);

// Extended matrix M0: row/column 0 holds the marked knot's linking
// numbers with the corner entry 0; the rest is M.
IntMatrix extended_matrix(const MarkedDiagram& m);

struct HomologyReport {
    // Diagonal of the Smith form with the trivial 1s dropped: the torsion
    // coefficients of H1 (each > 1), then one 0 per free rank.
    std::vector<Int> h1_invariant_factors;
    bool is_qhs = false;
    Int h1_order = 0;               // |H1| when finite, else 0
    std::optional<Int> order_r;     // set when is_qhs and a marked knot was given
};

HomologyReport homology(const ContactSurgeryDiagram& d);
HomologyReport homology(const MarkedDiagram& m);

// Smallest r >= 1 with r * lk0 in the integer column span of M, i.e. the
// order of the marked knot's class in H1. Throws DomainError when the
// surgered manifold is not a rational homology sphere.
Int order_of_marked_knot(const MarkedDiagram& m);

MarkedDiagram reverse_orientation(const MarkedDiagram& m);

// One stabilisation: tb drops by 1, rot moves by +-1.
LegendrianComponent stabilize(const LegendrianComponent& c, bool positive);
MarkedKnot stabilize(const MarkedKnot& k, bool positive);

// ---- Diagram file format ------------------------------------------------
//
//   diagram n=<int>
//   component <i> tb=<int> rot=<int> sign=<+1|-1>     (n lines, i = 1..n)
//   link <i> <j> <int>                                (i < j; unlisted = 0)
//   marked tb=<int> rot=<int>                         (optional)
//   marked_link <i> <int>                             (after marked)
//
// '#' starts a comment; blank lines are ignored. Parse errors carry the
// 1-based line number and the offending token.

struct DiagramFile {
    ContactSurgeryDiagram diagram;
    std::optional<MarkedKnot> marked;
};

DiagramFile parse_diagram(std::istream& in);
DiagramFile parse_diagram(const std::string& text);

// Canonical emission; parse(format(f)) == f with zero links dropped.
std::string format_diagram(const DiagramFile& f);
std::string format_diagram(const MarkedDiagram& m);

// Throws DomainError when the file has no marked knot.
MarkedDiagram require_marked(const DiagramFile& f);

}  // namespace legknot
