#include "legknot/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>

namespace legknot {

long long ContactSurgeryDiagram::linking(int i, int j) const {
    if (i < 0 || j < 0 || i >= size() || j >= size())
        throw DimensionError("linking: component index out of range");
    if (i == j) throw DomainError("linking: self-linking is not defined here");
    auto it = lk_.find(std::minmax(i, j));
    return it == lk_.end() ? 0 : it->second;
}

void ContactSurgeryDiagram::set_linking(int i, int j, long long lk) {
    if (i < 0 || j < 0 || i >= size() || j >= size())
        throw DimensionError("set_linking: component index out of range");
    if (i == j) throw DomainError("set_linking: self-linking is not defined here");
    if (lk == 0)
        lk_.erase(std::minmax(i, j));  // keep the sparse view free of zeros
    else
        lk_[std::minmax(i, j)] = lk;
}

IntMatrix linking_matrix(const ContactSurgeryDiagram& d) {
    const int n = d.size();
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = d.component(i).surgery_coefficient();
    for (const auto& [key, v] : d.linking_pairs()) {
        m.at(key.first, key.second) = v;
        m.at(key.second, key.first) = v;
    }
    return m;
}

static void validate(const MarkedDiagram& m) {
    if (int(m.knot.lk.size()) != m.diagram.size())
        throw DimensionError("marked knot has " + std::to_string(m.knot.lk.size()) +
                             " linking numbers for " + std::to_string(m.diagram.size()) +
                             " components");
}

IntMatrix extended_matrix(const MarkedDiagram& m) {
    validate(m);
    const int n = m.diagram.size();
    IntMatrix m0(n + 1, n + 1);
    IntMatrix inner = linking_matrix(m.diagram);
    for (int i = 0; i < n; ++i) {
        m0.at(0, i + 1) = m0.at(i + 1, 0) = m.knot.lk[size_t(i)];
        for (int j = 0; j < n; ++j) m0.at(i + 1, j + 1) = inner.at(i, j);
    }
    return m0;
}

HomologyReport homology(const ContactSurgeryDiagram& d) {
    HomologyReport rep;
    SNFResult snf = smith_normal_form(linking_matrix(d));
    rep.is_qhs = true;
    Int order = 1;
    for (const Int& f : snf.diagonal) {
        if (f == 0) rep.is_qhs = false;
        if (f != 1) rep.h1_invariant_factors.push_back(f);
        order *= f;
    }
    rep.h1_order = rep.is_qhs ? order : Int(0);
    return rep;
}

HomologyReport homology(const MarkedDiagram& m) {
    validate(m);
    HomologyReport rep = homology(m.diagram);
    if (!rep.is_qhs) return rep;

    // r * lk0 lies in M Z^n  iff  left * (r * lk0) lies in D Z^n, where
    // left * M * right = D is the Smith form. Coordinate i contributes the
    // factor d_i / gcd(d_i, (left * lk0)_i) to r.
    SNFResult snf = smith_normal_form(linking_matrix(m.diagram));
    const int n = m.diagram.size();
    Int r = 1;
    for (int i = 0; i < n; ++i) {
        Int vi = 0;
        for (int j = 0; j < n; ++j) vi += snf.left.at(i, j) * Int(m.knot.lk[size_t(j)]);
        Int need = snf.diagonal[size_t(i)] / gcd(snf.diagonal[size_t(i)], vi);
        r = lcm(r, need);
    }
    rep.order_r = r;
    return rep;
}

Int order_of_marked_knot(const MarkedDiagram& m) {
    HomologyReport rep = homology(m);
    if (!rep.is_qhs)
        throw DomainError("order of the marked knot is undefined: "
                          "the surgered manifold is not a rational homology sphere");
    return *rep.order_r;
}

MarkedDiagram reverse_orientation(const MarkedDiagram& m) {
    MarkedDiagram out = m;
    out.knot.rot = -out.knot.rot;
    for (long long& v : out.knot.lk) v = -v;
    return out;
}

LegendrianComponent stabilize(const LegendrianComponent& c, bool positive) {
    LegendrianComponent out = c;
    out.tb -= 1;
    out.rot += positive ? 1 : -1;
    return out;
}

MarkedKnot stabilize(const MarkedKnot& k, bool positive) {
    MarkedKnot out = k;
    out.tb -= 1;
    out.rot += positive ? 1 : -1;
    return out;
}

// ---- File format ----------------------------------------------------------

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

long long parse_int(int lineno, const std::string& tok, const std::string& what) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(lineno, "expected integer " + what + ", got '" + tok + "'");
    return v;
}

// "tb=-3" with key "tb" -> -3.
long long parse_kv(int lineno, const std::string& tok, const std::string& key) {
    const std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError(lineno, "expected '" + key + "=<int>', got '" + tok + "'");
    return parse_int(lineno, tok.substr(prefix.size()), "after '" + prefix + "'");
}

int parse_sign(int lineno, const std::string& tok) {
    if (tok == "sign=+1") return +1;
    if (tok == "sign=-1") return -1;
    throw ParseError(lineno, "expected 'sign=+1' or 'sign=-1', got '" + tok + "'");
}

}  // namespace

DiagramFile parse_diagram(std::istream& in) {
    std::string line;
    int lineno = 0;

    int n = -1;  // component count; -1 until the header is seen
    std::vector<bool> seen;
    int components_seen = 0;
    std::vector<LegendrianComponent> comps;
    std::set<std::pair<int, int>> links_seen;
    std::set<int> marked_links_seen;
    bool have_marked = false;
    bool past_components = false;

    DiagramFile out;
    std::map<std::pair<int, int>, long long> links;
    MarkedKnot marked;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tok = split_tokens(line);
        if (tok.empty()) continue;
        const std::string& verb = tok[0];

        if (n < 0) {
            if (verb != "diagram")
                throw ParseError(lineno, "expected 'diagram n=<int>', got '" + verb + "'");
            if (tok.size() != 2)
                throw ParseError(lineno, "expected 'diagram n=<int>'");
            long long nn = parse_kv(lineno, tok[1], "n");
            if (nn < 0) throw ParseError(lineno, "component count n must be >= 0");
            n = int(nn);
            seen.assign(size_t(n), false);
            comps.resize(size_t(n));
            marked.lk.assign(size_t(n), 0);
            past_components = (n == 0);
            continue;
        }

        if (verb == "component") {
            if (past_components)
                throw ParseError(lineno, components_seen == n
                                             ? "more component lines than n=" + std::to_string(n)
                                             : "component line after link/marked section");
            if (tok.size() != 5)
                throw ParseError(lineno,
                                 "expected 'component <i> tb=<int> rot=<int> sign=<+1|-1>'");
            long long idx = parse_int(lineno, tok[1], "component index");
            if (idx < 1 || idx > n)
                throw ParseError(lineno, "component index " + tok[1] + " outside 1.." +
                                             std::to_string(n));
            if (seen[size_t(idx - 1)])
                throw ParseError(lineno, "duplicate component " + tok[1]);
            seen[size_t(idx - 1)] = true;
            LegendrianComponent c;
            c.tb = parse_kv(lineno, tok[2], "tb");
            c.rot = parse_kv(lineno, tok[3], "rot");
            c.sign = parse_sign(lineno, tok[4]);
            comps[size_t(idx - 1)] = c;
            if (++components_seen == n) past_components = true;
            continue;
        }

        if (components_seen < n)
            throw ParseError(lineno, "expected a component line (" +
                                         std::to_string(components_seen) + " of " +
                                         std::to_string(n) + " declared), got '" + verb + "'");

        if (verb == "link") {
            if (have_marked) throw ParseError(lineno, "link line after marked section");
            if (tok.size() != 4) throw ParseError(lineno, "expected 'link <i> <j> <int>'");
            long long i = parse_int(lineno, tok[1], "link index");
            long long j = parse_int(lineno, tok[2], "link index");
            if (i < 1 || i > n || j < 1 || j > n)
                throw ParseError(lineno, "link index outside 1.." + std::to_string(n));
            if (i >= j) throw ParseError(lineno, "link needs i < j, got " + tok[1] + " " + tok[2]);
            if (!links_seen.insert({int(i), int(j)}).second)
                throw ParseError(lineno, "duplicate link " + tok[1] + " " + tok[2]);
            links[{int(i - 1), int(j - 1)}] = parse_int(lineno, tok[3], "linking number");
            continue;
        }

        if (verb == "marked") {
            if (have_marked) throw ParseError(lineno, "duplicate marked line");
            if (tok.size() != 3) throw ParseError(lineno, "expected 'marked tb=<int> rot=<int>'");
            marked.tb = parse_kv(lineno, tok[1], "tb");
            marked.rot = parse_kv(lineno, tok[2], "rot");
            have_marked = true;
            continue;
        }

        if (verb == "marked_link") {
            if (!have_marked) throw ParseError(lineno, "marked_link before marked line");
            if (tok.size() != 3) throw ParseError(lineno, "expected 'marked_link <i> <int>'");
            long long i = parse_int(lineno, tok[1], "component index");
            if (i < 1 || i > n)
                throw ParseError(lineno, "marked_link index outside 1.." + std::to_string(n));
            if (!marked_links_seen.insert(int(i)).second)
                throw ParseError(lineno, "duplicate marked_link " + tok[1]);
            marked.lk[size_t(i - 1)] = parse_int(lineno, tok[2], "linking number");
            continue;
        }

        throw ParseError(lineno, "unknown directive '" + verb + "'");
    }

    if (n < 0) throw ParseError(lineno + 1, "expected 'diagram n=<int>'");
    if (components_seen < n)
        throw ParseError(lineno + 1, "expected " + std::to_string(n) + " component lines, got " +
                                         std::to_string(components_seen));

    out.diagram = ContactSurgeryDiagram(std::move(comps));
    for (const auto& [key, v] : links) out.diagram.set_linking(key.first, key.second, v);
    if (have_marked) out.marked = std::move(marked);
    return out;
}

DiagramFile parse_diagram(const std::string& text) {
    std::istringstream is(text);
    return parse_diagram(is);
}

std::string format_diagram(const DiagramFile& f) {
    std::ostringstream os;
    const int n = f.diagram.size();
    os << "diagram n=" << n << "\n";
    for (int i = 0; i < n; ++i) {
        const LegendrianComponent& c = f.diagram.component(i);
        os << "component " << i + 1 << " tb=" << c.tb << " rot=" << c.rot
           << " sign=" << (c.sign > 0 ? "+1" : "-1") << "\n";
    }
    for (const auto& [key, v] : f.diagram.linking_pairs())
        if (v != 0) os << "link " << key.first + 1 << " " << key.second + 1 << " " << v << "\n";
    if (f.marked) {
        os << "marked tb=" << f.marked->tb << " rot=" << f.marked->rot << "\n";
        for (int i = 0; i < n; ++i)
            if (f.marked->lk[size_t(i)] != 0)
                os << "marked_link " << i + 1 << " " << f.marked->lk[size_t(i)] << "\n";
    }
    return os.str();
}

std::string format_diagram(const MarkedDiagram& m) {
    validate(m);
    return format_diagram(DiagramFile{m.diagram, m.knot});
}

MarkedDiagram require_marked(const DiagramFile& f) {
    if (!f.marked) throw DomainError("diagram has no marked knot");
    MarkedDiagram m{f.diagram, *f.marked};
    validate(m);
    return m;
}

}  // namespace legknot
