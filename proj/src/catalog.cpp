#include "legknot/catalog.hpp"

namespace legknot {

const char* family_name(Family f) {
    switch (f) {
        case Family::olga_a: return "olga_a";
        case Family::olga_b: return "olga_b";
        case Family::olga_c: return "olga_c";
        case Family::rp3_tb3_a: return "rp3_tb3_a";
        case Family::rp3_tb3_b: return "rp3_tb3_b";
        case Family::rp3_tb3_c: return "rp3_tb3_c";
        case Family::rp3_tb5_a: return "rp3_tb5_a";
        case Family::rp3_tb5_b: return "rp3_tb5_b";
        case Family::lp1_a: return "lp1_a";
        case Family::lp1_b: return "lp1_b";
        case Family::lp1_c: return "lp1_c";
        case Family::tight_lp1: return "tight_lp1";
        case Family::tight_s3: return "tight_s3";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::olga_a, Family::olga_b, Family::olga_c, Family::rp3_tb3_a,
                     Family::rp3_tb3_b, Family::rp3_tb3_c, Family::rp3_tb5_a, Family::rp3_tb5_b,
                     Family::lp1_a, Family::lp1_b, Family::lp1_c, Family::tight_lp1,
                     Family::tight_s3})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

namespace {

long long req(const std::optional<long long>& v, const char* what, const char* family) {
    if (!v) throw DomainError(std::string(family) + " needs parameter " + what);
    return *v;
}

// (p+1) unknots, each tb = -1, rot = 0 with (+1)-surgery, pairwise linking
// -1 (so every integral coefficient vanishes); the marked knot links each
// component once.
MarkedDiagram make_lp1_a(long long p) {
    if (p < 1) throw DomainError("lp1_a needs p >= 1");
    const int n = int(p + 1);
    ContactSurgeryDiagram d(std::vector<LegendrianComponent>(size_t(n), {-1, 0, +1}));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.set_linking(i, j, -1);
    MarkedKnot k{-1, 0, std::vector<long long>(size_t(n), -1)};
    return {std::move(d), std::move(k)};
}

// A single (+1)-surgery curve with tb = -(p+1) and rot = p - 2k; the
// marked knot is its tb-framed push-off.
MarkedDiagram make_lp1_b(long long p, long long k) {
    if (p < 1) throw DomainError("lp1_b needs p >= 1");
    if (k < 0 || k > p) throw DomainError("lp1_b needs 0 <= k <= p");
    ContactSurgeryDiagram d({{-(p + 1), p - 2 * k, +1}});
    MarkedKnot kn{-(p + 1), p - 2 * k, {-(p + 1)}};
    return {std::move(d), std::move(kn)};
}

// A chain of n unknots: a (+1)-curve with tb = -2, rot = 1, then
// (-1)-curves (tb = -1, rot = 0 in the middle, tb = -p, rot = p - 2k + 1
// at the end), consecutive curves linking -1. The marked knot links the
// first component twice and the second once.
MarkedDiagram make_lp1_c(long long p, long long k, long long n) {
    if (p < 1) throw DomainError("lp1_c needs p >= 1");
    if (k < 1 || k > p) throw DomainError("lp1_c needs 1 <= k <= p");
    if (n < 2) throw DomainError("lp1_c needs n >= 2");
    std::vector<LegendrianComponent> comps;
    comps.push_back({-2, 1, +1});
    for (long long i = 1; i + 1 < n; ++i) comps.push_back({-1, 0, -1});
    comps.push_back({-p, p - 2 * k + 1, -1});
    ContactSurgeryDiagram d(std::move(comps));
    for (int i = 0; i + 1 < int(n); ++i) d.set_linking(i, i + 1, -1);
    MarkedKnot kn{-2, 1, std::vector<long long>(size_t(n), 0)};
    kn.lk[0] = -2;
    kn.lk[1] = -1;
    return {std::move(d), std::move(kn)};
}

// The (|n|-j)-fold negatively, (j-1)-fold positively stabilised standard
// unknot in the tight S^3: no surgery at all.
MarkedDiagram make_tight_s3(long long n, long long j) {
    if (n > -1) throw DomainError("tight_s3 needs n <= -1");
    if (j < 1 || j > -n) throw DomainError("tight_s3 stabilisation index j outside 1..|n|");
    MarkedKnot k{n, n + 2 * j - 1, {}};
    return {ContactSurgeryDiagram{}, std::move(k)};
}

// (-1)-surgery on a tb = -p+1 unknot gives the tight L(p,1)s as k runs
// over the rotation choices; the marked knot is a stabilised meridian.
MarkedDiagram make_tight_lp1(long long p, long long n, long long k, long long j) {
    if (p < 2) throw DomainError("tight_lp1 needs p >= 2");
    if (n > -1) throw DomainError("tight_lp1 needs n <= -1");
    if (k < 1 || k > p - 1) throw DomainError("tight_lp1 rotation index k outside 1..p-1");
    if (j < 1 || j > -n) throw DomainError("tight_lp1 stabilisation index j outside 1..|n|");
    ContactSurgeryDiagram d({{-p + 1, -p + 2 * k, -1}});
    MarkedKnot kn{n, n + 2 * j - 1, {-1}};
    return {std::move(d), std::move(kn)};
}

}  // namespace

MarkedDiagram build(const FamilyId& id) {
    switch (id.name) {
        case Family::olga_a:
            return make_lp1_a(1);
        case Family::olga_b: {
            long long k = id.k.value_or(0);
            if (k != 0 && k != 1) throw DomainError("olga_b needs k in {0,1}");
            return make_lp1_b(1, k);
        }
        case Family::olga_c: {
            long long n = req(id.n, "n", "olga_c");
            if (n < 3) throw DomainError("olga_c needs n >= 3");
            return make_lp1_c(1, 1, n - 1);  // a chain of n-1 curves realises tb_q = n
        }
        case Family::rp3_tb3_a:
            return make_lp1_a(2);
        case Family::rp3_tb3_b:
            return make_lp1_b(2, 1);
        case Family::rp3_tb3_c: {
            long long k = id.k.value_or(0);
            if (k != 0 && k != 2) throw DomainError("rp3_tb3_c needs k in {0,2}");
            return make_lp1_b(2, k);
        }
        case Family::rp3_tb5_a:
            return make_lp1_c(2, 1, req(id.n, "n", "rp3_tb5_a"));
        case Family::rp3_tb5_b:
            return make_lp1_c(2, 2, req(id.n, "n", "rp3_tb5_b"));
        case Family::lp1_a:
            return make_lp1_a(req(id.p, "p", "lp1_a"));
        case Family::lp1_b:
            return make_lp1_b(req(id.p, "p", "lp1_b"), req(id.k, "k", "lp1_b"));
        case Family::lp1_c:
            return make_lp1_c(req(id.p, "p", "lp1_c"), req(id.k, "k", "lp1_c"),
                              req(id.n, "n", "lp1_c"));
        case Family::tight_s3:
            return make_tight_s3(req(id.n, "n", "tight_s3"), id.j.value_or(1));
        case Family::tight_lp1:
            return make_tight_lp1(req(id.p, "p", "tight_lp1"), req(id.n, "n", "tight_lp1"),
                                  id.k.value_or(1), id.j.value_or(1));
    }
    throw DomainError("unknown family");
}

std::vector<MarkedDiagram> tight_family(Space space, long long n, long long p) {
    if (n > -1) throw DomainError("tight_family needs n <= -1");
    std::vector<MarkedDiagram> out;
    switch (space) {
        case Space::s3:
            for (long long j = 1; j <= -n; ++j) out.push_back(make_tight_s3(n, j));
            break;
        case Space::rp3:
            p = 2;
            [[fallthrough]];
        case Space::lp1:
            for (long long k = 1; k <= p - 1; ++k)
                for (long long j = 1; j <= -n; ++j) out.push_back(make_tight_lp1(p, n, k, j));
            break;
        default:
            throw DomainError("tight_family: no generated diagrams for this space");
    }
    return out;
}

std::vector<ExpectedRow> expected_table(Space scope, long long p, long long nmax) {
    std::vector<ExpectedRow> rows;
    auto add = [&](std::string label, std::optional<long long> n, std::optional<long long> k,
                   Rat tb, Rat rot, std::optional<Rat> d3) {
        rows.push_back({std::move(label), n, k, std::move(tb), std::move(rot), std::move(d3)});
    };

    switch (scope) {
        case Space::rp3:
            add("rp3_tb3_a", 0, {}, Rat(1, 2), Rat(0), Rat(1, 4));
            add("rp3_tb3_b", 1, 1, Rat(3, 2), Rat(0), Rat(3, 4));
            add("rp3_tb3_c", 1, 0, Rat(3, 2), Rat(-1), Rat(1, 4));
            for (long long n = 2; n <= nmax; ++n) {
                Rat tb = Rat(2 * n + 1, 2);
                if (n % 2 == 0) {
                    add("rp3_tb5_a", n, {}, tb, Rat(-(n - 1)), Rat(3, 4));
                    add("rp3_tb5_b", n, {}, tb, Rat(-n), Rat(1, 4));
                } else {
                    add("rp3_tb5_a", n, {}, tb, Rat(-n), Rat(1, 4));
                    add("rp3_tb5_b", n, {}, tb, Rat(-(n - 1)), Rat(3, 4));
                }
            }
            break;

        case Space::lp1:
            if (p < 1) throw DomainError("expected_table(lp1) needs p >= 1");
            add("lp1_a", 0, {}, Rat(1, p), Rat(0), Rat(3 - p, 4));
            for (long long k = 0; k <= p; ++k)
                add("lp1_b", 1, k, Rat(p + 1, p), Rat(2 * k - p, p),
                    Rat(3 * p - (p - 2 * k) * (p - 2 * k), 4 * p));
            for (long long n = 2; n <= nmax; ++n)
                for (long long k = 1; k <= p; ++k) {
                    Rat tb = Rat(n * p + 1, p);
                    if (n % 2 == 0)
                        add("lp1_c", n, k, tb, Rat(-((n - 2) * p + 2 * k), p),
                            Rat(3 * p - (p - 2 * k) * (p - 2 * k), 4 * p));
                    else
                        add("lp1_c", n, k, tb, Rat(-(n * p + 2 - 2 * k), p),
                            Rat(3 * p - (p - 2 * k + 2) * (p - 2 * k + 2), 4 * p));
                }
            break;

        case Space::l52_k1:
            add("k1a.a", 0, {}, Rat(2, 5), Rat(1, 5), {});
            add("k1a.b", 1, {}, Rat(7, 5), Rat(2, 5), {});
            add("k1a.c", 1, {}, Rat(7, 5), Rat(6, 5), {});
            for (long long n = 2; n <= nmax; ++n) {
                Rat tb = Rat(5 * n + 2, 5);
                add("k1b.a", n, {}, tb, Rat(n % 2 == 0 ? 5 * n - 7 : 5 * n + 1, 5), {});
                add("k1b.b", n, {}, tb, Rat(5 * n - 3, 5), {});
                add("k1b.c", n, {}, tb, Rat(n % 2 == 0 ? 5 * n + 1 : 5 * n - 7, 5), {});
            }
            break;

        case Space::l52_k2:
            add("k2a.a", 0, {}, Rat(3, 5), Rat(0), {});
            add("k2a.b", 0, {}, Rat(3, 5), Rat(2, 5), {});
            add("k2a.c", 1, {}, Rat(8, 5), Rat(7, 5), {});
            add("k2a.d", 1, {}, Rat(8, 5), Rat(1, 5), {});
            add("k2a.e", 1, {}, Rat(8, 5), Rat(1), {});
            for (long long n = 2; n <= nmax; ++n) {
                Rat tb = Rat(5 * n + 3, 5);
                add("k2b.a", n, {}, tb, Rat(n % 2 == 0 ? 5 * n - 6 : 5 * n + 2, 5), {});
                add("k2b.b", n, {}, tb, n % 2 == 0 ? Rat(5 * n - 4, 5) : Rat(n), {});
                add("k2b.c", n, {}, tb, Rat(n % 2 == 0 ? 5 * n + 2 : 5 * n - 6, 5), {});
                add("k2b.d", n, {}, tb, n % 2 == 0 ? Rat(n) : Rat(5 * n - 4, 5), {});
            }
            break;

        case Space::s3:
            throw DomainError("expected_table covers rp3, lp1 and the L(5,2) spines");
    }
    return rows;
}

CountRow expected_realizations(Space space, long long n) {
    CountRow row;
    switch (space) {
        case Space::l52_k1:
            if (n <= -2) {
                row.cfe_terms = {-2, -3, n};
                row.count = 2 * Int(-n);
            } else if (n == -1) {
                row.cfe_terms = {-2, -2};
                row.count = 2;
            } else if (n == 0) {
                row.cfe_terms = {-2};
                row.count = 2;
            } else if (n == 1) {
                row.cfe_terms = {-2, -4};
                row.count = 4;
            } else {
                row.cfe_terms = {-2, -4};
                for (long long i = 1; i < n; ++i) row.cfe_terms.push_back(-2);
                row.count = 6;
            }
            return row;
        case Space::l52_k2:
            if (n <= -2) {
                row.cfe_terms = {-3, -2, n};
                row.count = 2 * Int(-n);
            } else if (n == -1) {
                row.cfe_terms = {-2};
                row.count = 2;
            } else if (n == 0) {
                row.cfe_terms = {-3};
                row.count = 3;
            } else if (n == 1) {
                row.cfe_terms = {-3, -3};
                row.count = 6;
            } else {
                row.cfe_terms = {-3, -3};
                for (long long i = 1; i < n; ++i) row.cfe_terms.push_back(-2);
                row.count = 8;
            }
            return row;
        default:
            throw DomainError("expected_realizations covers the L(5,2) spines only");
    }
}

Int expected_exceptional_count(Space space, long long p, long long n) {
    switch (space) {
        case Space::s3:
            if (n < 1) throw DomainError("no exceptional rational unknots in S^3 below tb 1");
            return n == 1 ? 1 : 2;
        case Space::rp3:
            p = 2;
            [[fallthrough]];
        case Space::lp1:
            if (p < 2) throw DomainError("expected_exceptional_count needs p >= 2");
            if (n < 0) throw DomainError("exceptional range is n >= 0");
            return n == 0 ? Int(1) : (n == 1 ? Int(p + 1) : Int(2 * p));
        case Space::l52_k1:
        case Space::l52_k2:
            if (n < 0) throw DomainError("exceptional range is n >= 0");
            return expected_realizations(space, n).count;
    }
    throw DomainError("unknown space");
}

Int expected_tight_count(Space space, long long p, long long n) {
    if (n > -1) throw DomainError("tight range is n <= -1");
    switch (space) {
        case Space::s3:
            return Int(-n);
        case Space::rp3:
            p = 2;
            [[fallthrough]];
        case Space::lp1:
            if (p < 2) throw DomainError("expected_tight_count needs p >= 2");
            return Int(p - 1) * Int(-n);
        case Space::l52_k1:
        case Space::l52_k2:
            return expected_realizations(space, n).count;
    }
    throw DomainError("unknown space");
}

GluingMap space_gluing(Space space, long long p) {
    switch (space) {
        case Space::s3:
            return s3_gluing();
        case Space::rp3:
            return lens_gluing(2, 1);
        case Space::lp1:
            return lens_gluing(p, 1);
        case Space::l52_k1:
            return l52_k1_gluing();
        case Space::l52_k2:
            return l52_k2_gluing();
    }
    throw DomainError("unknown space");
}

}  // namespace legknot
