#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "legknot/invariants.hpp"
#include "legknot/verify.hpp"

using namespace legknot;

namespace {

DiagramFile load_diagram(const std::string& path) {
    if (path == "-") return parse_diagram(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_diagram(in);
}

std::string h1_string(const std::vector<Int>& factors) {
    if (factors.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " + ";
        out += factors[i] == 0 ? "Z" : "Z/" + factors[i].str();
    }
    return out;
}

Space parse_space(const std::string& s) {
    if (s == "s3") return Space::s3;
    if (s == "rp3") return Space::rp3;
    if (s == "lp1") return Space::lp1;
    if (s == "l52_k1") return Space::l52_k1;
    if (s == "l52_k2") return Space::l52_k2;
    throw DomainError("unknown space '" + s + "' (want s3, rp3, lp1, l52_k1, l52_k2)");
}

Slope parse_slope(const std::string& s) {
    if (s == "inf") return Slope::infinity();
    try {
        auto pos = s.find('/');
        if (pos == std::string::npos) return Slope(Rat(Int(s)));
        Int num(s.substr(0, pos)), den(s.substr(pos + 1));
        if (den == 0 && num != 0) return Slope::infinity();
        return Slope(Rat(num, den));
    } catch (const std::exception&) {
        throw DomainError("cannot parse slope '" + s + "' (want an integer, a/b, or inf)");
    }
}

void run_invariants(const std::string& path) {
    MarkedDiagram m = require_marked(load_diagram(path));
    ClassicalInvariants inv = classical_invariants(m);
    std::cout << "tb_q = " << inv.tb_q << ", rot_q = " << inv.rot_q;
    if (!inv.rot_q.is_zero()) std::cout << " | " << -inv.rot_q;
    std::cout << ", r = " << inv.order_r << ", |H1| = " << inv.h1_order << "\n";
    std::cout << "a0 = " << a0_crosscheck(m) << " (crosscheck ok)\n";
}

void run_d3(const std::string& path) {
    D3Report rep = d3_invariant(load_diagram(path).diagram);
    std::cout << "d3 = " << rep.d3 << ", c^2 = " << rep.c_squared << ", sigma = " << rep.sigma
              << ", chi = " << rep.chi << ", q = " << rep.q_plus << "\n";
}

void run_homology(const std::string& path) {
    DiagramFile f = load_diagram(path);
    HomologyReport rep = f.marked ? homology(require_marked(f)) : homology(f.diagram);
    std::cout << "H1 = " << h1_string(rep.h1_invariant_factors)
              << ", qhs = " << (rep.is_qhs ? "yes" : "no");
    if (rep.order_r) std::cout << ", r = " << *rep.order_r;
    std::cout << "\n";
}

void run_catalog(const std::string& family, std::optional<long long> n,
                 std::optional<long long> p, std::optional<long long> k,
                 std::optional<long long> j) {
    std::optional<Family> f = family_from_name(family);
    if (!f) throw DomainError("unknown family '" + family + "'");
    std::cout << format_diagram(build(FamilyId{*f, n, p, k, j}));
}

void run_count(const std::optional<std::string>& slope, const std::optional<std::string>& space,
               std::optional<long long> p, std::optional<long long> n) {
    Slope s;
    std::optional<Rat> tb;
    if (slope && space) throw DomainError("give either --slope or --space, not both");
    if (slope) {
        s = parse_slope(*slope);
    } else if (space) {
        if (!n) throw DomainError("--space needs --n");
        Space sp = parse_space(*space);
        ComplementSlope cs = complement_slope(space_gluing(sp, p.value_or(0)), *n);
        tb = cs.tb_q;
        s = cs.s2;
    } else {
        throw DomainError("count needs --slope or --space");
    }
    NormalizedSlope ns = normalize_slope(s);  // compute first: no output on error
    if (tb) std::cout << "tb_q = " << *tb << "\n";
    std::cout << "slope = " << s.str() << "\n";
    std::cout << "normalized = " << ns.slope.str() << " (twists = " << ns.twists << ")\n";
    std::cout << "cfe = " << ns.cfe.str() << "\n";
    std::cout << "count = " << tight_count(ns.cfe) << "\n";
}

void run_tables(const std::string& scope, std::optional<long long> p, long long nmax) {
    Space sp = parse_space(scope);
    long long pp = p.value_or(sp == Space::lp1 ? 3 : 0);
    for (const ExpectedRow& row : expected_table(sp, pp, nmax)) {
        std::cout << row.label;
        if (row.n) std::cout << " n=" << *row.n;
        if (row.k) std::cout << " k=" << *row.k;
        std::cout << ": tb_q = " << row.tb_q << ", rot_q = " << row.rot_q;
        if (row.d3) std::cout << ", d3 = " << *row.d3;
        std::cout << "\n";
    }
}

int run_verify(const std::string& suite, std::optional<long long> p, long long nmax) {
    struct Job {
        std::string header;
        Space space;
        long long p;
    };
    std::vector<Job> jobs;
    auto lp1_jobs = [&]() {
        if (p) {
            jobs.push_back({"lp1 p=" + std::to_string(*p), Space::lp1, *p});
        } else {
            for (long long q = 2; q <= 8; ++q)
                jobs.push_back({"lp1 p=" + std::to_string(q), Space::lp1, q});
        }
    };
    if (suite == "s3") {
        jobs.push_back({"s3", Space::s3, 1});
    } else if (suite == "rp3") {
        jobs.push_back({"rp3", Space::rp3, 2});
    } else if (suite == "lp1") {
        lp1_jobs();
    } else if (suite == "l52" || suite == "l52_k1" || suite == "l52_k2") {
        if (suite != "l52_k2") jobs.push_back({"l52_k1", Space::l52_k1, 5});
        if (suite != "l52_k1") jobs.push_back({"l52_k2", Space::l52_k2, 5});
    } else if (suite == "all") {
        jobs.push_back({"s3", Space::s3, 1});
        jobs.push_back({"rp3", Space::rp3, 2});
        lp1_jobs();
        jobs.push_back({"l52_k1", Space::l52_k1, 5});
        jobs.push_back({"l52_k2", Space::l52_k2, 5});
    } else {
        throw DomainError("unknown suite '" + suite + "' (want s3, rp3, lp1, l52, all)");
    }

    int families = 0, rows = 0, failed = 0;
    for (const Job& job : jobs) {
        VerificationReport rep = verify_classification(job.space, job.p, -nmax, nmax);
        std::cout << "== " << job.header << " ==\n";
        for (const CheckLine& line : rep.lines) {
            std::cout << (line.pass ? "PASS " : "FAIL ") << line.name;
            if (!line.detail.empty()) std::cout << ": " << line.detail;
            std::cout << "\n";
            if (!line.pass) ++failed;
        }
        families += rep.families_checked;
        rows += rep.rows_checked;
    }
    if (failed == 0) {
        std::cout << "summary: PASS (" << families << " families, " << rows << " rows)\n";
        return 0;
    }
    std::cout << "summary: FAIL (" << failed << " checks failed)\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of Legendrian rational unknots in surgery diagrams"};
    app.require_subcommand(1);

    std::string path, family, scope, suite, space_name;
    std::optional<std::string> count_slope, count_space;
    std::optional<long long> n, p, k, j;
    long long nmax = 10;

    CLI::App* c_inv = app.add_subcommand("invariants", "tb_q, rot_q, order and |H1| of the marked knot");
    c_inv->add_option("file", path, "diagram file, or - for stdin")->required();

    CLI::App* c_d3 = app.add_subcommand("d3", "d3 of the surgered contact structure");
    c_d3->add_option("file", path, "diagram file, or - for stdin")->required();

    CLI::App* c_hom = app.add_subcommand("homology", "H1 of the surgered manifold");
    c_hom->add_option("file", path, "diagram file, or - for stdin")->required();

    CLI::App* c_cat = app.add_subcommand("catalog", "emit a catalog diagram");
    c_cat->add_option("--family", family, "family name, e.g. lp1_b")->required();
    c_cat->add_option("--n", n, "tb level");
    c_cat->add_option("--p", p, "lens parameter");
    c_cat->add_option("--k", k, "rotation index");
    c_cat->add_option("--j", j, "stabilisation index");

    CLI::App* c_cnt = app.add_subcommand("count", "tight solid-torus count for a boundary slope");
    c_cnt->add_option("--slope", count_slope, "slope as integer, a/b, or inf");
    c_cnt->add_option("--space", count_space, "ambient space (with --n)");
    c_cnt->add_option("--p", p, "lens parameter for --space lp1");
    c_cnt->add_option("--n", n, "tb level");

    CLI::App* c_tab = app.add_subcommand("tables", "emit the expected classification table");
    c_tab->add_option("--scope", scope, "rp3, lp1, l52_k1 or l52_k2")->required();
    c_tab->add_option("--p", p, "lens parameter for lp1 (default 3)");
    c_tab->add_option("--nmax", nmax, "largest tb level (default 10)");

    CLI::App* c_ver = app.add_subcommand("verify", "replay the classification against the tables");
    c_ver->add_option("--suite", suite, "s3, rp3, lp1, l52, or all")->required();
    c_ver->add_option("--p", p, "lens parameter for lp1 (default: sweep 2..8)");
    c_ver->add_option("--nmax", nmax, "largest tb level (default 10)");

    try {
        app.parse(argc, argv);
        if (c_inv->parsed()) run_invariants(path);
        if (c_d3->parsed()) run_d3(path);
        if (c_hom->parsed()) run_homology(path);
        if (c_cat->parsed()) run_catalog(family, n, p, k, j);
        if (c_cnt->parsed()) run_count(count_slope, count_space, p, n);
        if (c_tab->parsed()) run_tables(scope, p, nmax);
        if (c_ver->parsed()) return run_verify(suite, p, nmax);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
