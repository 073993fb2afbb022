#include "legknot/torus.hpp"

#include <numeric>
#include <sstream>

namespace legknot {

Rat NegCFE::value() const {
    if (terms.empty()) return Rat(-1);
    Rat v = Rat(terms.back());
    for (size_t i = terms.size() - 1; i-- > 0;) v = Rat(terms[i]) - Rat(1) / v;
    return v;
}

std::string NegCFE::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < terms.size(); ++i) os << (i ? "," : "") << terms[i];
    os << "]";
    return os.str();
}

NegCFE neg_cfe(const Rat& s) {
    if (s > Rat(-1))
        throw DomainError("negative continued fraction needs slope <= -1, got " + s.str());
    NegCFE out;
    if (s == Rat(-1)) return out;  // sentinel: no finite all-(<= -2) expansion exists
    Rat cur = s;
    for (;;) {
        if (cur.is_integer()) {
            out.terms.push_back(cur.num());
            break;
        }
        Int r = cur.floor();
        out.terms.push_back(r);
        cur = Rat(-1) / (cur - Rat(r));  // cur - floor in (0,1), so next value < -1
    }
    return out;
}

Int tight_count(const NegCFE& cfe) {
    if (cfe.terms.empty()) return 1;  // boundary slope -1
    Int prod = 1;
    for (size_t i = 0; i + 1 < cfe.terms.size(); ++i) prod *= cfe.terms[i] + 1;
    prod *= cfe.terms.back();
    return abs(prod);
}

Slope dehn_twist(const Slope& s, const Int& k) {
    Int a = s.a(), b = s.b() - k * s.a();
    if (a == 0) return s;  // meridian slope 0 is fixed
    if (b == 0) return Slope::infinity();
    return Slope(Rat(a, b));
}

NormalizedSlope normalize_slope(const Slope& s) {
    const Int a = s.a(), b = s.b();
    if (a == 0) throw DomainError("degenerate slope 0: the curve is a meridian");
    // a/(b - k*a) <= -1 pins b - k*a to a half-open window of width |a|,
    // which exactly one k hits: k = floor(b/a) + 1. In particular k = 0
    // iff the slope is already <= -1.
    NormalizedSlope out;
    out.twists = floor_div(b, a) + 1;
    out.slope = dehn_twist(s, out.twists);
    out.cfe = neg_cfe(out.slope.value());
    return out;
}

GluingMap::GluingMap(Int mu2_mu1, Int mu2_lambda1, Int lambda2_mu1, Int lambda2_lambda1)
    : m_{{std::move(mu2_mu1), std::move(mu2_lambda1)},
         {std::move(lambda2_mu1), std::move(lambda2_lambda1)}} {
    Int d = det();
    if (d != 1 && d != -1)
        throw DomainError("gluing map is not unimodular (det = " + d.str() + ")");
}

ComplementSlope complement_slope(const GluingMap& g, long long n) {
    // The dividing curve is c = n*mu1 + lambda1 (slope n on the V1 side).
    const Int p = abs(g.mu2_lambda1());
    if (p == 0)
        throw DomainError("gluing identifies the meridians: no rational homology sphere");

    ComplementSlope out;
    // tb_q is the intersection pairing of c with mu2 divided by the order p.
    out.tb_q = Rat(Int(n) * g.mu2_lambda1() - g.mu2_mu1(), p);

    // Solve alpha*mu2 + beta*lambda2 = c for the V2-side coordinates; the
    // coefficient matrix is the transpose of the gluing map, so dividing by
    // det (= +-1) keeps everything integral.
    const Int d = g.det();
    Int alpha = (g.lambda2_lambda1() * n - g.lambda2_mu1()) * d;
    Int beta = (g.mu2_mu1() - g.mu2_lambda1() * n) * d;
    out.s2 = alpha == 0 ? Slope::infinity() : Slope(Rat(beta, alpha));
    return out;
}

Int realization_count(const GluingMap& g, long long n) {
    return tight_count(normalize_slope(complement_slope(g, n).s2).cfe);
}

int coarse_class_count(long long p, long long q) {
    if (p < 2 || q < 1 || q > p - 1 || std::gcd(p, q) != 1)
        throw DomainError("invalid lens space parameters p=" + std::to_string(p) +
                          ", q=" + std::to_string(q));
    return (q * q) % p == 1 ? 1 : 2;
}

GluingMap s3_gluing() { return GluingMap(0, 1, 1, 0); }

GluingMap lens_gluing(long long p, long long q) {
    if (p < 2 || q < 1 || q > p - 1 || std::gcd(p, q) != 1)
        throw DomainError("invalid lens space parameters p=" + std::to_string(p) +
                          ", q=" + std::to_string(q));
    // mu2 = -q*mu1 + p*lambda1. For lambda2 = b*mu1 + d*lambda1 any d with
    // q*d = 1 mod p works (the choices differ by Dehn twists, which the
    // slope normalization absorbs); take d = 1 for q = 1 and the
    // representative in (-p, 0) otherwise, matching the standard pictures.
    long long d = 1;
    if (q != 1) {
        long long inv = 0;
        for (long long c = 1; c < p; ++c)
            if ((c * q) % p == 1) {
                inv = c;
                break;
            }
        d = inv - p;  // in (-p, 0)
    }
    long long b = (1 - q * d) / p;
    return GluingMap(-q, p, b, d);
}

GluingMap l52_k1_gluing() { return lens_gluing(5, 2); }

GluingMap l52_k2_gluing() { return lens_gluing(5, 3); }

}  // namespace legknot
