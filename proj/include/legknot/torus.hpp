#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legknot/rat.hpp"

namespace legknot {

// Boundary slope of a solid torus: the curve a*mu + b*lambda has slope
// b/a, so the meridian itself has slope 0 and the longitude slope 1/0.
class Slope {
public:
    Slope() = default;  // slope 0
    Slope(Rat value) : v_(std::move(value)) {}  // NOLINT: implicit by design
    static Slope infinity() { return Slope(infinite_tag{}); }

    bool is_infinite() const { return !v_.has_value(); }
    const Rat& value() const {
        if (is_infinite()) throw DomainError("infinite slope has no rational value");
        return *v_;
    }

    // Reduced pair (a, b) with the slope equal to a/b, b >= 0, and b = 0
    // exactly for the infinite slope.
    Int a() const { return is_infinite() ? Int(1) : v_->num(); }
    Int b() const { return is_infinite() ? Int(0) : v_->den(); }

    std::string str() const { return is_infinite() ? "inf" : v_->str(); }

    friend bool operator==(const Slope& x, const Slope& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Slope& x, const Slope& y) { return !(x == y); }

private:
    struct infinite_tag {};
    explicit Slope(infinite_tag) : v_(std::nullopt) {}
    std::optional<Rat> v_ = Rat(0);
};

// Negative continued fraction [r0, ..., rk],
//   s = r0 - 1/(r1 - 1/(... - 1/rk)),
// with every term <= -2; exists and is unique for every rational s < -1.
// The empty list stands for slope -1 itself, which has no such finite
// expansion; its tight count is 1.
struct NegCFE {
    std::vector<Int> terms;

    Rat value() const;   // exact reconstruction; empty -> -1
    std::string str() const;  // "[-2,-3]"
};

NegCFE neg_cfe(const Rat& s);  // needs s <= -1

// Number of tight contact structures on a solid torus with boundary slope
// s <= -1, by the Giroux-Honda formula |(r0+1)*...*(r_{k-1}+1)*rk|.
Int tight_count(const NegCFE& cfe);

// Replacing lambda by lambda + k*mu sends slope a/b to a/(b - k*a).
Slope dehn_twist(const Slope& s, const Int& k);

// Twist a slope into the standard range <= -1 and expand it. For every
// slope other than 0 exactly one twist count works; searching k = 0, +1,
// -1, +2, ... therefore stops at that k. Slope 0 is degenerate (the curve
// is the meridian) and throws DomainError.
struct NormalizedSlope {
    NegCFE cfe;
    Int twists;
    Slope slope;  // the twisted slope, equal to cfe.value()
};
NormalizedSlope normalize_slope(const Slope& s);

// Gluing of the two Heegaard solid tori of a lens space: rows express mu2
// and lambda2 in the (mu1, lambda1) basis. Must be unimodular.
class GluingMap {
public:
    GluingMap(Int mu2_mu1, Int mu2_lambda1, Int lambda2_mu1, Int lambda2_lambda1);

    const Int& mu2_mu1() const { return m_[0][0]; }
    const Int& mu2_lambda1() const { return m_[0][1]; }
    const Int& lambda2_mu1() const { return m_[1][0]; }
    const Int& lambda2_lambda1() const { return m_[1][1]; }
    Int det() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

private:
    Int m_[2][2];
};

// A Legendrian rational unknot with tb_q = (n*p + e)/p sits on the
// boundary of a standard neighbourhood whose complement-side slope this
// computes: the dividing curve n*mu1 + lambda1 rewritten in the basis of
// the complementary torus. Also reports tb_q itself.
struct ComplementSlope {
    Rat tb_q;
    Slope s2;
};
ComplementSlope complement_slope(const GluingMap& g, long long n);

// Number of coarse equivalence classes the torus count predicts at this n:
// tight structures on the complement solid torus with the normalized
// boundary slope.
Int realization_count(const GluingMap& g, long long n);

// Coarse classification size for rational unknots in L(p,q): one class
// when q^2 = 1 mod p (the knot is isotopic to its reverse), else two.
int coarse_class_count(long long p, long long q);

// The standard gluings used throughout.
GluingMap s3_gluing();                            // mu2 = lambda1, lambda2 = mu1
GluingMap lens_gluing(long long p, long long q);  // L(p,q); L(p,1) gives lambda2 = lambda1
GluingMap l52_k1_gluing();                        // L(5,2), spine K1
GluingMap l52_k2_gluing();                        // L(5,2) = L(5,3), spine K2

}  // namespace legknot
