#pragma once

#include "eiscurve/numtheory.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace eiscurve {

// 2x2 matrix over the rationals.
struct Mat2 {
    Rational e[2][2];

    static Mat2 identity();
    Rational det() const;
    Rational trace() const;
    Mat2 inverse() const;  // argument error on det = 0
    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend bool operator==(const Mat2& a, const Mat2& b);

    bool p_integral(long p) const;
    std::string to_string() const;
};

// Homothety class of a rank-2 lattice over Z localized at p, in the primitive
// Hermite normal form [[p^a, b], [0, p^c]] with 0 <= b < p^a an integer and
// min(a, c, v_p(b)) = 0. The stated [[p^a, b], [0, 1]] shape is the c = 0
// slice; classes such as diag(1, p) need c > 0 (they have no representative
// with unit lower-right corner), and the extended form covers every vertex:
// there are exactly (p+1)p^(d-1) forms with a + c = d, matching the vertex
// count of the (p+1)-regular tree at distance d.
class LatticeVertex {
  public:
    LatticeVertex(long p, long a, Integer b, long c);

    static LatticeVertex standard(long p) { return LatticeVertex(p, 0, 0, 0); }

    long p() const { return p_; }
    long a() const { return a_; }
    const Integer& b() const { return b_; }
    long c() const { return c_; }

    // Tree distance from the standard vertex.
    long radius() const { return a_ + c_; }

    Mat2 basis() const;
    std::string to_string() const;

    // (a, b, c) lexicographic = normal-form matrix entries read in order.
    friend bool operator<(const LatticeVertex& x, const LatticeVertex& y);
    friend bool operator==(const LatticeVertex& x, const LatticeVertex& y);
    friend bool operator!=(const LatticeVertex& x, const LatticeVertex& y) { return !(x == y); }

  private:
    long p_;
    long a_;
    Integer b_;
    long c_;
};

// Canonical representative of the homothety class of the column span of
// basis: column reduction over Z localized at p, then a p-power homothety.
LatticeVertex vertex_normalize(const Mat2& basis, long p);

// The p+1 classes [L'] with pL < L' < L, sorted by normal form.
std::vector<LatticeVertex> neighbors(const LatticeVertex& v);

struct MatrixRep {
    long p = 2;
    std::vector<Mat2> generators;
    std::vector<std::string> labels;

    void validate() const;  // p prime, generators invertible, labels aligned
};

// True iff basis^-1 * M * basis is p-integral for every generator M.
bool is_stable(const LatticeVertex& v, const MatrixRep& rep);
bool is_stable_basis(const Mat2& basis, const MatrixRep& rep, long p);

enum class ReductionClass { irreducible, reducible_indecomposable, split };

const char* reduction_class_name(ReductionClass cls);

// Generator matrices over F_p (entries in [0, p)).
struct ResidueMat {
    long e[2][2];
};

struct Reduction {
    std::vector<ResidueMat> generators;
    ReductionClass cls = ReductionClass::irreducible;
    // Lines of P^1(F_p) stable under every generator, as (x : y).
    std::vector<std::array<long, 2>> stable_lines;
};

// Conjugates the generators into the lattice basis and reduces mod p, then
// classifies by exhaustive census of the p+1 lines: no common stable line is
// irreducible, exactly one is reducible indecomposable, two or more means
// simultaneously diagonalizable, i.e. split.
Reduction reduction_at(const LatticeVertex& v, const MatrixRep& rep);

enum class StableGeometry { empty, segment, not_a_segment };

struct StableSet {
    std::vector<LatticeVertex> vertices;  // sorted by (radius, normal form)
    StableGeometry geometry = StableGeometry::empty;
    std::optional<std::pair<LatticeVertex, LatticeVertex>> endpoints;
    long length = 0;  // vertex count minus one when the set is a segment
    bool unbounded = false;
};

// BFS from the standard vertex over stable neighbors. The standard vertex
// must be stable (callers pre-conjugate); a stable vertex surviving at
// radius_cap sets the unbounded flag instead of raising.
StableSet stable_set(const MatrixRep& rep, long radius_cap);

// Neighbor-count rules on a computed segment: endpoints reduce irreducible
// (length 0) or reducible indecomposable, interior vertices split with
// distinct diagonal characters.
bool segment_classification_consistent(const MatrixRep& rep, const StableSet& set);

// Certificate that trace(rho(w)) = psi1(w) + psi2(w) mod p^n for every word
// w of length <= word_cap in the generators and their inverses. Character
// values are unit integers mod p^n assigned per generator and extended
// multiplicatively.
bool reducibility_index_check(const MatrixRep& rep, const std::vector<Integer>& psi1,
                              const std::vector<Integer>& psi2, long n, long word_cap);

}  // namespace eiscurve
