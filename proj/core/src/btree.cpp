#include "eiscurve/btree.hpp"

#include "eiscurve/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace eiscurve {

Mat2 Mat2::identity() {
    Mat2 m;
    m.e[0][0] = 1;
    m.e[1][1] = 1;
    return m;
}

Rational Mat2::det() const {
    return e[0][0] * e[1][1] - e[0][1] * e[1][0];
}

Rational Mat2::trace() const {
    return e[0][0] + e[1][1];
}

Mat2 Mat2::inverse() const {
    Rational d = det();
    if (d == 0) throw Error(ErrorCode::argument, "matrix is not invertible");
    Mat2 m;
    m.e[0][0] = e[1][1] / d;
    m.e[0][1] = -e[0][1] / d;
    m.e[1][0] = -e[1][0] / d;
    m.e[1][1] = e[0][0] / d;
    return m;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
    return m;
}

bool operator==(const Mat2& a, const Mat2& b) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (a.e[i][j] != b.e[i][j]) return false;
    return true;
}

bool Mat2::p_integral(long p) const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!eiscurve::p_integral(e[i][j], p)) return false;
    return true;
}

std::string Mat2::to_string() const {
    std::ostringstream os;
    os << "[[" << rational_to_string(e[0][0]) << "," << rational_to_string(e[0][1]) << "],["
       << rational_to_string(e[1][0]) << "," << rational_to_string(e[1][1]) << "]]";
    return os.str();
}

LatticeVertex::LatticeVertex(long p, long a, Integer b, long c)
    : p_(p), a_(a), b_(std::move(b)), c_(c) {
    if (!is_prime(p)) throw Error(ErrorCode::argument, "lattice vertex: p must be prime");
    if (a < 0 || c < 0) throw Error(ErrorCode::argument, "lattice vertex: negative exponent");
    Integer pa = pow_integer(Integer(p), a);
    if (b_ < 0 || b_ >= pa)
        throw Error(ErrorCode::argument, "lattice vertex: b out of range [0, p^a)");
    long min_val = std::min(a, c);
    if (b_ != 0) min_val = std::min(min_val, valuation(b_, p));
    if (min_val != 0)
        throw Error(ErrorCode::argument, "lattice vertex: form is not primitive");
}

Mat2 LatticeVertex::basis() const {
    Mat2 m;
    m.e[0][0] = Rational(pow_integer(Integer(p_), a_));
    m.e[0][1] = Rational(b_);
    m.e[1][0] = 0;
    m.e[1][1] = Rational(pow_integer(Integer(p_), c_));
    return m;
}

std::string LatticeVertex::to_string() const {
    return basis().to_string();
}

bool operator<(const LatticeVertex& x, const LatticeVertex& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    if (x.b_ != y.b_) return x.b_ < y.b_;
    return x.c_ < y.c_;
}

bool operator==(const LatticeVertex& x, const LatticeVertex& y) {
    return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
}

LatticeVertex vertex_normalize(const Mat2& basis, long p) {
    if (!is_prime(p)) throw Error(ErrorCode::argument, "vertex_normalize: p must be prime");
    if (basis.det() == 0)
        throw Error(ErrorCode::argument, "vertex_normalize: basis is not invertible");
    Rational x = basis.e[0][0], y = basis.e[0][1];
    Rational z = basis.e[1][0], w = basis.e[1][1];  // bottom row
    // column operations over Z localized at p: clear the bottom-left entry
    if (z != 0) {
        if (w == 0 || valuation(z, p) < valuation(w, p)) {
            std::swap(x, y);
            std::swap(z, w);
        }
        if (z != 0) {
            Rational t = z / w;  // p-integral by the valuation comparison
            x -= t * y;
            z = 0;
        }
    }
    // scale each column by a p-unit so the diagonal entries become p-powers;
    // the second column (y, w) picks up the unit p^gamma / w
    long alpha = valuation(x, p);
    long gamma = valuation(w, p);
    Rational top = y * pow_rational(Rational(p), gamma) / w;
    // homothety by p^-s with s = min(alpha, gamma, v(top))
    long s = std::min(alpha, gamma);
    if (top != 0) s = std::min(s, valuation(top, p));
    long a = alpha - s;
    long c = gamma - s;
    top = top * pow_rational(Rational(p), -s);
    // reduce the top-right entry modulo p^a * Z_(p) to an integer in [0, p^a)
    Integer pa = pow_integer(Integer(p), a);
    Integer b = 0;
    if (top != 0 && valuation(top, p) < a) b = mod_p_power(top, pa, p);
    return LatticeVertex(p, a, std::move(b), c);
}

std::vector<LatticeVertex> neighbors(const LatticeVertex& v) {
    long p = v.p();
    Mat2 base = v.basis();
    std::vector<LatticeVertex> out;
    out.reserve(p + 1);
    for (long t = 0; t < p; ++t) {
        Mat2 m = base;
        // right-multiply by [[p, t], [0, 1]]
        Mat2 op;
        op.e[0][0] = Rational(p);
        op.e[0][1] = Rational(t);
        op.e[1][1] = 1;
        op.e[1][0] = 0;
        out.push_back(vertex_normalize(m * op, p));
    }
    Mat2 op;
    op.e[0][0] = 1;
    op.e[0][1] = 0;
    op.e[1][0] = 0;
    op.e[1][1] = Rational(p);
    out.push_back(vertex_normalize(base * op, p));
    std::sort(out.begin(), out.end());
    return out;
}

void MatrixRep::validate() const {
    if (!is_prime(p)) throw Error(ErrorCode::argument, "matrix rep: p must be prime");
    if (generators.empty())
        throw Error(ErrorCode::argument, "matrix rep: at least one generator required");
    for (const Mat2& g : generators)
        if (g.det() == 0) throw Error(ErrorCode::argument, "matrix rep: generator not invertible");
    if (!labels.empty() && labels.size() != generators.size())
        throw Error(ErrorCode::argument, "matrix rep: labels do not match generators");
}

bool is_stable_basis(const Mat2& basis, const MatrixRep& rep, long p) {
    Mat2 inv = basis.inverse();
    for (const Mat2& g : rep.generators) {
        if (!(inv * g * basis).p_integral(p)) return false;
    }
    return true;
}

bool is_stable(const LatticeVertex& v, const MatrixRep& rep) {
    return is_stable_basis(v.basis(), rep, rep.p);
}

const char* reduction_class_name(ReductionClass cls) {
    switch (cls) {
        case ReductionClass::irreducible: return "irreducible";
        case ReductionClass::reducible_indecomposable: return "reducible_indecomposable";
        case ReductionClass::split: return "split";
    }
    return "unknown";
}

namespace {

long residue(const Rational& r, long p) {
    return static_cast<long>(mod_p_power(r, Integer(p), p));
}

// line through (x, y) stable under m over F_p
bool line_stable(const ResidueMat& m, long x, long y, long p) {
    long ix = (m.e[0][0] * x + m.e[0][1] * y) % p;
    long iy = (m.e[1][0] * x + m.e[1][1] * y) % p;
    // image parallel to (x, y): cross product vanishes mod p
    return ((ix * y - iy * x) % p + p) % p == 0;
}

}  // namespace

Reduction reduction_at(const LatticeVertex& v, const MatrixRep& rep) {
    rep.validate();
    if (!is_stable(v, rep))
        throw Error(ErrorCode::not_stable, "reduction_at: vertex is not stable");
    long p = rep.p;
    Mat2 basis = v.basis();
    Mat2 inv = basis.inverse();
    Reduction red;
    for (const Mat2& g : rep.generators) {
        Mat2 conj = inv * g * basis;
        ResidueMat rm;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) rm.e[i][j] = residue(conj.e[i][j], p);
        red.generators.push_back(rm);
    }
    // census over the p+1 lines (1 : t) and (0 : 1)
    std::vector<std::array<long, 2>> lines;
    for (long t = 0; t < p; ++t) lines.push_back({1, t});
    lines.push_back({0, 1});
    for (const auto& line : lines) {
        bool common = true;
        for (const ResidueMat& m : red.generators)
            if (!line_stable(m, line[0], line[1], p)) {
                common = false;
                break;
            }
        if (common) red.stable_lines.push_back(line);
    }
    if (red.stable_lines.empty()) red.cls = ReductionClass::irreducible;
    else if (red.stable_lines.size() == 1) red.cls = ReductionClass::reducible_indecomposable;
    else red.cls = ReductionClass::split;
    return red;
}

StableSet stable_set(const MatrixRep& rep, long radius_cap) {
    rep.validate();
    if (radius_cap < 1) throw Error(ErrorCode::argument, "stable_set: radius_cap must be >= 1");
    LatticeVertex anchor = LatticeVertex::standard(rep.p);
    if (!is_stable(anchor, rep))
        throw Error(ErrorCode::no_anchor,
                    "stable_set: the standard vertex is not stable; conjugate the "
                    "representation first");

    StableSet out;
    std::set<LatticeVertex> visited;  // every vertex whose stability was tested
    std::set<LatticeVertex> stable;
    std::deque<std::pair<LatticeVertex, long>> frontier;
    visited.insert(anchor);
    stable.insert(anchor);
    frontier.emplace_back(anchor, 0);
    while (!frontier.empty()) {
        auto [v, radius] = frontier.front();
        frontier.pop_front();
        if (radius == radius_cap) {
            out.unbounded = true;
            continue;
        }
        for (const LatticeVertex& w : neighbors(v)) {
            if (visited.count(w)) continue;
            visited.insert(w);
            if (is_stable(w, rep)) {
                stable.insert(w);
                frontier.emplace_back(w, radius + 1);
            }
        }
    }
    out.vertices.assign(stable.begin(), stable.end());
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const LatticeVertex& x, const LatticeVertex& y) {
                  if (x.radius() != y.radius()) return x.radius() < y.radius();
                  return x < y;
              });

    // geometry of the induced subgraph
    if (out.vertices.empty()) {
        out.geometry = StableGeometry::empty;
        return out;
    }
    std::vector<int> degree(out.vertices.size(), 0);
    long edges = 0;
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        auto nbrs = neighbors(out.vertices[i]);
        for (std::size_t j = i + 1; j < out.vertices.size(); ++j) {
            if (std::find(nbrs.begin(), nbrs.end(), out.vertices[j]) != nbrs.end()) {
                ++degree[i];
                ++degree[j];
                ++edges;
            }
        }
    }
    bool path = edges == static_cast<long>(out.vertices.size()) - 1 &&
                std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });
    if (path) {
        out.geometry = StableGeometry::segment;
        out.length = static_cast<long>(out.vertices.size()) - 1;
        if (out.vertices.size() == 1) {
            out.endpoints = {out.vertices[0], out.vertices[0]};
        } else {
            std::vector<LatticeVertex> ends;
            for (std::size_t i = 0; i < out.vertices.size(); ++i)
                if (degree[i] == 1) ends.push_back(out.vertices[i]);
            std::sort(ends.begin(), ends.end());
            out.endpoints = {ends.front(), ends.back()};
        }
    } else {
        out.geometry = StableGeometry::not_a_segment;
    }
    return out;
}

bool segment_classification_consistent(const MatrixRep& rep, const StableSet& set) {
    if (set.geometry != StableGeometry::segment) return true;
    for (const LatticeVertex& v : set.vertices) {
        Reduction red = reduction_at(v, rep);
        long stable_neighbors = 0;
        for (const LatticeVertex& w : neighbors(v))
            if (std::find(set.vertices.begin(), set.vertices.end(), w) != set.vertices.end())
                ++stable_neighbors;
        if (stable_neighbors == 0 && red.cls != ReductionClass::irreducible) return false;
        if (stable_neighbors == 1 && red.cls != ReductionClass::reducible_indecomposable)
            return false;
        if (stable_neighbors >= 2) {
            if (red.cls != ReductionClass::split) return false;
            // interior of a segment: the two characters must be distinct,
            // i.e. some generator separates two common stable lines
            bool distinct = false;
            long p = rep.p;
            const auto& l0 = red.stable_lines[0];
            const auto& l1 = red.stable_lines[1];
            for (const ResidueMat& m : red.generators) {
                auto eigen = [&](const std::array<long, 2>& line) {
                    long ix = (m.e[0][0] * line[0] + m.e[0][1] * line[1]) % p;
                    long iy = (m.e[1][0] * line[0] + m.e[1][1] * line[1]) % p;
                    // eigenvalue on the line: image = lambda * (x, y)
                    return line[0] != 0 ? ix : iy;  // line coords have a unit entry
                };
                if (eigen(l0) != eigen(l1)) {
                    distinct = true;
                    break;
                }
            }
            if (!distinct) return false;
        }
    }
    return true;
}

bool reducibility_index_check(const MatrixRep& rep, const std::vector<Integer>& psi1,
                              const std::vector<Integer>& psi2, long n, long word_cap) {
    rep.validate();
    if (n < 1) throw Error(ErrorCode::argument, "reducibility_index_check: n must be >= 1");
    if (word_cap < 1)
        throw Error(ErrorCode::argument, "reducibility_index_check: word_cap must be >= 1");
    if (psi1.size() != rep.generators.size() || psi2.size() != rep.generators.size())
        throw Error(ErrorCode::argument,
                    "reducibility_index_check: one character value per generator required");
    Integer modulus = pow_integer(Integer(rep.p), n);
    for (const auto& list : {psi1, psi2})
        for (const Integer& v : list)
            if (gcd(v, Integer(rep.p)) != 1)
                throw Error(ErrorCode::argument,
                            "character values must be units, i.e. prime to p");

    // alphabet: generators and their inverses, with character values to match
    std::size_t r = rep.generators.size();
    std::vector<Mat2> alphabet;
    std::vector<Integer> val1, val2;
    for (std::size_t i = 0; i < r; ++i) {
        alphabet.push_back(rep.generators[i]);
        val1.push_back(((psi1[i] % modulus) + modulus) % modulus);
        val2.push_back(((psi2[i] % modulus) + modulus) % modulus);
    }
    for (std::size_t i = 0; i < r; ++i) {
        alphabet.push_back(rep.generators[i].inverse());
        val1.push_back(mod_inverse(psi1[i], modulus));
        val2.push_back(mod_inverse(psi2[i], modulus));
    }

    // depth-first over words, carrying the matrix product and both values
    struct Frame {
        Mat2 product;
        Integer v1, v2;
        long depth;
    };
    std::deque<Frame> stack;
    stack.push_back({Mat2::identity(), 1, 1, 0});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        // check the congruence trace(rho(w)) = psi1(w) + psi2(w) mod p^n
        Rational diff = f.product.trace() - Rational((f.v1 + f.v2) % modulus);
        if (diff != 0 && valuation(diff, rep.p) < n) return false;
        if (f.depth == word_cap) continue;
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            stack.push_back({f.product * alphabet[i], (f.v1 * val1[i]) % modulus,
                             (f.v2 * val2[i]) % modulus, f.depth + 1});
        }
    }
    return true;
}

}  // namespace eiscurve
