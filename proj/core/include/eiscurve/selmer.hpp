#pragma once

#include "eiscurve/dirichlet.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eiscurve {

// A place of Q: a finite prime or the infinite place.
class Place {
  public:
    static Place infinity() { return Place(true, 0); }
    static Place finite(long p) { return Place(false, p); }

    bool is_infinity() const { return infinite_; }
    long prime() const { return prime_; }

    std::string name() const { return infinite_ ? "inf" : std::to_string(prime_); }

    // finite places ascending, the infinite place last
    friend bool operator<(const Place& a, const Place& b) {
        if (a.infinite_ != b.infinite_) return !a.infinite_;
        return a.prime_ < b.prime_;
    }
    friend bool operator==(const Place& a, const Place& b) {
        return a.infinite_ == b.infinite_ && a.prime_ == b.prime_;
    }

  private:
    Place(bool infinite, long prime) : infinite_(infinite), prime_(prime) {}
    bool infinite_;
    long prime_;
};

// One-dimensional p-adic Galois character chi * omega_p^j, with chi a
// primitive Dirichlet character of conductor prime to p and omega_p the
// p-adic cyclotomic character. Dimensions of cohomology groups depend only
// on exact predicates (chi(v) = 1, j = 0, parity), so no p-adic arithmetic
// is ever performed.
class GaloisCharacter {
  public:
    GaloisCharacter(long p, const DirichletCharacter& chi, long j);

    long p() const { return p_; }
    const DirichletCharacter& chi() const { return chi_; }
    long j() const { return j_; }

    bool is_trivial() const { return chi_.modulus() == 1 && j_ == 0; }

    // The Tate dual twist eta^{-1} * omega_p, i.e. (chi^{-1}, 1 - j).
    GaloisCharacter dual_twist() const;

    friend bool operator==(const GaloisCharacter& a, const GaloisCharacter& b) {
        return a.p_ == b.p_ && a.j_ == b.j_ && a.chi_ == b.chi_;
    }

  private:
    long p_;
    DirichletCharacter chi_;  // stored primitive
    long j_;
};

enum class LocalConditionKind { unramified, crystalline, full, zero };

const char* condition_name(LocalConditionKind kind);
std::optional<LocalConditionKind> condition_from_name(const std::string& name);

// dim H^0(G_v, Q_p(eta)).
int local_h0(const Place& v, const GaloisCharacter& eta);

// dim H^0(G_Q, Q_p(eta)): 1 iff eta is trivial.
int global_h0(const GaloisCharacter& eta);

// Dimension of the chosen local condition subspace of H^1(G_v, Q_p(eta)).
// Crystalline is only meaningful at v = p; at the infinite place only zero
// and full are accepted (both are 0-dimensional for odd p).
int local_cond_dim(const Place& v, LocalConditionKind cond, const GaloisCharacter& eta);

// Orthogonal complement under local Tate duality: full <-> zero,
// unramified <-> unramified, crystalline <-> crystalline (Bloch-Kato).
LocalConditionKind dual_condition(const Place& v, LocalConditionKind cond);

struct DualTermResult {
    enum class Kind { known, assumed, unknown };
    Kind kind = Kind::unknown;
    int value = 0;
    std::string reason;

    static DualTermResult known(int value, std::string reason) {
        return {Kind::known, value, std::move(reason)};
    }
    static DualTermResult assumed(int value) {
        return {Kind::assumed, value, "assumed by caller"};
    }
    static DualTermResult unknown() { return {}; }
};

// Vanishing criteria for the dual Selmer term, applied to the dual problem's
// character and conditions. Exactly two facts are claimed: finiteness of
// class numbers for finite-order characters with conditions no larger than
// unramified (crystalline of an unramified character included), and Soule's
// vanishing for omega_p^j with even j >= 2 and a condition at p no larger
// than crystalline. Everything else is reported unknown.
DualTermResult global_vanishing_rule(const GaloisCharacter& eta,
                                     const std::map<Place, LocalConditionKind>& conditions);

struct SelmerProblem {
    GaloisCharacter character;
    std::set<Place> sigma;
    std::map<Place, LocalConditionKind> conditions;

    // sigma contains p and infinity and all primes ramified in chi; every
    // member of sigma carries an explicit condition. The unramified kind is
    // rejected at p (it is not self-dual there; crystalline plays that role)
    // and at infinity.
    void validate() const;

    // The dual problem: dual character, orthogonal conditions, same sigma.
    SelmerProblem dual() const;
};

struct LedgerEntry {
    std::string label;
    int value = 0;
    std::string justification;
};

struct SelmerResult {
    // Set when the dual term is known or assumed; otherwise the answer is
    // symbolic ("rest + (unknown dual term)").
    std::optional<int> dimension;
    std::string symbolic;
    DualTermResult dual_term;
    std::vector<LedgerEntry> ledger;
    // Sum of every ledger term except the dual one.
    int rest_sum = 0;
};

// The Wiles dimension formula, assembled term by term:
//   dim H^1_L(V) = dim H^1_{L-perp}(V*(1)) + h^0(Q, V) - h^0(Q, V*(1))
//                + sum_{v in sigma} (dim L_v - h^0(G_v, V)).
// Places outside sigma contribute nothing since the unramified condition
// has dimension h^0. The ledger records each term with its justification.
SelmerResult selmer_dimension(const SelmerProblem& problem,
                              std::optional<int> assume_dual = std::nullopt);

}  // namespace eiscurve
