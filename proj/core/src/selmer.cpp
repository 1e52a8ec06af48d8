#include "eiscurve/selmer.hpp"

#include "eiscurve/error.hpp"

#include <numeric>
#include <sstream>

namespace eiscurve {

GaloisCharacter::GaloisCharacter(long p, const DirichletCharacter& chi, long j)
    : p_(p), chi_(chi.primitive()), j_(j) {
    if (p < 3 || !is_prime(p))
        throw Error(ErrorCode::argument, "galois character: p must be an odd prime");
    if (chi_.modulus() % p == 0)
        throw Error(ErrorCode::argument, "galois character: conductor of chi must be prime to p");
}

GaloisCharacter GaloisCharacter::dual_twist() const {
    return GaloisCharacter(p_, chi_.inverse(), 1 - j_);
}

const char* condition_name(LocalConditionKind kind) {
    switch (kind) {
        case LocalConditionKind::unramified: return "unramified";
        case LocalConditionKind::crystalline: return "crystalline";
        case LocalConditionKind::full: return "full";
        case LocalConditionKind::zero: return "zero";
    }
    return "unknown";
}

std::optional<LocalConditionKind> condition_from_name(const std::string& name) {
    if (name == "unramified") return LocalConditionKind::unramified;
    if (name == "crystalline") return LocalConditionKind::crystalline;
    if (name == "full") return LocalConditionKind::full;
    if (name == "zero") return LocalConditionKind::zero;
    return std::nullopt;
}

int local_h0(const Place& v, const GaloisCharacter& eta) {
    const DirichletCharacter& chi = eta.chi();
    if (v.is_infinity()) {
        // fixed by complex conjugation iff chi(-1)(-1)^j = 1
        int sign = chi.parity() * (eta.j() % 2 == 0 ? 1 : -1);
        return sign == 1 ? 1 : 0;
    }
    long q = v.prime();
    // eta restricted to G_v is trivial iff chi is unramified at v, j = 0 and
    // chi(Frob_v) = 1; q^j = 1 forces j = 0 since q >= 2.
    if (chi.modulus() % q == 0) return 0;  // ramified at v
    if (eta.j() != 0) return 0;
    return chi(q).is_one() ? 1 : 0;
}

int global_h0(const GaloisCharacter& eta) {
    return eta.is_trivial() ? 1 : 0;
}

int local_cond_dim(const Place& v, LocalConditionKind cond, const GaloisCharacter& eta) {
    if (v.is_infinity()) {
        // H^1(G_R, -) = 0 for odd p, so both admissible conditions vanish.
        if (cond == LocalConditionKind::zero || cond == LocalConditionKind::full) return 0;
        throw Error(ErrorCode::argument,
                    "only the zero and full conditions make sense at infinity");
    }
    bool at_p = v.prime() == eta.p();
    switch (cond) {
        case LocalConditionKind::zero:
            return 0;
        case LocalConditionKind::unramified:
            // dim H^1_unr(G_v, V) = dim H^0(G_v, V)
            return local_h0(v, eta);
        case LocalConditionKind::full: {
            // local Euler characteristic: h^1 = h^0 + h^2 (+ dim V at p),
            // with h^2 = h^0 of the dual twist by local duality
            int h0 = local_h0(v, eta);
            int h2 = local_h0(v, eta.dual_twist());
            return h0 + h2 + (at_p ? 1 : 0);
        }
        case LocalConditionKind::crystalline: {
            if (!at_p)
                throw Error(ErrorCode::argument, "crystalline condition only makes sense at p");
            // dim H^1_f = h^0 + number of negative Hodge-Tate weights;
            // omega_p^j has one negative weight iff j >= 1
            return local_h0(v, eta) + (eta.j() >= 1 ? 1 : 0);
        }
    }
    throw Error(ErrorCode::argument, "unreachable condition kind");
}

LocalConditionKind dual_condition(const Place&, LocalConditionKind cond) {
    switch (cond) {
        case LocalConditionKind::full: return LocalConditionKind::zero;
        case LocalConditionKind::zero: return LocalConditionKind::full;
        case LocalConditionKind::unramified: return LocalConditionKind::unramified;
        case LocalConditionKind::crystalline: return LocalConditionKind::crystalline;
    }
    throw Error(ErrorCode::argument, "unreachable condition kind");
}

DualTermResult global_vanishing_rule(const GaloisCharacter& eta,
                                     const std::map<Place, LocalConditionKind>& conditions) {
    bool full_at_finite = false;
    bool above_crystalline_at_p = false;
    for (const auto& [place, cond] : conditions) {
        if (place.is_infinity()) continue;
        if (cond == LocalConditionKind::full) {
            full_at_finite = true;
            if (place.prime() == eta.p()) above_crystalline_at_p = true;
        }
    }
    if (eta.j() == 0 && !full_at_finite) {
        // eta has finite order and every condition lies inside the
        // unramified line (crystalline of an unramified character included):
        // the Selmer group embeds in a class group tensored with Q_p.
        std::string reason = "finiteness of class numbers";
        if (eta.chi().modulus() == 1) {
            reason += " (class group of Q)";
        } else {
            reason += " (class group of the field cut out by chi; Soule is cited in this"
                      " situation although the dual character has finite order)";
        }
        return DualTermResult::known(0, reason);
    }
    if (eta.chi().modulus() == 1 && eta.j() >= 2 && eta.j() % 2 == 0 &&
        !above_crystalline_at_p) {
        return DualTermResult::known(0, "Soule (vanishing for omega_p^" +
                                            std::to_string(eta.j()) + ")");
    }
    return DualTermResult::unknown();
}

void SelmerProblem::validate() const {
    if (sigma.find(Place::finite(character.p())) == sigma.end())
        throw Error(ErrorCode::argument, "sigma must contain p");
    if (sigma.find(Place::infinity()) == sigma.end())
        throw Error(ErrorCode::argument, "sigma must contain the infinite place");
    for (auto [q, e] : factorize(character.chi().modulus())) {
        (void)e;
        if (sigma.find(Place::finite(q)) == sigma.end())
            throw Error(ErrorCode::argument,
                        "sigma must contain every prime dividing the conductor of chi");
    }
    for (const Place& v : sigma) {
        auto it = conditions.find(v);
        if (it == conditions.end())
            throw Error(ErrorCode::argument,
                        "no local condition given at the place " + v.name());
        // The unramified subspace at p is orthogonal to, but not the
        // orthogonal complement of, the dual unramified subspace (the local
        // Euler factor adds one dimension), so a problem carrying it has no
        // dual problem of the same shape. Crystalline coincides with
        // unramified at p for finite-order characters and is closed under
        // dualization.
        if (!v.is_infinity() && v.prime() == character.p() &&
            it->second == LocalConditionKind::unramified)
            throw Error(ErrorCode::argument,
                        "the unramified condition is not self-dual at p; use crystalline "
                        "(equal to unramified for finite-order characters), zero or full");
        // surface bad placements early
        local_cond_dim(v, it->second, character);
    }
    for (const auto& [v, cond] : conditions) {
        (void)cond;
        if (sigma.find(v) == sigma.end())
            throw Error(ErrorCode::argument,
                        "condition at " + v.name() + " outside sigma");
    }
}

SelmerProblem SelmerProblem::dual() const {
    SelmerProblem out{character.dual_twist(), sigma, {}};
    for (const auto& [v, cond] : conditions) out.conditions.emplace(v, dual_condition(v, cond));
    return out;
}

SelmerResult selmer_dimension(const SelmerProblem& problem, std::optional<int> assume_dual) {
    problem.validate();
    const GaloisCharacter& eta = problem.character;
    GaloisCharacter dual_eta = eta.dual_twist();
    SelmerProblem dual_problem = problem.dual();

    SelmerResult result;
    if (assume_dual) {
        result.dual_term = DualTermResult::assumed(*assume_dual);
    } else {
        result.dual_term = global_vanishing_rule(dual_eta, dual_problem.conditions);
    }

    std::string dual_note;
    switch (result.dual_term.kind) {
        case DualTermResult::Kind::known:
        case DualTermResult::Kind::assumed:
            dual_note = result.dual_term.reason;
            break;
        case DualTermResult::Kind::unknown:
            dual_note = "no vanishing rule applies";
            break;
    }
    result.ledger.push_back({"dual", result.dual_term.value, dual_note});

    int h0_v = global_h0(eta);
    result.ledger.push_back({"h0(Q,V)", h0_v, "dim H^0(G_Q, V)"});
    int h0_dual = global_h0(dual_eta);
    result.ledger.push_back({"-h0(Q,V*(1))", -h0_dual, "dim H^0(G_Q, V*(1)) enters negatively"});
    result.rest_sum = h0_v - h0_dual;

    for (const Place& v : problem.sigma) {
        LocalConditionKind cond = problem.conditions.at(v);
        int dim_l = local_cond_dim(v, cond, eta);
        int h0 = local_h0(v, eta);
        std::ostringstream why;
        why << condition_name(cond) << ": dim L_v = " << dim_l << ", h0 = " << h0;
        result.ledger.push_back({"local@" + v.name(), dim_l - h0, why.str()});
        result.rest_sum += dim_l - h0;
    }

    if (result.dual_term.kind == DualTermResult::Kind::unknown) {
        result.dimension = std::nullopt;
        result.symbolic = std::to_string(result.rest_sum) + " + (unknown dual term)";
    } else {
        int dim = result.dual_term.value + result.rest_sum;
        if (result.dual_term.kind == DualTermResult::Kind::known && dim < 0)
            throw Error(ErrorCode::argument,
                        "selmer dimension came out negative; inconsistent local conditions");
        result.dimension = dim;
        result.symbolic = std::to_string(dim);
    }
    return result;
}

}  // namespace eiscurve
