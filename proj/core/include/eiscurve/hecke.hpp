#pragma once

#include "eiscurve/qexpansion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eiscurve {

enum class HeckeKind { T, U, V };

// A Hecke operator acting on bare q-series. Weight and nebentypus enter the
// T(l) formula and are supplied by the caller rather than read off the level
// hint; the nebentypus is the product character chi*psi of the form the
// operator is meant to act on.
struct HeckeDescriptor {
    HeckeKind kind = HeckeKind::T;
    long parameter = 2;
    long weight = 2;
    DirichletCharacter nebentypus = DirichletCharacter::trivial();

    std::string name() const;  // "T:7", "U:5", "V:3"

    friend bool operator==(const HeckeDescriptor& a, const HeckeDescriptor& b) {
        return a.kind == b.kind && a.parameter == b.parameter && a.weight == b.weight &&
               a.nebentypus == b.nebentypus;
    }
};

// Builds a descriptor for f from "T:7" / "U:5" / "V:3" notation, taking
// weight and nebentypus from the form's metadata.
HeckeDescriptor descriptor_for(const std::string& op, const QExpansion& f);

// U(m): b_n = a_{mn}, precision floor(prec/m).
// V(t): b_n = a_{n/t} when t | n else 0, precision unchanged, level times t.
// T(l): b_n = a_{ln} + eps(l) l^(k-1) a_{n/l}, precision floor(prec/l);
//       l must be coprime to the level hint.
QExpansion hecke_apply(const HeckeDescriptor& op, const QExpansion& f);

// The eigenvalue lambda with hecke_apply(op, f) = lambda * f coefficientwise
// on the overlapping precision range, pivoting on the first nonzero
// coefficient; nullopt when f is not an eigenvector.
std::optional<CyclotomicNumber> eigencheck(const HeckeDescriptor& op, const QExpansion& f);

// A list of (operator, expected eigenvalue) pairs. A nonzero t_prime_bound
// records that T-entries for all primes up to the bound were generated.
struct EigenSystem {
    std::vector<std::pair<HeckeDescriptor, CyclotomicNumber>> entries;
    long t_prime_bound = 0;

    void validate() const;  // descriptors pairwise distinct

    // The weight-2 system {U(p) = p, U(ell) = 1, T(l') = 1 + l' for primes
    // l' <= t_bound, l' not in {p, ell}}.
    static EigenSystem critical_ordinary_e2(long p, long ell, long t_bound);
};

struct EigenReportEntry {
    HeckeDescriptor op;
    CyclotomicNumber expected;
    std::optional<CyclotomicNumber> found;
    bool pass = false;
};

struct EigenReport {
    std::vector<EigenReportEntry> entries;
    bool all_pass = true;
};

EigenReport eigensystem_verify(const QExpansion& f, const EigenSystem& sys);

}  // namespace eiscurve
