#pragma once

#include "eiscurve/cyclotomic.hpp"
#include "eiscurve/numtheory.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace eiscurve {

// Structure of (Z/NZ)^* on a fixed canonical generator set: for odd prime
// powers the least positive primitive root, for 4 the class of -1, for 2^a
// with a >= 3 the pair {-1, 5}, composed via CRT (2-part first, then odd
// primes in ascending order). The discrete-log table maps each unit to its
// exponent vector with respect to the generators.
struct UnitGroupStructure {
    long modulus = 1;
    std::vector<long> generators;       // lifts modulo N
    std::vector<long> generator_orders; // d_i, the order of generator i
    std::unordered_map<long, std::vector<long>> dlog;
};

const UnitGroupStructure& unit_group(long modulus);

// Dirichlet character modulo N, defined by one exponent per canonical
// generator: generator_i maps to zeta(d_i)^(e_i). Zero on non-units.
class DirichletCharacter {
  public:
    DirichletCharacter(long modulus, std::vector<long> exponents);

    static DirichletCharacter trivial(long modulus = 1);

    long modulus() const { return modulus_; }
    const std::vector<long>& exponents() const { return exponents_; }
    long order() const { return order_; }

    // Exponent k with chi(n) = zeta_order^k, or nullopt on non-units.
    std::optional<long> value_exponent(long n) const;
    CyclotomicNumber operator()(long n) const;
    CyclotomicNumber operator()(const Integer& n) const;

    // All exponents zero, i.e. chi(n) = 1 on every unit mod N.
    bool is_principal() const;

    long conductor() const;
    bool is_primitive() const { return conductor() == modulus_; }
    // The primitive character modulo conductor() inducing this one.
    DirichletCharacter primitive() const;
    // The character modulo new_modulus induced by this one; modulus() must
    // divide new_modulus.
    DirichletCharacter induced_to(long new_modulus) const;

    // chi(-1), +1 or -1.
    int parity() const;

    DirichletCharacter inverse() const;
    DirichletCharacter power(long e) const;
    // Product character modulo lcm of the two moduli.
    friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.exponents_ == b.exponents_;
    }
    friend bool operator!=(const DirichletCharacter& a, const DirichletCharacter& b) {
        return !(a == b);
    }

  private:
    long modulus_;
    std::vector<long> exponents_;  // e_i in [0, d_i)
    long order_;
};

// The phi(N) characters modulo N, ordered lexicographically by exponent
// vector (index 0 is the principal character).
std::vector<DirichletCharacter> characters_mod(long modulus);

}  // namespace eiscurve
