#include "eiscurve/dirichlet.hpp"

#include "eiscurve/error.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace eiscurve {

namespace {

long mod_pow(long base, long exp, long mod) {
    long result = 1 % mod;
    long b = base % mod;
    if (b < 0) b += mod;
    while (exp > 0) {
        if (exp & 1) result = static_cast<long>((static_cast<Integer>(result) * b) % mod);
        b = static_cast<long>((static_cast<Integer>(b) * b) % mod);
        exp >>= 1;
    }
    return result;
}

long element_order(long g, long modulus, long group_order) {
    long order = group_order;
    for (long d : divisors(group_order))
        if (mod_pow(g, d, modulus) == 1) {
            order = d;
            break;
        }
    return order;
}

// least positive primitive root modulo an odd prime power
long least_primitive_root(long q) {
    long phi = euler_phi(q);
    for (long g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1) continue;
        if (element_order(g, q, phi) == phi) return g;
    }
    throw Error(ErrorCode::argument, "no primitive root found");
}

// CRT lift: x = r mod q, x = 1 mod (n/q)
long crt_lift(long r, long q, long n) {
    long rest = n / q;
    if (rest == 1) return r % n;
    Integer inv_q = mod_inverse(q, rest);
    // x = r + q * t with t = (1 - r)/q mod rest
    Integer t = ((1 - Integer(r)) % rest + rest) % rest;
    t = (t * inv_q) % rest;
    Integer x = (Integer(r) + Integer(q) * t) % n;
    if (x < 0) x += n;
    return static_cast<long>(x);
}

UnitGroupStructure build_unit_group(long n) {
    UnitGroupStructure s;
    s.modulus = n;
    for (auto [p, e] : factorize(n)) {
        long q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        if (p == 2) {
            if (e == 2) {
                s.generators.push_back(crt_lift(3, q, n));
                s.generator_orders.push_back(2);
            } else if (e >= 3) {
                s.generators.push_back(crt_lift(q - 1, q, n));
                s.generator_orders.push_back(2);
                s.generators.push_back(crt_lift(5, q, n));
                s.generator_orders.push_back(q / 4);
            }
            // 2^1 contributes a trivial group
        } else {
            s.generators.push_back(crt_lift(least_primitive_root(q), q, n));
            s.generator_orders.push_back(euler_phi(q));
        }
    }
    // exhaustive discrete-log table, one entry per unit
    std::vector<long> exps(s.generators.size(), 0);
    while (true) {
        Integer v = 1;
        for (std::size_t i = 0; i < s.generators.size(); ++i)
            v = (v * mod_pow(s.generators[i], exps[i], n)) % n;
        s.dlog.emplace(static_cast<long>(v), exps);
        std::size_t i = exps.size();
        while (i > 0) {
            --i;
            if (++exps[i] < s.generator_orders[i]) break;
            exps[i] = 0;
            if (i == 0) {
                if (s.dlog.size() != static_cast<std::size_t>(euler_phi(n)))
                    throw Error(ErrorCode::argument, "unit group enumeration mismatch");
                return s;
            }
        }
        if (s.generators.empty()) {
            s.dlog.emplace(1 % n, std::vector<long>{});
            return s;
        }
    }
}

std::mutex unit_group_mutex;
std::map<long, UnitGroupStructure> unit_group_cache;

}  // namespace

const UnitGroupStructure& unit_group(long modulus) {
    if (modulus < 1) throw Error(ErrorCode::argument, "unit_group: modulus must be >= 1");
    {
        std::lock_guard<std::mutex> lock(unit_group_mutex);
        auto it = unit_group_cache.find(modulus);
        if (it != unit_group_cache.end()) return it->second;
    }
    UnitGroupStructure s = build_unit_group(modulus);
    std::lock_guard<std::mutex> lock(unit_group_mutex);
    return unit_group_cache.emplace(modulus, std::move(s)).first->second;
}

DirichletCharacter::DirichletCharacter(long modulus, std::vector<long> exponents)
    : modulus_(modulus), exponents_(std::move(exponents)) {
    const UnitGroupStructure& g = unit_group(modulus);
    if (exponents_.size() != g.generators.size())
        throw Error(ErrorCode::argument, "character exponent vector has wrong length");
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] < 0 || exponents_[i] >= g.generator_orders[i])
            throw Error(ErrorCode::argument, "character exponent out of range");
    }
    order_ = 1;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        long d = g.generator_orders[i];
        long value_order = d / std::gcd(d, exponents_[i]);
        order_ = std::lcm(order_, value_order);
    }
}

DirichletCharacter DirichletCharacter::trivial(long modulus) {
    const UnitGroupStructure& g = unit_group(modulus);
    return DirichletCharacter(modulus, std::vector<long>(g.generators.size(), 0));
}

std::optional<long> DirichletCharacter::value_exponent(long n) const {
    long r = n % modulus_;
    if (r < 0) r += modulus_;
    const UnitGroupStructure& g = unit_group(modulus_);
    auto it = g.dlog.find(r);
    if (it == g.dlog.end()) return std::nullopt;
    // chi(n) = prod zeta(d_i)^(e_i x_i) = zeta(O)^(sum (O/d_i) e_i x_i)
    // with O the group exponent; rescale to the character's own order.
    long big = 1;
    for (long d : g.generator_orders) big = std::lcm(big, d);
    Integer total = 0;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        total += Integer(big / g.generator_orders[i]) * exponents_[i] * it->second[i];
    }
    total %= big;
    // chi(n) is an order_-th root of unity, so total*order_ is divisible by big
    Integer k = (total * order_) / big;
    return static_cast<long>(k % order_);
}

CyclotomicNumber DirichletCharacter::operator()(long n) const {
    auto k = value_exponent(n);
    if (!k) return CyclotomicNumber::zero();
    return CyclotomicNumber::root_of_unity(order_, *k);
}

CyclotomicNumber DirichletCharacter::operator()(const Integer& n) const {
    Integer r = n % modulus_;
    if (r < 0) r += modulus_;
    return (*this)(static_cast<long>(r));
}

bool DirichletCharacter::is_principal() const {
    for (long e : exponents_)
        if (e != 0) return false;
    return true;
}

long DirichletCharacter::conductor() const {
    for (long c : divisors(modulus_)) {
        // chi factors through (Z/c)^* iff chi(a) = 1 for every unit a = 1 mod c
        bool factors = true;
        for (long a = 1; a <= modulus_ && factors; a += c) {
            if (std::gcd(a, modulus_) != 1) continue;
            auto k = value_exponent(a);
            if (k && *k != 0) factors = false;
        }
        if (factors) return c;
    }
    return modulus_;
}

namespace {

// smallest lift of u modulo c that is a unit modulo n (c divides n)
long unit_lift(long u, long c, long n) {
    for (long x = u % c; x <= n + c; x += c) {
        if (x >= 1 && std::gcd(x, n) == 1) return x % n == 0 ? n : x;
    }
    throw Error(ErrorCode::argument, "unit_lift failed");
}

}  // namespace

DirichletCharacter DirichletCharacter::primitive() const {
    long c = conductor();
    if (c == modulus_) return *this;
    const UnitGroupStructure& g = unit_group(c);
    std::vector<long> exps;
    exps.reserve(g.generators.size());
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        long lift = unit_lift(g.generators[i], c, modulus_);
        auto k = value_exponent(lift);
        if (!k) throw Error(ErrorCode::argument, "primitive: lift is not a unit");
        // chi(lift) = zeta_order^k must be a d_i-th root of unity
        long d = g.generator_orders[i];
        Integer e = (Integer(*k) * d) % order_;
        if (e != 0) throw Error(ErrorCode::argument, "primitive: value order does not divide generator order");
        exps.push_back(static_cast<long>((Integer(*k) * d / order_) % d));
    }
    return DirichletCharacter(c, std::move(exps));
}

DirichletCharacter DirichletCharacter::induced_to(long new_modulus) const {
    if (new_modulus % modulus_ != 0)
        throw Error(ErrorCode::argument, "induced_to: modulus must be a multiple");
    if (new_modulus == modulus_) return *this;
    const UnitGroupStructure& g = unit_group(new_modulus);
    std::vector<long> exps;
    exps.reserve(g.generators.size());
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        auto k = value_exponent(g.generators[i]);
        if (!k) throw Error(ErrorCode::argument, "induced_to: generator not a unit at lower level");
        long d = g.generator_orders[i];
        Integer e = (Integer(*k) * d) % order_;
        if (e != 0) throw Error(ErrorCode::argument, "induced_to: incompatible value order");
        exps.push_back(static_cast<long>((Integer(*k) * d / order_) % d));
    }
    return DirichletCharacter(new_modulus, std::move(exps));
}

int DirichletCharacter::parity() const {
    if (modulus_ <= 2) return 1;
    auto k = value_exponent(modulus_ - 1);
    if (!k) throw Error(ErrorCode::argument, "parity: -1 is not a unit");
    return *k == 0 ? 1 : -1;
}

DirichletCharacter DirichletCharacter::inverse() const {
    const UnitGroupStructure& g = unit_group(modulus_);
    std::vector<long> exps(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        exps[i] = exponents_[i] == 0 ? 0 : g.generator_orders[i] - exponents_[i];
    return DirichletCharacter(modulus_, std::move(exps));
}

DirichletCharacter DirichletCharacter::power(long e) const {
    const UnitGroupStructure& g = unit_group(modulus_);
    std::vector<long> exps(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        long d = g.generator_orders[i];
        long v = static_cast<long>(((Integer(exponents_[i]) * e) % d + d) % d);
        exps[i] = v;
    }
    return DirichletCharacter(modulus_, std::move(exps));
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
    long m = std::lcm(a.modulus(), b.modulus());
    DirichletCharacter ea = a.induced_to(m), eb = b.induced_to(m);
    const UnitGroupStructure& g = unit_group(m);
    std::vector<long> exps(ea.exponents_.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = (ea.exponents_[i] + eb.exponents_[i]) % g.generator_orders[i];
    return DirichletCharacter(m, std::move(exps));
}

std::vector<DirichletCharacter> characters_mod(long modulus) {
    if (modulus < 1) throw Error(ErrorCode::argument, "characters_mod: modulus must be >= 1");
    const UnitGroupStructure& g = unit_group(modulus);
    std::vector<DirichletCharacter> out;
    out.reserve(euler_phi(modulus));
    std::vector<long> exps(g.generators.size(), 0);
    while (true) {
        out.emplace_back(modulus, exps);
        // lexicographic increment, first exponent most significant
        std::size_t i = exps.size();
        bool carry = true;
        while (i > 0 && carry) {
            --i;
            if (++exps[i] < g.generator_orders[i]) carry = false;
            else exps[i] = 0;
        }
        if (carry) break;
    }
    return out;
}

}  // namespace eiscurve
