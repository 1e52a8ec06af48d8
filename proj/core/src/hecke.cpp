#include "eiscurve/hecke.hpp"

#include "eiscurve/error.hpp"

#include <numeric>

namespace eiscurve {

std::string HeckeDescriptor::name() const {
    const char* k = kind == HeckeKind::T ? "T" : kind == HeckeKind::U ? "U" : "V";
    return std::string(k) + ":" + std::to_string(parameter);
}

HeckeDescriptor descriptor_for(const std::string& op, const QExpansion& f) {
    auto colon = op.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= op.size())
        throw Error(ErrorCode::argument, "hecke operator must look like T:7, U:5 or V:3");
    std::string kind_str = op.substr(0, colon);
    HeckeKind kind;
    if (kind_str == "T") kind = HeckeKind::T;
    else if (kind_str == "U") kind = HeckeKind::U;
    else if (kind_str == "V") kind = HeckeKind::V;
    else throw Error(ErrorCode::argument, "unknown hecke operator kind \"" + kind_str + "\"");
    long parameter;
    try {
        std::size_t used = 0;
        parameter = std::stol(op.substr(colon + 1), &used);
        if (used != op.size() - colon - 1) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
        throw Error(ErrorCode::argument, "malformed hecke operator parameter in \"" + op + "\"");
    }
    return HeckeDescriptor{kind, parameter, f.weight(), f.chi() * f.psi()};
}

QExpansion hecke_apply(const HeckeDescriptor& op, const QExpansion& f) {
    long m = op.parameter;
    switch (op.kind) {
        case HeckeKind::U: {
            if (m < 2) throw Error(ErrorCode::argument, "U(m) requires m >= 2");
            long out_prec = f.prec() / m;
            if (out_prec < 2)
                throw Error(ErrorCode::precision,
                            "U(" + std::to_string(m) + "): output precision below 2");
            TruncatedSeries<CyclotomicNumber> out(out_prec);
            for (long n = 0; n < out_prec; ++n) out.set(n, f.coefficient(m * n));
            return f.with_series(std::move(out), f.level_hint());
        }
        case HeckeKind::V: {
            if (m < 2) throw Error(ErrorCode::argument, "V(t) requires t >= 2");
            TruncatedSeries<CyclotomicNumber> out(f.prec());
            out.set(0, f.coefficient(0));
            for (long n = m; n < f.prec(); n += m) out.set(n, f.coefficient(n / m));
            return f.with_series(std::move(out), f.level_hint() * m);
        }
        case HeckeKind::T: {
            if (m < 2) throw Error(ErrorCode::argument, "T(l) requires l >= 2");
            if (std::gcd(m, f.level_hint()) != 1)
                throw Error(ErrorCode::argument,
                            "T(" + std::to_string(m) + ") requires l coprime to the level");
            long out_prec = f.prec() / m;
            if (out_prec < 2)
                throw Error(ErrorCode::precision,
                            "T(" + std::to_string(m) + "): output precision below 2");
            CyclotomicNumber eps = op.nebentypus(m);
            CyclotomicNumber scale =
                eps * CyclotomicNumber(Rational(pow_integer(Integer(m), op.weight - 1)));
            TruncatedSeries<CyclotomicNumber> out(out_prec);
            for (long n = 0; n < out_prec; ++n) {
                CyclotomicNumber b = f.coefficient(m * n);
                if (n % m == 0) b += scale * f.coefficient(n / m);
                out.set(n, std::move(b));
            }
            return f.with_series(std::move(out), f.level_hint());
        }
    }
    throw Error(ErrorCode::argument, "unreachable hecke kind");
}

std::optional<CyclotomicNumber> eigencheck(const HeckeDescriptor& op, const QExpansion& f) {
    QExpansion g = hecke_apply(op, f);
    long overlap = std::min(f.prec(), g.prec());
    long pivot = -1;
    for (long n = 0; n < overlap; ++n) {
        if (!f.coefficient(n).is_zero()) {
            pivot = n;
            break;
        }
    }
    if (pivot < 0)
        throw Error(ErrorCode::degenerate, "eigencheck: series vanishes on the checkable range");
    CyclotomicNumber lambda = g.coefficient(pivot) / f.coefficient(pivot);
    for (long n = 0; n < overlap; ++n) {
        if (g.coefficient(n) != lambda * f.coefficient(n)) return std::nullopt;
    }
    return lambda;
}

void EigenSystem::validate() const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            if (entries[i].first == entries[j].first)
                throw Error(ErrorCode::argument,
                            "eigensystem: duplicate descriptor " + entries[i].first.name());
}

EigenSystem EigenSystem::critical_ordinary_e2(long p, long ell, long t_bound) {
    EigenSystem sys;
    sys.t_prime_bound = t_bound;
    DirichletCharacter triv = DirichletCharacter::trivial();
    sys.entries.emplace_back(HeckeDescriptor{HeckeKind::U, p, 2, triv},
                             CyclotomicNumber(Rational(p)));
    sys.entries.emplace_back(HeckeDescriptor{HeckeKind::U, ell, 2, triv},
                             CyclotomicNumber(Rational(1)));
    for (long l : primes_upto(t_bound)) {
        if (l == p || l == ell) continue;
        sys.entries.emplace_back(HeckeDescriptor{HeckeKind::T, l, 2, triv},
                                 CyclotomicNumber(Rational(1 + l)));
    }
    sys.validate();
    return sys;
}

EigenReport eigensystem_verify(const QExpansion& f, const EigenSystem& sys) {
    sys.validate();
    EigenReport report;
    for (const auto& [op, expected] : sys.entries) {
        EigenReportEntry entry{op, expected, std::nullopt, false};
        try {
            entry.found = eigencheck(op, f);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::precision)
                throw Error(ErrorCode::precision, op.name() + ": " + e.what());
            throw;
        }
        entry.pass = entry.found.has_value() && *entry.found == expected;
        report.all_pass = report.all_pass && entry.pass;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace eiscurve
