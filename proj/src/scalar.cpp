#include "qpoints/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>
#include <vector>

namespace qpoints {

Rational frac(const Rational& r) {
    std::int64_t num = r.numerator();
    std::int64_t den = r.denominator();  // boost keeps den > 0
    std::int64_t m = num % den;
    if (m < 0) m += den;
    return Rational(m, den);
}

namespace {

bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    if (v % 3 == 0) return v == 3;
    for (std::uint64_t d = 5; d <= v / d; d += 6) {
        if (v % d == 0 || v % (d + 2) == 0) return false;
    }
    return true;
}

// Trial division; magnitudes here come from literals, so this is plenty.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t v) {
    std::vector<std::pair<std::uint64_t, int>> factors;
    for (std::uint64_t d : {std::uint64_t{2}, std::uint64_t{3}}) {
        int m = 0;
        while (v % d == 0) { v /= d; ++m; }
        if (m) factors.emplace_back(d, m);
    }
    for (std::uint64_t d = 5; d <= v / d;) {
        int m = 0;
        while (v % d == 0) { v /= d; ++m; }
        if (m) factors.emplace_back(d, m);
        d += 2;
        m = 0;
        while (v % d == 0) { v /= d; ++m; }
        if (m) factors.emplace_back(d, m);
        d += 4;
    }
    if (v > 1) factors.emplace_back(v, 1);
    return factors;
}

}  // namespace

Generator Generator::symbol(std::string name) {
    if (!is_valid_symbol_name(name))
        throw Error("invalid symbol name: '" + name + "'");
    Generator g;
    g.is_symbol_ = true;
    g.name_ = std::move(name);
    return g;
}

Generator Generator::prime(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw Error("not a prime: " + std::to_string(p));
    Generator g;
    g.is_symbol_ = false;
    g.prime_ = p;
    return g;
}

bool is_valid_symbol_name(const std::string& name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    // "i" is the fourth root of unity and "zeta" the root-of-unity constructor.
    return name != "i" && name != "zeta";
}

UnitMonomial UnitMonomial::symbol(const std::string& name) {
    return generator_power(Generator::symbol(name), Rational(1));
}

UnitMonomial UnitMonomial::root_of_unity(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("root of unity with zero order");
    UnitMonomial x;
    x.phase_ = frac(Rational(num, den));
    return x;
}

UnitMonomial UnitMonomial::generator_power(const Generator& g, const Rational& e) {
    UnitMonomial x;
    if (e != Rational(0)) x.exponents_.emplace(g, e);
    return x;
}

UnitMonomial UnitMonomial::from_rational(std::int64_t p, std::int64_t q) {
    if (p == 0 || q == 0) throw ZeroScalarError();
    UnitMonomial x;
    if ((p < 0) != (q < 0)) x.phase_ = Rational(1, 2);
    auto pu = static_cast<std::uint64_t>(p < 0 ? -(p + 1) + std::uint64_t{1} : p);
    auto qu = static_cast<std::uint64_t>(q < 0 ? -(q + 1) + std::uint64_t{1} : q);
    for (const auto& [prime, m] : factorize(pu))
        x.exponents_[Generator::prime(prime)] += m;
    for (const auto& [prime, m] : factorize(qu))
        x.exponents_[Generator::prime(prime)] -= m;
    for (auto it = x.exponents_.begin(); it != x.exponents_.end();) {
        it = (it->second == Rational(0)) ? x.exponents_.erase(it) : std::next(it);
    }
    return x;
}

UnitMonomial mul(const UnitMonomial& x, const UnitMonomial& y) {
    UnitMonomial r = x;
    r.phase_ = frac(r.phase_ + y.phase_);
    for (const auto& [g, e] : y.exponents_) {
        auto it = r.exponents_.find(g);
        if (it == r.exponents_.end()) {
            r.exponents_.emplace(g, e);
        } else {
            it->second += e;
            if (it->second == Rational(0)) r.exponents_.erase(it);
        }
    }
    return r;
}

UnitMonomial inv(const UnitMonomial& x) {
    UnitMonomial r;
    r.phase_ = frac(-x.phase_);
    for (const auto& [g, e] : x.exponents_) r.exponents_.emplace(g, -e);
    return r;
}

UnitMonomial pow(const UnitMonomial& x, std::int64_t k) {
    UnitMonomial r;
    if (k == 0) return r;
    r.phase_ = frac(x.phase_ * k);
    for (const auto& [g, e] : x.exponents_) r.exponents_.emplace(g, e * k);
    return r;
}

bool is_one(const UnitMonomial& x) {
    return x.phase() == Rational(0) && x.exponents().empty();
}

}  // namespace qpoints
