#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <string>

#include "qpoints/errors.hpp"

namespace qpoints {

using Rational = boost::rational<std::int64_t>;

/// Fractional part of r, normalized into [0, 1).
Rational frac(const Rational& r);

/// A multiplicative generator: either a named formal symbol or a rational prime.
///
/// The total order puts all symbols (lexicographic) before all primes
/// (ascending); it is the order in which factors are serialized.
class Generator {
public:
    static Generator symbol(std::string name);
    static Generator prime(std::uint64_t p);

    bool is_symbol() const { return is_symbol_; }
    bool is_prime() const { return !is_symbol_; }
    const std::string& name() const { return name_; }
    std::uint64_t prime_value() const { return prime_; }

    bool operator==(const Generator& o) const {
        return is_symbol_ == o.is_symbol_ && name_ == o.name_ && prime_ == o.prime_;
    }
    bool operator!=(const Generator& o) const { return !(*this == o); }
    bool operator<(const Generator& o) const {
        if (is_symbol_ != o.is_symbol_) return is_symbol_;  // symbols first
        return is_symbol_ ? name_ < o.name_ : prime_ < o.prime_;
    }

private:
    Generator() = default;
    bool is_symbol_ = true;
    std::string name_;
    std::uint64_t prime_ = 0;
};

/// An exact element of the subgroup of C* generated by roots of unity,
/// formal symbols and rational primes:
///
///     e^(2*pi*i*phase) * prod_g g^(exponents[g])
///
/// with phase a rational in [0, 1) and all exponents non-zero rationals.
/// This form is canonical: two UnitMonomials denote the same complex number
/// exactly when they compare equal, so equality (and hence "is this 1?") is
/// decidable. Sums are not representable; numbers outside the subgroup must
/// be introduced as fresh symbols.
class UnitMonomial {
public:
    using ExponentMap = std::map<Generator, Rational>;

    /// The identity element 1.
    UnitMonomial() = default;

    /// A named symbol, exponent one. Valid names are identifiers other than
    /// the reserved "i" and "zeta".
    static UnitMonomial symbol(const std::string& name);

    /// e^(2*pi*i * num/den); den must be non-zero.
    static UnitMonomial root_of_unity(std::int64_t num, std::int64_t den);

    /// The rational number p/q, factored into a sign phase and prime powers.
    /// Throws ZeroScalarError when p or q is zero.
    static UnitMonomial from_rational(std::int64_t p, std::int64_t q);

    /// g^e; drops to 1 when e = 0.
    static UnitMonomial generator_power(const Generator& g, const Rational& e);

    const Rational& phase() const { return phase_; }
    const ExponentMap& exponents() const { return exponents_; }

    bool operator==(const UnitMonomial& o) const {
        return phase_ == o.phase_ && exponents_ == o.exponents_;
    }
    bool operator!=(const UnitMonomial& o) const { return !(*this == o); }

private:
    friend UnitMonomial mul(const UnitMonomial&, const UnitMonomial&);
    friend UnitMonomial inv(const UnitMonomial&);
    friend UnitMonomial pow(const UnitMonomial&, std::int64_t);

    Rational phase_{0};
    ExponentMap exponents_;
};

UnitMonomial mul(const UnitMonomial& x, const UnitMonomial& y);
UnitMonomial inv(const UnitMonomial& x);
UnitMonomial pow(const UnitMonomial& x, std::int64_t k);
bool is_one(const UnitMonomial& x);

inline UnitMonomial operator*(const UnitMonomial& x, const UnitMonomial& y) { return mul(x, y); }

/// True if name is a grammar identifier usable as a symbol (reserved words excluded).
bool is_valid_symbol_name(const std::string& name);

}  // namespace qpoints
