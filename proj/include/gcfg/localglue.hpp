#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcfg/errors.hpp"
#include "gcfg/group.hpp"

namespace gcfg {

/// Exact rational, always in reduced form with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den = 1);

    /// "n/d" or "n"; no floats.
    static std::optional<Rational> parse(const std::string& text);

    long long num() const { return num_; }
    long long den() const { return den_; }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend auto operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    long long num_;
    long long den_;
};

/// The inner half-width: a_j = a_i / 2, so the doubled interval fits.
Rational select_inner(const Rational& a_i);  // NonPositive when a_i <= 0

/// Wrap-around addition on [-a_j, a_j): plain sum, shifted by 2 a_j when it
/// leaves the interval.  Arguments must lie in the interval (OutOfDomain).
Rational oplus(const Rational& x, const Rational& y, const Rational& a_j);

struct GlueGroupReport {
    std::vector<Rational> grid;  // the points k/grid inside [-a_j, a_j)
    bool grid_closed = false;    // 2 a_j * grid integral: the grid is oplus-closed
    bool associativity = true;
    long long assoc_checked = 0;
    std::string assoc_witness;
    bool identity_ok = true;
    bool inverses_ok = true;
    bool commutative = true;
    bool range_ok = true;  // no oplus result left [-a_j, a_j)
    std::optional<FiniteGroupTable> table;  // built when the grid is closed
    bool pass = true;
};

/// Group axioms of oplus on the grid points k/grid_denominator, exact
/// arithmetic throughout.  Throws NonPositive / InvalidParams on bad
/// parameters.
GlueGroupReport verify_group(const Rational& a_j, long long grid_denominator);

struct EmbedReport {
    long long pairs_checked = 0;
    bool pass = true;
    std::string witness;
};

/// On every grid pair with |x+y| < a_j the wrapped sum is the plain sum:
/// the partial addition of the chunk embeds unchanged.
EmbedReport verify_embedding(const Rational& a_j, long long grid_denominator);

} // namespace gcfg
