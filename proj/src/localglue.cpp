#include "gcfg/localglue.hpp"

#include <numeric>

namespace gcfg {

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw InvalidParams("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::optional<Rational> Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    auto is_int = [](const std::string& s) {
        size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        return s.find_first_not_of("0123456789", i) == std::string::npos;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(std::stoll(text));
        }
        std::string n = text.substr(0, slash), d = text.substr(slash + 1);
        if (!is_int(n) || !is_int(d)) return std::nullopt;
        long long dv = std::stoll(d);
        if (dv == 0) return std::nullopt;
        return Rational(std::stoll(n), dv);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational select_inner(const Rational& a_i) {
    if (a_i <= Rational(0)) throw NonPositive("the half-width must be positive");
    return a_i * Rational(1, 2);
}

Rational oplus(const Rational& x, const Rational& y, const Rational& a_j) {
    if (a_j <= Rational(0)) throw NonPositive("the half-width must be positive");
    if (x < -a_j || x >= a_j) throw OutOfDomain(x.str() + " is outside [-a_j, a_j)");
    if (y < -a_j || y >= a_j) throw OutOfDomain(y.str() + " is outside [-a_j, a_j)");
    Rational s = x + y;
    Rational period = a_j + a_j;
    if (s >= a_j) return s - period;
    if (s < -a_j) return s + period;
    return s;
}

namespace {

std::vector<Rational> grid_points(const Rational& a_j, long long grid) {
    if (a_j <= Rational(0)) throw NonPositive("the half-width must be positive");
    if (grid < 2) throw InvalidParams("grid denominator must be at least 2");
    // k/grid in [-a_j, a_j): ceil(-a_j*grid) <= k < a_j*grid
    const long long na = a_j.num(), da = a_j.den();
    auto floor_div = [](long long a, long long b) {
        long long q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    };
    long long lo = -floor_div(na * grid, da);        // ceil(-x) = -floor(x)
    long long hi = floor_div(na * grid, da);
    bool exact = (na * grid) % da == 0;
    std::vector<Rational> pts;
    for (long long k = lo; k < hi || (!exact && k == hi); ++k) {
        Rational r(k, grid);
        if (r >= -a_j && r < a_j) pts.push_back(r);
    }
    return pts;
}

} // namespace

GlueGroupReport verify_group(const Rational& a_j, long long grid_denominator) {
    GlueGroupReport rep;
    rep.grid = grid_points(a_j, grid_denominator);
    const auto& pts = rep.grid;
    const size_t n = pts.size();
    Rational twice = a_j + a_j;
    rep.grid_closed = (twice.num() * grid_denominator) % twice.den() == 0;

    auto in_range = [&](const Rational& r) { return r >= -a_j && r < a_j; };

    for (size_t i = 0; i < n && rep.associativity; ++i)
        for (size_t j = 0; j < n && rep.associativity; ++j)
            for (size_t k = 0; k < n; ++k) {
                ++rep.assoc_checked;
                Rational ij = oplus(pts[i], pts[j], a_j);
                Rational jk = oplus(pts[j], pts[k], a_j);
                if (!in_range(ij) || !in_range(jk)) rep.range_ok = false;
                if (oplus(ij, pts[k], a_j) != oplus(pts[i], jk, a_j)) {
                    rep.associativity = false;
                    rep.assoc_witness = "(" + pts[i].str() + "," + pts[j].str() + "," +
                                        pts[k].str() + ")";
                    break;
                }
            }

    for (size_t i = 0; i < n; ++i) {
        if (oplus(Rational(0), pts[i], a_j) != pts[i] ||
            oplus(pts[i], Rational(0), a_j) != pts[i])
            rep.identity_ok = false;
        // -a_j is its own inverse; everything else negates.
        Rational inv = (pts[i] == -a_j) ? pts[i] : -pts[i];
        if (!in_range(inv) || oplus(pts[i], inv, a_j) != Rational(0) ||
            oplus(inv, pts[i], a_j) != Rational(0))
            rep.inverses_ok = false;
    }
    for (size_t i = 0; i < n && rep.commutative; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Rational ij = oplus(pts[i], pts[j], a_j);
            if (!in_range(ij)) rep.range_ok = false;
            if (ij != oplus(pts[j], pts[i], a_j)) {
                rep.commutative = false;
                break;
            }
        }

    if (rep.grid_closed && n > 0) {
        FiniteGroupTable table;
        for (const auto& p : pts) table.elements.push_back(p.str());
        auto find = [&](const Rational& r) {
            for (size_t i = 0; i < n; ++i)
                if (pts[i] == r) return static_cast<int>(i);
            return -1;
        };
        table.mul.assign(n, std::vector<int>(n, -1));
        bool closed = true;
        for (size_t i = 0; i < n && closed; ++i)
            for (size_t j = 0; j < n; ++j) {
                int idx = find(oplus(pts[i], pts[j], a_j));
                if (idx < 0) {
                    closed = false;
                    break;
                }
                table.mul[i][j] = idx;
            }
        if (closed) {
            table.identity = find(Rational(0));
            table.inverse.assign(n, -1);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (table.mul[i][j] == table.identity) table.inverse[i] = static_cast<int>(j);
            rep.table = std::move(table);
        } else {
            rep.grid_closed = false;
        }
    }

    rep.pass = rep.associativity && rep.identity_ok && rep.inverses_ok && rep.range_ok;
    return rep;
}

EmbedReport verify_embedding(const Rational& a_j, long long grid_denominator) {
    EmbedReport rep;
    auto pts = grid_points(a_j, grid_denominator);
    for (size_t i = 0; i < pts.size() && rep.pass; ++i) {
        for (size_t j = 0; j < pts.size(); ++j) {
            Rational s = pts[i] + pts[j];
            if (s < a_j && -s < a_j) {  // |x+y| < a_j
                ++rep.pairs_checked;
                if (oplus(pts[i], pts[j], a_j) != s) {
                    rep.pass = false;
                    rep.witness = "(" + pts[i].str() + "," + pts[j].str() + ")";
                    return rep;
                }
            }
        }
    }
    return rep;
}

} // namespace gcfg
