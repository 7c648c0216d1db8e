#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcfg/errors.hpp"

namespace gcfg {

/// A vector over F_p, entries reduced to [0, p).
using FpVector = std::vector<int>;

/// Finite-field linear matroid: named points, each a tuple of vectors in
/// F_p^ambient.  Definable closure is linear span, so dimension over a base
/// is a rank difference and all independence questions are exact.
class LinearMatroid {
public:
    LinearMatroid(int p, int ambient);

    /// Binds a label to a tuple of vectors.  Throws InvalidVector on a
    /// length/range mismatch, InvalidParams on a duplicate label.
    void add_point(const std::string& label, std::vector<FpVector> vectors);

    int p() const { return p_; }
    int ambient() const { return ambient_; }
    bool has_point(const std::string& label) const;
    const std::map<std::string, std::vector<FpVector>>& points() const { return points_; }

    /// Rank of the span of the given vectors (Gaussian elimination mod p).
    int rank(std::vector<FpVector> vectors) const;

    /// dim(tuple / base) = rank(base ∪ tuple) − rank(base).
    int dim_over(const std::vector<std::string>& tuple,
                 const std::vector<std::string>& base) const;
    int dim_over(const std::string& label, const std::vector<std::string>& base) const;

    /// Independence of A from C over base: dim(A/base ∪ C) = dim(A/base).
    bool independent(const std::vector<std::string>& A,
                     const std::vector<std::string>& C,
                     const std::vector<std::string>& base) const;

    /// span(base ∪ a) = span(base ∪ b).
    bool interdefinable(const std::string& a, const std::string& b,
                        const std::vector<std::string>& base) const;

    /// All vectors bound to the given labels, in label order.  Throws
    /// UnknownPoint for an unbound label.
    std::vector<FpVector> gather(const std::vector<std::string>& labels) const;

private:
    int p_;
    int ambient_;
    std::map<std::string, std::vector<FpVector>> points_;
};

bool is_prime(int n);

} // namespace gcfg
