#include "gcfg/matroid.hpp"

#include <algorithm>

namespace gcfg {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

LinearMatroid::LinearMatroid(int p, int ambient) : p_(p), ambient_(ambient) {
    if (!is_prime(p)) throw InvalidParams("modulus " + std::to_string(p) + " is not prime");
    if (ambient < 0) throw InvalidParams("ambient dimension must be non-negative");
}

void LinearMatroid::add_point(const std::string& label, std::vector<FpVector> vectors) {
    if (points_.count(label)) throw InvalidParams("duplicate point label: " + label);
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient_)
            throw InvalidVector("vector bound to '" + label + "' has length " +
                                std::to_string(v.size()) + ", ambient is " +
                                std::to_string(ambient_));
        for (int e : v)
            if (e < 0 || e >= p_)
                throw InvalidVector("entry " + std::to_string(e) + " of point '" + label +
                                    "' is outside [0," + std::to_string(p_) + ")");
    }
    points_.emplace(label, std::move(vectors));
}

bool LinearMatroid::has_point(const std::string& label) const {
    return points_.count(label) != 0;
}

int LinearMatroid::rank(std::vector<FpVector> vectors) const {
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient_)
            throw InvalidVector("rank: vector length " + std::to_string(v.size()) +
                                " does not match ambient " + std::to_string(ambient_));
        for (int e : v)
            if (e < 0 || e >= p_) throw InvalidVector("rank: entry outside [0,p)");
    }
    // Row reduction over the field F_p.
    int r = 0;
    for (int col = 0; col < ambient_ && r < static_cast<int>(vectors.size()); ++col) {
        int pivot = -1;
        for (int i = r; i < static_cast<int>(vectors.size()); ++i)
            if (vectors[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(vectors[r], vectors[pivot]);
        // Scale pivot row to 1 and eliminate below.
        int inv = 1;
        for (int e = 1; e < p_ - 1; ++e) inv = (inv * vectors[r][col]) % p_;  // a^(p-2) = a^-1
        for (int c = col; c < ambient_; ++c) vectors[r][c] = (vectors[r][c] * inv) % p_;
        for (int i = r + 1; i < static_cast<int>(vectors.size()); ++i) {
            int f = vectors[i][col];
            if (f == 0) continue;
            for (int c = col; c < ambient_; ++c)
                vectors[i][c] = ((vectors[i][c] - f * vectors[r][c]) % p_ + p_) % p_;
        }
        ++r;
    }
    return r;
}

std::vector<FpVector> LinearMatroid::gather(const std::vector<std::string>& labels) const {
    std::vector<FpVector> out;
    for (const auto& l : labels) {
        auto it = points_.find(l);
        if (it == points_.end()) throw UnknownPoint("unknown point label: " + l);
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

int LinearMatroid::dim_over(const std::vector<std::string>& tuple,
                            const std::vector<std::string>& base) const {
    auto base_vecs = gather(base);
    auto all = base_vecs;
    auto tup = gather(tuple);
    all.insert(all.end(), tup.begin(), tup.end());
    return rank(all) - rank(base_vecs);
}

int LinearMatroid::dim_over(const std::string& label,
                            const std::vector<std::string>& base) const {
    return dim_over(std::vector<std::string>{label}, base);
}

bool LinearMatroid::independent(const std::vector<std::string>& A,
                                const std::vector<std::string>& C,
                                const std::vector<std::string>& base) const {
    std::vector<std::string> base_c = base;
    base_c.insert(base_c.end(), C.begin(), C.end());
    return dim_over(A, base_c) == dim_over(A, base);
}

bool LinearMatroid::interdefinable(const std::string& a, const std::string& b,
                                   const std::vector<std::string>& base) const {
    // span(base,a) = span(base,b) iff both have the rank of span(base,a,b).
    auto base_vecs = gather(base);
    auto va = gather({a});
    auto vb = gather({b});
    auto with_a = base_vecs;
    with_a.insert(with_a.end(), va.begin(), va.end());
    auto with_b = base_vecs;
    with_b.insert(with_b.end(), vb.begin(), vb.end());
    auto with_ab = with_a;
    with_ab.insert(with_ab.end(), vb.begin(), vb.end());
    int ra = rank(with_a), rb = rank(with_b), rab = rank(with_ab);
    return ra == rab && rb == rab;
}

} // namespace gcfg
