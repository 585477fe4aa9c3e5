#pragma once

// Brute-force reference computations used by the tests. Everything here works on finite groups
// given by cyclic orders and plain integer matrices, by enumerating elements; nothing goes through
// Smith normal form, so agreement with the library is an independent check.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "omegacat/algebra/group.hpp"

namespace oracle {

struct Group {
    std::vector<long> ord;  // Z/ord[0] + Z/ord[1] + ...

    std::size_t size() const {
        std::size_t n = 1;
        for (long o : ord) n *= static_cast<std::size_t>(o);
        return n;
    }
    std::vector<long> element(std::size_t idx) const {
        std::vector<long> x(ord.size());
        for (std::size_t i = 0; i < ord.size(); ++i) {
            x[i] = static_cast<long>(idx % static_cast<std::size_t>(ord[i]));
            idx /= static_cast<std::size_t>(ord[i]);
        }
        return x;
    }
    std::size_t index(const std::vector<long>& x) const {
        std::size_t idx = 0;
        for (std::size_t i = ord.size(); i-- > 0;) idx = idx * static_cast<std::size_t>(ord[i]) + static_cast<std::size_t>(((x[i] % ord[i]) + ord[i]) % ord[i]);
        return idx;
    }
    std::size_t add(std::size_t a, std::size_t b) const {
        auto x = element(a), y = element(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return index(x);
    }
    std::size_t times(std::size_t a, long k) const {
        auto x = element(a);
        for (auto& v : x) v *= k;
        return index(x);
    }
};

struct Hom {
    Group src, tgt;
    std::vector<std::vector<long>> m;  // tgt gens x src gens

    std::size_t operator()(std::size_t a) const {
        auto x = src.element(a);
        std::vector<long> y(tgt.ord.size(), 0);
        for (std::size_t r = 0; r < y.size(); ++r)
            for (std::size_t c = 0; c < x.size(); ++c) y[r] += m[r][c] * x[c];
        return tgt.index(y);
    }
};

// Requires a diagonal relation matrix with positive entries (every group built from cyclic orders).
inline Group from_library(const omegacat::FgAbGroup& g) {
    Group out;
    const auto& rel = g.relations();
    std::vector<long> ord(rel.rows(), 0);
    for (std::size_t c = 0; c < rel.cols(); ++c) {
        std::size_t hits = 0;
        for (std::size_t r = 0; r < rel.rows(); ++r)
            if (rel(r, c) != 0) {
                ++hits;
                ord[r] = static_cast<long>(rel(r, c) < 0 ? -rel(r, c) : rel(r, c));
            }
        if (hits > 1) throw std::logic_error("oracle needs diagonal relations");
    }
    for (long o : ord)
        if (o == 0) throw std::logic_error("oracle needs a finite group");
    out.ord = ord;
    return out;
}

inline Hom from_library(const omegacat::GroupHom& f) {
    Hom h{from_library(f.source()), from_library(f.target()), {}};
    h.m.assign(f.matrix().rows(), std::vector<long>(f.matrix().cols(), 0));
    for (std::size_t r = 0; r < f.matrix().rows(); ++r)
        for (std::size_t c = 0; c < f.matrix().cols(); ++c) h.m[r][c] = static_cast<long>(f.matrix()(r, c));
    return h;
}

// Subgroup membership table generated by the images of a hom.
inline std::vector<char> image(const Hom& f) {
    std::vector<char> in(f.tgt.size(), 0);
    for (std::size_t a = 0; a < f.src.size(); ++a) in[f(a)] = 1;
    return in;
}

// Elements-of-order-dividing-k counts for k = 1..K; together with the order they determine a finite
// abelian group up to isomorphism.
using Signature = std::vector<std::size_t>;

// Ker(out) / Im(in), where in : A -> B and out : B -> C.
inline Signature subquotient_signature(const Hom& in, const Hom& out, long K) {
    const Group& B = in.tgt;
    std::vector<char> im = image(in);
    std::size_t im_size = 0;
    for (char c : im) im_size += c;
    Signature sig;
    for (long k = 1; k <= K; ++k) {
        std::size_t n = 0;
        for (std::size_t z = 0; z < B.size(); ++z)
            if (out(z) == 0 && im[B.times(z, k)]) ++n;
        sig.push_back(n / im_size);
    }
    return sig;
}

// Same signature computed from invariant factors of a library group.
inline Signature signature_of(const omegacat::FgAbGroup& g, long K) {
    Signature sig;
    for (long k = 1; k <= K; ++k) {
        std::size_t n = 1;
        for (const auto& a : g.invariant_factors()) n *= static_cast<std::size_t>(std::gcd(k, static_cast<long>(a)));
        sig.push_back(n);
    }
    return sig;
}

inline std::size_t binomial(int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

// |Gamma(c)_n| = prod_k |c_k|^binom(n, k): one copy of c_k per surjection [n] ->> [k].
inline std::size_t gamma_level_size(const std::vector<std::size_t>& orders, int n) {
    std::size_t r = 1;
    for (int k = 0; k <= n && k < static_cast<int>(orders.size()); ++k)
        for (std::size_t i = 0; i < binomial(n, k); ++i) r *= orders[static_cast<std::size_t>(k)];
    return r;
}

}  // namespace oracle
