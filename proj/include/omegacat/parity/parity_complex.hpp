#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "omegacat/errors.hpp"

namespace omegacat {

// Subset of a parity complex's elements, as a bitmask (complexes are limited to 64 elements).
using CellSet = std::uint64_t;

inline CellSet bit(int i) { return CellSet{1} << i; }
inline bool has(CellSet s, int i) { return (s >> i) & 1u; }

class ParityComplex {
public:
    struct Element {
        int dim = 0;
        std::string label;
        CellSet minus = 0, plus = 0;
    };

    int add(int dim, std::string label) {
        if (elems_.size() >= 64) throw TooLarge("parity complexes are limited to 64 elements");
        elems_.push_back({dim, std::move(label), 0, 0});
        return static_cast<int>(elems_.size()) - 1;
    }
    void set_faces(int x, CellSet minus, CellSet plus) {
        elems_[static_cast<std::size_t>(x)].minus = minus;
        elems_[static_cast<std::size_t>(x)].plus = plus;
    }

    int size() const { return static_cast<int>(elems_.size()); }
    const Element& at(int x) const { return elems_[static_cast<std::size_t>(x)]; }
    int dim(int x) const { return at(x).dim; }
    CellSet minus(int x) const { return at(x).minus; }
    CellSet plus(int x) const { return at(x).plus; }
    const std::string& label(int x) const { return at(x).label; }

    int find(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (elems_[static_cast<std::size_t>(i)].label == label) return i;
        return -1;
    }

    int max_dim() const {
        int d = -1;
        for (const auto& e : elems_) d = std::max(d, e.dim);
        return d;
    }

    CellSet all() const { return size() == 64 ? ~CellSet{0} : bit(size()) - 1; }

    // |S|_n (dim <= n) and S_n (dim == n)
    CellSet up_to(CellSet s, int n) const {
        CellSet r = 0;
        for (int i = 0; i < size(); ++i)
            if (has(s, i) && dim(i) <= n) r |= bit(i);
        return r;
    }
    CellSet exactly(CellSet s, int n) const {
        CellSet r = 0;
        for (int i = 0; i < size(); ++i)
            if (has(s, i) && dim(i) == n) r |= bit(i);
        return r;
    }

    CellSet minus_of(CellSet s) const {
        CellSet r = 0;
        for (int i = 0; i < size(); ++i)
            if (has(s, i)) r |= minus(i);
        return r;
    }
    CellSet plus_of(CellSet s) const {
        CellSet r = 0;
        for (int i = 0; i < size(); ++i)
            if (has(s, i)) r |= plus(i);
        return r;
    }
    // S^- \ S^+ and S^+ \ S^-
    CellSet minus_only(CellSet s) const { return minus_of(s) & ~plus_of(s); }
    CellSet plus_only(CellSet s) const { return plus_of(s) & ~minus_of(s); }

    std::string describe(CellSet s) const {
        std::string out = "{";
        bool first = true;
        for (int i = 0; i < size(); ++i)
            if (has(s, i)) {
                out += (first ? "" : ",") + label(i);
                first = false;
            }
        return out + "}";
    }

private:
    std::vector<Element> elems_;
};

// At most one 0-dimensional element, and distinct elements share no face of the same sign.
inline bool well_formed(const ParityComplex& c, CellSet s) {
    int vertices = 0;
    for (int i = 0; i < c.size(); ++i) {
        if (!has(s, i)) continue;
        if (c.dim(i) == 0 && ++vertices > 1) return false;
        for (int j = i + 1; j < c.size(); ++j)
            if (has(s, j) && ((c.plus(i) & c.plus(j)) || (c.minus(i) & c.minus(j)))) return false;
    }
    return true;
}

inline std::string simplex_label(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += std::to_string(x);
    return s;
}

// Elements: nonempty subsets of {0..n}; face delta_i v drops v_i; even i -> plus, odd i -> minus.
inline ParityComplex simplex_parity(int n) {
    if (n < 0 || n > 5) throw TooLarge("simplex dimension out of range");
    ParityComplex c;
    std::vector<std::vector<int>> verts;
    std::vector<unsigned> masks;
    for (int k = 0; k <= n; ++k)
        for (unsigned m = 1; m < (1u << (n + 1)); ++m) {
            if (std::popcount(m) != k + 1) continue;
            std::vector<int> v;
            for (int i = 0; i <= n; ++i)
                if (m & (1u << i)) v.push_back(i);
            c.add(k, simplex_label(v));
            verts.push_back(v);
            masks.push_back(m);
        }
    auto index_of = [&](unsigned m) {
        return static_cast<int>(std::find(masks.begin(), masks.end(), m) - masks.begin());
    };
    for (int x = 0; x < c.size(); ++x) {
        const auto& v = verts[static_cast<std::size_t>(x)];
        if (v.size() < 2) continue;
        CellSet mi = 0, pl = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            int f = index_of(masks[static_cast<std::size_t>(x)] & ~(1u << v[i]));
            (i % 2 == 0 ? pl : mi) |= bit(f);
        }
        c.set_faces(x, mi, pl);
    }
    return c;
}

// (x,y)^e = x^e x {y}  u  {x} x y^{e'}, where e' = e for even dim x and the opposite sign for odd dim x.
inline ParityComplex parity_product(const ParityComplex& a, const ParityComplex& b) {
    ParityComplex c;
    auto id = [&](int x, int y) { return x * b.size() + y; };
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < b.size(); ++y) c.add(a.dim(x) + b.dim(y), "(" + a.label(x) + "," + b.label(y) + ")");
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < b.size(); ++y) {
            CellSet mi = 0, pl = 0;
            for (int u = 0; u < a.size(); ++u) {
                if (has(a.minus(x), u)) mi |= bit(id(u, y));
                if (has(a.plus(x), u)) pl |= bit(id(u, y));
            }
            const bool flip = a.dim(x) % 2 == 1;
            for (int v = 0; v < b.size(); ++v) {
                if (has(b.minus(y), v)) (flip ? pl : mi) |= bit(id(x, v));
                if (has(b.plus(y), v)) (flip ? mi : pl) |= bit(id(x, v));
            }
            c.set_faces(id(x, y), mi, pl);
        }
    return c;
}

struct ParityAxiomReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Faces sit one dimension down and are nonempty for positive-dimensional elements;
// x^- and x^+ are disjoint; x^{--} u x^{++} = x^{-+} u x^{+-}.
inline ParityAxiomReport validate_parity(const ParityComplex& c) {
    ParityAxiomReport r;
    for (int x = 0; x < c.size(); ++x) {
        CellSet f = c.minus(x) | c.plus(x);
        for (int y = 0; y < c.size(); ++y)
            if (has(f, y) && c.dim(y) != c.dim(x) - 1) r.failures.push_back("face dimension at " + c.label(x));
        if (c.dim(x) > 0 && (c.minus(x) == 0 || c.plus(x) == 0)) r.failures.push_back("empty face set at " + c.label(x));
        if (c.minus(x) & c.plus(x)) r.failures.push_back("x^- and x^+ meet at " + c.label(x));
        CellSet mm = c.minus_of(c.minus(x)), pp = c.plus_of(c.plus(x));
        CellSet mp = c.plus_of(c.minus(x)), pm = c.minus_of(c.plus(x));
        if ((mm | pp) != (mp | pm)) r.failures.push_back("x^{--} u x^{++} != x^{-+} u x^{+-} at " + c.label(x));
    }
    return r;
}

}  // namespace omegacat
