#pragma once

#include <optional>
#include <tuple>

#include "omegacat/chain/complex.hpp"

namespace omegacat {

// (shift_up c)_n = c_{n-1}, same differentials.
inline ChainComplex shift_up(const ChainComplex& c, int k = 1) {
    if (c.empty()) return c;
    std::vector<IntMatrix> ds;
    for (int n = c.min_degree() + 1; n <= c.max_degree(); ++n) ds.push_back(c.d(n).matrix());
    return ChainComplex(c.min_degree() + k, c.groups(), std::move(ds));
}

// (shift_down c)_n = c_{n+1}, no truncation.
inline ChainComplex shift_down(const ChainComplex& c) { return shift_up(c, -1); }

// Complex restricted to degrees >= 0 is assumed. Degree 0 of the loop is Ker(d_1); degree i > 0 is c_{i+1}.
struct LoopData {
    ChainComplex complex;
    // Present when d_1 is nonzero and degree 0 was replaced by a canonical kernel.
    std::optional<Subquotient> cycles;

    IntVector to_loop0(const IntVector& x) const { return cycles ? cycles->project(x) : x; }
    IntVector from_loop0(const IntVector& c) const { return cycles ? cycles->section(c) : c; }
};

inline LoopData loop_data(const ChainComplex& c) {
    if (c.empty() || c.max_degree() < 1) return {ChainComplex(), std::nullopt};
    GroupHom d1 = c.d(1);
    std::optional<Subquotient> cyc;
    FgAbGroup g0 = c.group(1);
    if (!d1.is_zero()) {
        cyc.emplace(kernel_of(d1));
        g0 = cyc->group();
    }
    std::vector<FgAbGroup> groups{g0};
    std::vector<IntMatrix> ds;
    for (int n = 2; n <= c.max_degree(); ++n) groups.push_back(c.group(n));
    if (c.max_degree() >= 2) {
        const GroupHom d2 = c.d(2);
        IntMatrix m(g0.num_generators(), d2.source().num_generators());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            IntVector img = d2.matrix().apply(d2.source().generator(j));
            if (cyc) img = cyc->project(img);
            for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = img[i];
        }
        ds.push_back(std::move(m));
        for (int n = 3; n <= c.max_degree(); ++n) ds.push_back(c.d(n).matrix());
    }
    return {ChainComplex(0, std::move(groups), std::move(ds)), std::move(cyc)};
}

inline ChainComplex loop(const ChainComplex& c) { return loop_data(c).complex; }

inline ChainComplex loop(const ChainComplex& c, int k) {
    ChainComplex r = c;
    for (int i = 0; i < k; ++i) r = loop(r);
    return r;
}

// Loop applied to a chain map.
inline ChainMap loop_map(const ChainMap& f) {
    LoopData a = loop_data(f.source());
    LoopData b = loop_data(f.target());
    std::map<int, GroupHom> comps;
    if (!a.complex.empty() && !b.complex.empty()) {
        const FgAbGroup& s0 = a.complex.group(0);
        const FgAbGroup& t0 = b.complex.group(0);
        IntMatrix m(t0.num_generators(), s0.num_generators());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            IntVector img = b.to_loop0(f.at(1).matrix().apply(a.from_loop0(s0.generator(j))));
            for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = img[i];
        }
        comps.emplace(0, GroupHom(s0, t0, std::move(m)));
    }
    auto [lo, hi] = f.span();
    for (int n = 1; n + 1 <= hi; ++n)
        comps.emplace(n, GroupHom(a.complex.group(n), b.complex.group(n), f.at(n + 1).matrix()));
    (void)lo;
    return ChainMap(a.complex, b.complex, std::move(comps));
}

// Degree 0 is c_1 + c_0 with d_1 = (d_2, 0); degree i > 0 is c_{i+1}.
inline ChainComplex path(const ChainComplex& c) {
    if (c.empty()) return c;
    FgAbGroup g0 = FgAbGroup::direct_sum(c.group(1), c.group(0));
    std::vector<FgAbGroup> groups{g0};
    std::vector<IntMatrix> ds;
    for (int n = 2; n <= c.max_degree(); ++n) groups.push_back(c.group(n));
    if (c.max_degree() >= 2) {
        IntMatrix d2 = c.d(2).matrix();
        IntMatrix m(g0.num_generators(), d2.cols());
        m.set_block(0, 0, d2);
        ds.push_back(std::move(m));
        for (int n = 3; n <= c.max_degree(); ++n) ds.push_back(c.d(n).matrix());
    }
    return ChainComplex(0, std::move(groups), std::move(ds));
}

// Degreewise direct sum.
inline ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    auto [lo, hi] = degree_span({&a, &b});
    std::vector<FgAbGroup> groups;
    std::vector<IntMatrix> ds;
    for (int n = lo; n <= hi; ++n) groups.push_back(FgAbGroup::direct_sum(a.group(n), b.group(n)));
    for (int n = lo + 1; n <= hi; ++n) ds.push_back(IntMatrix::direct_sum(a.d(n).matrix(), b.d(n).matrix()));
    return ChainComplex(lo, std::move(groups), std::move(ds));
}

enum class TranslationKind { ShiftUp, Loop, Path };

inline ChainComplex translation(const ChainComplex& c, TranslationKind kind) {
    switch (kind) {
        case TranslationKind::ShiftUp: return shift_up(c);
        case TranslationKind::Loop: return loop(c);
        case TranslationKind::Path: return path(c);
    }
    return c;
}

// cone_n = B_n + A_{n-1}, d(b, a) = (-d b + f a, d a).
struct Cone {
    ChainComplex complex;
    ChainMap inclusion;   // B -> cone, b |-> ((-1)^n b, 0)
    ChainMap projection;  // cone -> shift_up(A), (b, a) |-> a
};

inline Cone mapping_cone(const ChainMap& f) {
    const ChainComplex& A = f.source();
    const ChainComplex& B = f.target();
    auto [lo, hi] = f.span();
    if (lo > hi) return {ChainComplex(), ChainMap(), ChainMap()};
    ++hi;
    std::vector<FgAbGroup> groups;
    for (int n = lo; n <= hi; ++n) groups.push_back(FgAbGroup::direct_sum(B.group(n), A.group(n - 1)));
    std::vector<IntMatrix> ds;
    for (int n = lo + 1; n <= hi; ++n) {
        const std::size_t bn = B.group(n).num_generators(), an = A.group(n - 1).num_generators();
        const std::size_t bm = B.group(n - 1).num_generators(), am = A.group(n - 2).num_generators();
        IntMatrix m(bm + am, bn + an);
        m.set_block(0, 0, -B.d(n).matrix());
        m.set_block(0, bn, f.at(n - 1).matrix());
        m.set_block(bm, bn, A.d(n - 1).matrix());
        ds.push_back(std::move(m));
    }
    ChainComplex cone(lo, groups, std::move(ds));
    ChainComplex shiftedA = shift_up(A);
    std::map<int, GroupHom> inc, proj;
    for (int n = lo; n <= hi; ++n) {
        const std::size_t bn = B.group(n).num_generators(), an = A.group(n - 1).num_generators();
        IntMatrix i(bn + an, bn);
        i.set_block(0, 0, IntMatrix::scalar(bn, n % 2 == 0 ? 1 : -1));
        inc.emplace(n, GroupHom(B.group(n), cone.group(n), std::move(i)));
        IntMatrix p(an, bn + an);
        p.set_block(0, bn, IntMatrix::identity(an));
        proj.emplace(n, GroupHom(cone.group(n), shiftedA.group(n), std::move(p)));
    }
    return {cone, ChainMap(B, cone, std::move(inc)), ChainMap(cone, shiftedA, std::move(proj))};
}

// Double complex: vertical d: (p,q) -> (p,q-1), horizontal delta: (p,q) -> (p+1,q), p >= 0.
class BigradedComplex {
public:
    void set_group(int p, int q, FgAbGroup g) { groups_[{p, q}] = std::move(g); touch(p, q); }
    void set_vertical(int p, int q, IntMatrix m) { vertical_[{p, q}] = std::move(m); }
    void set_horizontal(int p, int q, IntMatrix m) { horizontal_[{p, q}] = std::move(m); }

    FgAbGroup group(int p, int q) const {
        auto it = groups_.find({p, q});
        return it == groups_.end() ? FgAbGroup::trivial() : it->second;
    }
    GroupHom vertical(int p, int q) const { return get(vertical_, p, q, group(p, q - 1)); }
    GroupHom horizontal(int p, int q) const { return get(horizontal_, p, q, group(p + 1, q)); }

    bool empty() const { return groups_.empty(); }
    int p_min() const { return p_min_; }
    int p_max() const { return p_max_; }
    int q_min() const { return q_min_; }
    int q_max() const { return q_max_; }

private:
    using Key = std::pair<int, int>;
    void touch(int p, int q) {
        if (groups_.size() == 1) {
            p_min_ = p_max_ = p;
            q_min_ = q_max_ = q;
        }
        p_min_ = std::min(p_min_, p);
        p_max_ = std::max(p_max_, p);
        q_min_ = std::min(q_min_, q);
        q_max_ = std::max(q_max_, q);
    }
    GroupHom get(const std::map<Key, IntMatrix>& m, int p, int q, const FgAbGroup& tgt) const {
        auto it = m.find({p, q});
        if (it == m.end()) return GroupHom::zero(group(p, q), tgt);
        return GroupHom(group(p, q), tgt, it->second);
    }
    std::map<Key, FgAbGroup> groups_;
    std::map<Key, IntMatrix> vertical_, horizontal_;
    int p_min_ = 0, p_max_ = -1, q_min_ = 0, q_max_ = -1;
};

inline ValidationReport validate(const BigradedComplex& b) {
    ValidationReport r;
    for (int p = b.p_min(); p <= b.p_max(); ++p)
        for (int q = b.q_min(); q <= b.q_max(); ++q) {
            auto at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            if (!compose(b.vertical(p, q - 1), b.vertical(p, q)).is_zero()) r.issues.push_back({"d^2 = 0", at});
            if (!compose(b.horizontal(p + 1, q), b.horizontal(p, q)).is_zero())
                r.issues.push_back({"delta^2 = 0", at});
            if (!compose(b.vertical(p + 1, q), b.horizontal(p, q))
                     .equals(compose(b.horizontal(p, q - 1), b.vertical(p, q))))
                r.issues.push_back({"d delta = delta d", at});
        }
    return r;
}

struct TotalComplex {
    ChainComplex complex;
    // For each total degree, the (p, q, generator offset) of each summand.
    std::map<int, std::vector<std::tuple<int, int, std::size_t>>> summands;

    std::size_t offset(int n, int p) const {
        for (const auto& [pp, q, off] : summands.at(n))
            if (pp == p) return off;
        throw PreconditionViolated("no summand with that p");
    }
};

// Tot_n = sum over q - p = n, D = d + (-1)^q delta.
inline TotalComplex total_complex(const BigradedComplex& b) {
    TotalComplex t;
    if (b.empty()) return t;
    const int lo = b.q_min() - b.p_max(), hi = b.q_max() - b.p_min();
    std::vector<FgAbGroup> groups;
    for (int n = lo; n <= hi; ++n) {
        IntMatrix rel(0, 0);
        auto& list = t.summands[n];
        for (int p = b.p_min(); p <= b.p_max(); ++p) {
            int q = n + p;
            if (q < b.q_min() || q > b.q_max()) continue;
            list.emplace_back(p, q, rel.rows());
            rel = IntMatrix::direct_sum(rel, b.group(p, q).relations());
        }
        groups.emplace_back(std::move(rel));
    }
    std::vector<IntMatrix> ds;
    for (int n = lo + 1; n <= hi; ++n) {
        const FgAbGroup& src = groups[static_cast<std::size_t>(n - lo)];
        const FgAbGroup& tgt = groups[static_cast<std::size_t>(n - 1 - lo)];
        IntMatrix m(tgt.num_generators(), src.num_generators());
        for (const auto& [p, q, off] : t.summands[n]) {
            for (const auto& [p2, q2, off2] : t.summands[n - 1]) {
                if (p2 == p && q2 == q - 1) m.set_block(off2, off, b.vertical(p, q).matrix());
                if (p2 == p + 1 && q2 == q)
                    m.set_block(off2, off, b.horizontal(p, q).matrix().scaled(q % 2 == 0 ? 1 : -1));
            }
        }
        ds.push_back(std::move(m));
    }
    t.complex = ChainComplex(lo, std::move(groups), std::move(ds));
    return t;
}

}  // namespace omegacat
