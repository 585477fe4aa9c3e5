#pragma once

#include "omegacat/chain/constructions.hpp"

namespace omegacat {

// Strict Picard omega-category given by an abelian group A and idempotent endomorphisms s_n, t_n.
// Stored levels are [min_level, max_level]; above max_level s = t = id. Below min_level, s = t = 0
// when the category is Z-indexed (otherwise min_level is 0 and lower levels do not exist).
class PicOmegaCat {
public:
    PicOmegaCat() = default;
    PicOmegaCat(FgAbGroup group, int min_level, std::vector<GroupHom> s, std::vector<GroupHom> t, bool z_indexed)
        : group_(std::move(group)), min_(min_level), s_(std::move(s)), t_(std::move(t)), z_indexed_(z_indexed) {
        if (s_.size() != t_.size() || s_.empty()) throw ShapeMismatch("structure map lists");
        if (!z_indexed_ && min_ != 0) throw PreconditionViolated("N-indexed categories start at level 0");
    }

    const FgAbGroup& group() const { return group_; }
    int min_level() const { return min_; }
    int max_level() const { return min_ + static_cast<int>(s_.size()) - 1; }
    bool z_indexed() const { return z_indexed_; }

    GroupHom s(int n) const { return structure(s_, n); }
    GroupHom t(int n) const { return structure(t_, n); }

    IntVector source(const IntVector& x, int n) const { return s(n).apply(x); }
    IntVector target(const IntVector& x, int n) const { return t(n).apply(x); }

    bool composable(const IntVector& x, const IntVector& y, int n) const {
        return group_.equal(source(x, n), target(y, n));
    }

    // x *_n y = x + y - s_n x, defined when s_n x = t_n y.
    IntVector compose(const IntVector& x, const IntVector& y, int n) const {
        if (!composable(x, y, n)) throw NotComposable("s_" + std::to_string(n) + " x != t_" + std::to_string(n) + " y");
        return group_.reduce(sub_vectors(add_vectors(x, y), source(x, n)));
    }

    // min { m : s_m x = x }; for the zero element of a Z-indexed category there is no minimum.
    std::optional<int> mu(const IntVector& x) const {
        if (z_indexed_ && group_.is_zero(x)) return std::nullopt;
        for (int m = min_; m <= max_level(); ++m)
            if (group_.equal(source(x, m), x)) return m;
        return max_level();
    }

    // A_n as a subgroup: kernel of (id - s_n).
    Subquotient level_subgroup(int n) const {
        return kernel_of(GroupHom::identity(group_) - s(n));
    }

private:
    GroupHom structure(const std::vector<GroupHom>& v, int n) const {
        if (n > max_level()) return GroupHom::identity(group_);
        if (n < min_) {
            if (!z_indexed_) throw PreconditionViolated("negative level in an N-indexed category");
            return GroupHom::zero(group_, group_);
        }
        return v[static_cast<std::size_t>(n - min_)];
    }

    FgAbGroup group_;
    int min_ = 0;
    std::vector<GroupHom> s_, t_;
    bool z_indexed_ = false;
};

// Offsets of each degree's block inside the graded direct sum of a complex.
struct GradedLayout {
    int lo = 0, hi = -1;
    std::vector<std::size_t> offset;  // offset[n - lo]
    std::size_t total = 0;

    explicit GradedLayout(const ChainComplex& c) {
        if (c.empty()) return;
        lo = c.min_degree();
        hi = c.max_degree();
        for (int n = lo; n <= hi; ++n) {
            offset.push_back(total);
            total += c.group(n).num_generators();
        }
    }
    std::size_t at(int n) const { return offset[static_cast<std::size_t>(n - lo)]; }
};

inline FgAbGroup graded_group(const ChainComplex& c) {
    IntMatrix rel(0, 0);
    for (int n = c.min_degree(); n <= c.max_degree() && !c.empty(); ++n)
        rel = IntMatrix::direct_sum(rel, c.group(n).relations());
    return FgAbGroup(std::move(rel));
}

// P(c) in the graded representation: s_n keeps degrees <= n; t_n also adds d x_{n+1} in degree n.
inline PicOmegaCat p_of(const ChainComplex& c) {
    GradedLayout L(c);
    FgAbGroup A = graded_group(c);
    const bool z = !c.empty() && c.min_degree() < 0;
    const int lo = z ? c.min_degree() : 0;
    const int hi = c.empty() ? 0 : std::max(0, c.max_degree());
    std::vector<GroupHom> s, t;
    for (int n = lo; n <= hi; ++n) {
        IntMatrix sm(L.total, L.total), tm(L.total, L.total);
        for (int k = L.lo; k <= L.hi; ++k) {
            const std::size_t sz = c.group(k).num_generators();
            if (k <= n) sm.set_block(L.at(k), L.at(k), IntMatrix::identity(sz));
            if (k < n) tm.set_block(L.at(k), L.at(k), IntMatrix::identity(sz));
            if (k == n) {
                tm.set_block(L.at(k), L.at(k), IntMatrix::identity(sz));
                if (k + 1 <= L.hi) tm.set_block(L.at(k), L.at(k + 1), c.d(k + 1).matrix());
            }
        }
        s.emplace_back(A, A, std::move(sm));
        t.emplace_back(A, A, std::move(tm));
    }
    return PicOmegaCat(A, lo, std::move(s), std::move(t), z);
}

// P on chain maps: block-diagonal map of graded groups.
inline GroupHom p_of_map(const ChainMap& f) {
    GradedLayout Ls(f.source()), Lt(f.target());
    FgAbGroup As = graded_group(f.source()), At = graded_group(f.target());
    IntMatrix m(Lt.total, Ls.total);
    for (int n = Ls.lo; n <= Ls.hi; ++n)
        if (n >= Lt.lo && n <= Lt.hi) m.set_block(Lt.at(n), Ls.at(n), f.at(n).matrix());
    return GroupHom(As, At, std::move(m));
}

// Embedding of c_n into the graded group.
inline IntVector graded_embed(const ChainComplex& c, int n, const IntVector& x) {
    GradedLayout L(c);
    IntVector v(L.total, 0);
    for (std::size_t i = 0; i < x.size(); ++i) v[L.at(n) + i] = x[i];
    return v;
}

inline IntVector graded_component(const ChainComplex& c, int n, const IntVector& v) {
    GradedLayout L(c);
    const std::size_t sz = c.group(n).num_generators();
    return IntVector(v.begin() + static_cast<std::ptrdiff_t>(L.at(n)), v.begin() + static_cast<std::ptrdiff_t>(L.at(n) + sz));
}

// D = sum_n (t_n - s_n)
inline GroupHom pic_differential(const PicOmegaCat& a) {
    GroupHom D = GroupHom::zero(a.group(), a.group());
    for (int n = a.min_level(); n < a.max_level(); ++n) D = D + (a.t(n) - a.s(n));
    return D;
}

// Q(a)^i = A_i / A_{i-1}, differential induced by t_{i-1} - s_{i-1}.
struct QData {
    ChainComplex complex;
    std::vector<Subquotient> levels;  // levels[i - lo] presents Q^i inside A
    int lo = 0;

    const Subquotient& at(int i) const { return levels[static_cast<std::size_t>(i - lo)]; }
};

inline QData q_data(const PicOmegaCat& a) {
    QData q;
    q.lo = a.min_level();
    const FgAbGroup& A = a.group();
    const GroupHom id = GroupHom::identity(A);
    std::vector<FgAbGroup> groups;
    for (int i = a.min_level(); i <= a.max_level(); ++i) {
        GroupHom below = (i == 0 && !a.z_indexed()) ? GroupHom::zero(A, A) : a.s(i - 1);
        q.levels.emplace_back(id - a.s(i), below);
        groups.push_back(q.levels.back().group());
    }
    std::vector<IntMatrix> ds;
    for (int i = a.min_level() + 1; i <= a.max_level(); ++i) {
        const Subquotient& src = q.at(i);
        const Subquotient& tgt = q.at(i - 1);
        GroupHom d = a.t(i - 1) - a.s(i - 1);
        IntMatrix m(tgt.group().num_generators(), src.group().num_generators());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            IntVector img = tgt.project(d.matrix().apply(src.section(src.group().generator(j))));
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = img[r];
        }
        ds.push_back(std::move(m));
    }
    q.complex = ChainComplex(a.min_level(), std::move(groups), std::move(ds));
    return q;
}

inline ChainComplex q_of(const PicOmegaCat& a) { return q_data(a).complex; }

// c -> Q(P(c)), x |-> class of x placed in degree n of the graded group.
inline ChainMap qp_unit(const ChainComplex& c) {
    PicOmegaCat a = p_of(c);
    QData q = q_data(a);
    std::map<int, GroupHom> comps;
    for (int n = c.min_degree(); n <= c.max_degree() && !c.empty(); ++n) {
        const FgAbGroup g = c.group(n);
        IntMatrix m(q.complex.group(n).num_generators(), g.num_generators());
        for (std::size_t j = 0; j < g.num_generators(); ++j) {
            IntVector img = q.at(n).project(graded_embed(c, n, g.generator(j)));
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = img[r];
        }
        comps.emplace(n, GroupHom(g, q.complex.group(n), std::move(m)));
    }
    return ChainMap(c, q.complex, std::move(comps));
}

}  // namespace omegacat
