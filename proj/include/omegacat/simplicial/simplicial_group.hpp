#pragma once

#include "omegacat/chain/constructions.hpp"

namespace omegacat {

// Truncated simplicial abelian group: levels 0..T with faces d_i : G_n -> G_{n-1} and
// degeneracies s_i : G_n -> G_{n+1} (the latter only for n < T).
class SimplicialAbGroup {
public:
    SimplicialAbGroup() = default;
    SimplicialAbGroup(std::vector<FgAbGroup> levels, std::vector<std::vector<GroupHom>> faces,
                      std::vector<std::vector<GroupHom>> degeneracies)
        : levels_(std::move(levels)), faces_(std::move(faces)), degens_(std::move(degeneracies)) {
        if (levels_.empty()) throw ShapeMismatch("a simplicial group needs level 0");
        const std::size_t T = levels_.size() - 1;
        if (faces_.size() != T || degens_.size() != T) throw ShapeMismatch("face/degeneracy level counts");
        for (std::size_t n = 1; n <= T; ++n)
            if (faces_[n - 1].size() != n + 1) throw ShapeMismatch("level " + std::to_string(n) + " needs n+1 faces");
        for (std::size_t n = 0; n < T; ++n)
            if (degens_[n].size() != n + 1) throw ShapeMismatch("level " + std::to_string(n) + " needs n+1 degeneracies");
    }

    int truncation() const { return static_cast<int>(levels_.size()) - 1; }
    const FgAbGroup& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }
    const GroupHom& face(int n, int i) const { return faces_.at(static_cast<std::size_t>(n - 1)).at(static_cast<std::size_t>(i)); }
    const GroupHom& degeneracy(int n, int i) const { return degens_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)); }

private:
    std::vector<FgAbGroup> levels_;
    std::vector<std::vector<GroupHom>> faces_;  // faces_[n-1][i]
    std::vector<std::vector<GroupHom>> degens_;  // degens_[n][i]
};

inline ValidationReport validate_simplicial(const SimplicialAbGroup& g) {
    ValidationReport r;
    const int T = g.truncation();
    auto tag = [](int n, int i, int j) {
        return "level " + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
    };
    for (int n = 2; n <= T; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (!compose(g.face(n - 1, i), g.face(n, j)).equals(compose(g.face(n - 1, j - 1), g.face(n, i))))
                    r.issues.push_back({"d_i d_j = d_{j-1} d_i", tag(n, i, j)});
    for (int n = 0; n < T; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                GroupHom lhs = compose(g.face(n + 1, i), g.degeneracy(n, j));
                GroupHom rhs;
                if (i < j)
                    rhs = compose(g.degeneracy(n - 1, j - 1), g.face(n, i));
                else if (i == j || i == j + 1)
                    rhs = GroupHom::identity(g.level(n));
                else
                    rhs = compose(g.degeneracy(n - 1, j), g.face(n, i - 1));
                if (!lhs.equals(rhs)) r.issues.push_back({"d_i s_j", tag(n, i, j)});
            }
    for (int n = 0; n + 1 < T; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (!compose(g.degeneracy(n + 1, i), g.degeneracy(n, j)).equals(compose(g.degeneracy(n + 1, j + 1), g.degeneracy(n, i))))
                    r.issues.push_back({"s_i s_j = s_{j+1} s_i", tag(n, i, j)});
    return r;
}

// K_n = intersection of Ker d_i for i < n, differential (-1)^n d_n. Degrees 0..T.
struct NormalizedChains {
    ChainComplex complex;
    std::vector<std::optional<Subquotient>> inclusion;  // empty at level 0 (K_0 = G_0)

    IntVector to_level(int n, const IntVector& k) const {
        return inclusion[static_cast<std::size_t>(n)] ? inclusion[static_cast<std::size_t>(n)]->section(k) : k;
    }
    IntVector from_level(int n, const IntVector& x) const {
        return inclusion[static_cast<std::size_t>(n)] ? inclusion[static_cast<std::size_t>(n)]->project(x) : x;
    }
};

inline NormalizedChains normalized_chains_data(const SimplicialAbGroup& g) {
    NormalizedChains K;
    std::vector<FgAbGroup> groups{g.level(0)};
    K.inclusion.emplace_back();
    for (int n = 1; n <= g.truncation(); ++n) {
        IntMatrix stacked(0, g.level(n).num_generators());
        IntMatrix rel(0, 0);
        for (int i = 0; i < n; ++i) {
            stacked = IntMatrix::vstack(stacked, g.face(n, i).matrix());
            rel = IntMatrix::direct_sum(rel, g.level(n - 1).relations());
        }
        K.inclusion.emplace_back(kernel_of(GroupHom(g.level(n), FgAbGroup(rel), stacked)));
        groups.push_back(K.inclusion.back()->group());
    }
    std::vector<IntMatrix> ds;
    for (int n = 1; n <= g.truncation(); ++n) {
        const FgAbGroup& src = groups[static_cast<std::size_t>(n)];
        IntMatrix m(groups[static_cast<std::size_t>(n - 1)].num_generators(), src.num_generators());
        for (std::size_t j = 0; j < src.num_generators(); ++j) {
            IntVector x = g.face(n, n).matrix().apply(K.to_level(n, src.generator(j)));
            if (n % 2 == 1) x = scale_vector(x, -1);
            IntVector img = K.from_level(n - 1, x);
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = img[r];
        }
        ds.push_back(std::move(m));
    }
    K.complex = ChainComplex(0, std::move(groups), std::move(ds));
    return K;
}

inline ChainComplex normalized_chains(const SimplicialAbGroup& g) { return normalized_chains_data(g).complex; }

// pi_n = H_n(K(g)); needs n < T so that the boundaries from level n+1 are present.
inline FgAbGroup homotopy_groups(const SimplicialAbGroup& g, int n) {
    if (n >= g.truncation())
        throw TruncationTooLow("pi_" + std::to_string(n) + " needs truncation above " + std::to_string(n));
    return homology(normalized_chains(g), n);
}

// Sub-simplicial group cut out levelwise by kernels, with maps given on the ambient levels.
// level_sub[n] presents the subgroup of `ambient_level(n)`.
template <class Ambient, class FaceFn, class DegenFn>
SimplicialAbGroup restrict_simplicial(int T, const std::vector<Subquotient>& level_sub, Ambient&&, FaceFn&& face, DegenFn&& degen) {
    std::vector<FgAbGroup> levels;
    for (int n = 0; n <= T; ++n) levels.push_back(level_sub[static_cast<std::size_t>(n)].group());
    auto restrict_map = [&](int from, int to, const IntMatrix& amb) {
        const Subquotient& s = level_sub[static_cast<std::size_t>(from)];
        const Subquotient& t = level_sub[static_cast<std::size_t>(to)];
        IntMatrix m(t.group().num_generators(), s.group().num_generators());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            IntVector img = t.project(amb.apply(s.section(s.group().generator(j))));
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = img[r];
        }
        return GroupHom(s.group(), t.group(), std::move(m));
    };
    std::vector<std::vector<GroupHom>> faces, degens;
    for (int n = 1; n <= T; ++n) {
        faces.emplace_back();
        for (int i = 0; i <= n; ++i) faces.back().push_back(restrict_map(n, n - 1, face(n, i)));
    }
    for (int n = 0; n < T; ++n) {
        degens.emplace_back();
        for (int i = 0; i <= n; ++i) degens.back().push_back(restrict_map(n, n + 1, degen(n, i)));
    }
    return SimplicialAbGroup(std::move(levels), std::move(faces), std::move(degens));
}

// L(X)_n = {x in X_{n+1} : d_0 x = 0, 0-th vertex of x = 0}, d_i^L = -d_{i+1}, s_i^L = -s_{i+1}.
inline SimplicialAbGroup simplicial_loop(const SimplicialAbGroup& g) {
    const int T = g.truncation() - 1;
    if (T < 0) throw TruncationTooLow("loop needs truncation >= 1");
    std::vector<Subquotient> subs;
    for (int n = 0; n <= T; ++n) {
        // vertex 0 of an (n+1)-simplex: d_1 applied n+1 times
        GroupHom v0 = GroupHom::identity(g.level(n + 1));
        for (int k = n + 1; k >= 1; --k) v0 = compose(g.face(k, 1), v0);
        IntMatrix stacked = IntMatrix::vstack(g.face(n + 1, 0).matrix(), v0.matrix());
        FgAbGroup tgt(IntMatrix::direct_sum(g.level(n).relations(), g.level(0).relations()));
        subs.push_back(kernel_of(GroupHom(g.level(n + 1), tgt, stacked)));
    }
    return restrict_simplicial(
        T, subs, 0, [&](int n, int i) { return -g.face(n + 1, i + 1).matrix(); },
        [&](int n, int i) { return -g.degeneracy(n + 1, i + 1).matrix(); });
}

// S(X)_n = Ker(d_0 : X_{n+1} -> X_n) with the same shifted, negated structure maps.
inline SimplicialAbGroup simplicial_shift(const SimplicialAbGroup& g) {
    const int T = g.truncation() - 1;
    if (T < 0) throw TruncationTooLow("path needs truncation >= 1");
    std::vector<Subquotient> subs;
    for (int n = 0; n <= T; ++n) subs.push_back(kernel_of(g.face(n + 1, 0)));
    return restrict_simplicial(
        T, subs, 0, [&](int n, int i) { return -g.face(n + 1, i + 1).matrix(); },
        [&](int n, int i) { return -g.degeneracy(n + 1, i + 1).matrix(); });
}

// Constant simplicial group on A, truncated at T.
inline SimplicialAbGroup constant_simplicial(const FgAbGroup& a, int T) {
    std::vector<FgAbGroup> levels(static_cast<std::size_t>(T + 1), a);
    std::vector<std::vector<GroupHom>> faces, degens;
    for (int n = 1; n <= T; ++n) faces.emplace_back(static_cast<std::size_t>(n + 1), GroupHom::identity(a));
    for (int n = 0; n < T; ++n) degens.emplace_back(static_cast<std::size_t>(n + 1), GroupHom::identity(a));
    return SimplicialAbGroup(std::move(levels), std::move(faces), std::move(degens));
}

// Levelwise direct sum.
inline SimplicialAbGroup direct_sum(const SimplicialAbGroup& a, const SimplicialAbGroup& b) {
    const int T = std::min(a.truncation(), b.truncation());
    std::vector<FgAbGroup> levels;
    std::vector<std::vector<GroupHom>> faces, degens;
    for (int n = 0; n <= T; ++n) levels.push_back(FgAbGroup::direct_sum(a.level(n), b.level(n)));
    auto sum = [&](const GroupHom& f, const GroupHom& g, int from, int to) {
        return GroupHom(levels[static_cast<std::size_t>(from)], levels[static_cast<std::size_t>(to)],
                        IntMatrix::direct_sum(f.matrix(), g.matrix()));
    };
    for (int n = 1; n <= T; ++n) {
        faces.emplace_back();
        for (int i = 0; i <= n; ++i) faces.back().push_back(sum(a.face(n, i), b.face(n, i), n, n - 1));
    }
    for (int n = 0; n < T; ++n) {
        degens.emplace_back();
        for (int i = 0; i <= n; ++i) degens.back().push_back(sum(a.degeneracy(n, i), b.degeneracy(n, i), n, n + 1));
    }
    return SimplicialAbGroup(std::move(levels), std::move(faces), std::move(degens));
}

// Path(X) = S(X) + X_0, with X_0 constant.
inline SimplicialAbGroup simplicial_path(const SimplicialAbGroup& g) {
    SimplicialAbGroup s = simplicial_shift(g);
    return direct_sum(s, constant_simplicial(g.level(0), s.truncation()));
}

}  // namespace omegacat
