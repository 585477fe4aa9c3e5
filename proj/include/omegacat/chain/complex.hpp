#pragma once

#include <map>
#include <string>

#include "omegacat/algebra/group.hpp"

namespace omegacat {

// Bounded Z-graded chain complex. Degrees outside [min_degree, max_degree] hold the trivial group.
// differentials_[i] is d_{min+i+1}: C_{min+i+1} -> C_{min+i}.
class ChainComplex {
public:
    ChainComplex() = default;

    ChainComplex(int min_degree, std::vector<FgAbGroup> groups, std::vector<IntMatrix> differentials)
        : min_(min_degree), groups_(std::move(groups)) {
        if (groups_.empty()) {
            if (!differentials.empty()) throw ShapeMismatch("differentials given for an empty complex");
            return;
        }
        if (differentials.size() + 1 != groups_.size())
            throw ShapeMismatch("expected " + std::to_string(groups_.size() - 1) + " differentials, got " +
                                std::to_string(differentials.size()));
        for (std::size_t i = 0; i < differentials.size(); ++i)
            d_.emplace_back(groups_[i + 1], groups_[i], std::move(differentials[i]));
    }

    static ChainComplex concentrated(int degree, const FgAbGroup& g) { return ChainComplex(degree, {g}, {}); }

    bool empty() const { return groups_.empty(); }
    int min_degree() const { return min_; }
    int max_degree() const { return min_ + static_cast<int>(groups_.size()) - 1; }
    std::size_t length() const { return groups_.size(); }

    FgAbGroup group(int n) const {
        if (n < min_ || n > max_degree()) return FgAbGroup::trivial();
        return groups_[static_cast<std::size_t>(n - min_)];
    }

    // d_n : C_n -> C_{n-1}
    GroupHom d(int n) const {
        if (n > min_ && n <= max_degree()) return d_[static_cast<std::size_t>(n - min_ - 1)];
        return GroupHom::zero(group(n), group(n - 1));
    }

    const std::vector<FgAbGroup>& groups() const { return groups_; }

private:
    int min_ = 0;
    std::vector<FgAbGroup> groups_;
    std::vector<GroupHom> d_;
};

struct ValidationIssue {
    std::string property;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

inline ValidationReport validate(const ChainComplex& c) {
    ValidationReport r;
    if (c.empty()) return r;
    for (int n = c.min_degree() + 2; n <= c.max_degree(); ++n)
        if (!compose(c.d(n - 1), c.d(n)).is_zero())
            r.issues.push_back({"d^2 = 0", "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0"});
    return r;
}

inline Subquotient homology_data(const ChainComplex& c, int n) { return Subquotient(c.d(n), c.d(n + 1)); }

inline FgAbGroup homology(const ChainComplex& c, int n) { return homology_data(c, n).group(); }

// Smallest and largest degree that any of the complexes occupy.
inline std::pair<int, int> degree_span(std::initializer_list<const ChainComplex*> cs) {
    bool any = false;
    int lo = 0, hi = -1;
    for (const auto* c : cs) {
        if (c->empty()) continue;
        if (!any) {
            lo = c->min_degree();
            hi = c->max_degree();
            any = true;
        } else {
            lo = std::min(lo, c->min_degree());
            hi = std::max(hi, c->max_degree());
        }
    }
    return {lo, hi};
}

class ChainMap {
public:
    ChainMap() = default;
    // components[n] : A_n -> B_n. Missing degrees are zero maps.
    ChainMap(ChainComplex source, ChainComplex target, std::map<int, GroupHom> components)
        : source_(std::move(source)), target_(std::move(target)), f_(std::move(components)) {}

    // Components as matrices, starting at degree `from`.
    static ChainMap from_matrices(ChainComplex source, ChainComplex target, int from, const std::vector<IntMatrix>& ms) {
        std::map<int, GroupHom> comps;
        for (std::size_t i = 0; i < ms.size(); ++i) {
            int n = from + static_cast<int>(i);
            comps.emplace(n, GroupHom(source.group(n), target.group(n), ms[i]));
        }
        return ChainMap(std::move(source), std::move(target), std::move(comps));
    }

    static ChainMap identity(const ChainComplex& c) {
        std::map<int, GroupHom> comps;
        for (int n = c.min_degree(); n <= c.max_degree(); ++n) comps.emplace(n, GroupHom::identity(c.group(n)));
        return ChainMap(c, c, std::move(comps));
    }

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }

    GroupHom at(int n) const {
        auto it = f_.find(n);
        if (it != f_.end()) return it->second;
        return GroupHom::zero(source_.group(n), target_.group(n));
    }

    std::pair<int, int> span() const { return degree_span({&source_, &target_}); }

private:
    ChainComplex source_, target_;
    std::map<int, GroupHom> f_;
};

inline ChainMap compose(const ChainMap& g, const ChainMap& f) {
    std::map<int, GroupHom> comps;
    auto [lo, hi] = degree_span({&f.source(), &g.target()});
    for (int n = lo; n <= hi; ++n) comps.emplace(n, compose(g.at(n), f.at(n)));
    return ChainMap(f.source(), g.target(), std::move(comps));
}

inline ValidationReport validate(const ChainMap& f) {
    ValidationReport r;
    auto [lo, hi] = f.span();
    for (int n = lo; n <= hi + 1; ++n) {
        GroupHom lhs = compose(f.target().d(n), f.at(n));
        GroupHom rhs = compose(f.at(n - 1), f.source().d(n));
        if (!lhs.equals(rhs)) r.issues.push_back({"d f = f d", "fails in degree " + std::to_string(n)});
    }
    return r;
}

inline GroupHom induced_on_homology(const ChainMap& f, int n) {
    return induced_map(homology_data(f.source(), n), homology_data(f.target(), n), f.at(n));
}

inline bool is_quasi_iso(const ChainMap& f) {
    auto [lo, hi] = f.span();
    for (int n = lo; n <= hi; ++n)
        if (!is_isomorphism(induced_on_homology(f, n))) return false;
    return true;
}

// Degreewise isomorphism check of a chain map (each component bijective).
inline bool is_chain_iso(const ChainMap& f) {
    if (!validate(f).ok()) return false;
    auto [lo, hi] = f.span();
    for (int n = lo; n <= hi; ++n)
        if (!is_isomorphism(f.at(n))) return false;
    return true;
}

// h_n : A_n -> B_{n+1}
struct ChainHomotopy {
    ChainMap F, G;
    std::map<int, GroupHom> h;

    GroupHom at(int n) const {
        auto it = h.find(n);
        if (it != h.end()) return it->second;
        return GroupHom::zero(F.source().group(n), F.target().group(n + 1));
    }
};

// d h + h d == G - F in every degree.
inline ValidationReport check_homotopy(const ChainHomotopy& H) {
    ValidationReport r;
    auto [lo, hi] = H.F.span();
    const ChainComplex& A = H.F.source();
    const ChainComplex& B = H.F.target();
    for (int n = lo; n <= hi; ++n) {
        GroupHom lhs = compose(B.d(n + 1), H.at(n)) + compose(H.at(n - 1), A.d(n));
        GroupHom rhs = H.G.at(n) - H.F.at(n);
        if (!lhs.equals(rhs)) r.issues.push_back({"dh + hd = G - F", "fails in degree " + std::to_string(n)});
    }
    return r;
}

}  // namespace omegacat
