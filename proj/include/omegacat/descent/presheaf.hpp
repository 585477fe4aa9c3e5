#pragma once

#include <deque>
#include <functional>
#include <memory>

#include "omegacat/chain/constructions.hpp"
#include "omegacat/descent/site.hpp"

namespace omegacat {

// Presheaf of chain complexes (degrees >= 0) on a finite site. restriction(a, b) : F(b) -> F(a) for a <= b.
class Presheaf {
public:
    Presheaf() = default;

    // Restrictions are given on some pairs; the rest are composed along chains of given pairs.
    // Pairs with no chain default to zero when either end is the zero complex.
    Presheaf(std::shared_ptr<const FiniteSite> site, std::vector<ChainComplex> complexes,
             const std::map<std::pair<int, int>, ChainMap>& given)
        : site_(std::move(site)), complexes_(std::move(complexes)) {
        const int n = static_cast<int>(site_->size());
        if (complexes_.size() != site_->size()) throw ShapeMismatch("one complex per open expected");
        for (const auto& [ab, m] : given) {
            if (!site_->leq(ab.first, ab.second)) throw PreconditionViolated("restriction given for " + site_->name(ab.first) + " not below " + site_->name(ab.second));
            restrictions_.emplace(ab, m);
        }
        for (int b = 0; b < n; ++b) {
            // breadth-first descent from b along given pairs
            std::map<int, ChainMap> reach;
            reach.emplace(b, ChainMap::identity(at(b)));
            std::deque<int> queue{b};
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                for (const auto& [ab, m] : given)
                    if (ab.second == x && !reach.count(ab.first)) {
                        reach.emplace(ab.first, compose(m, reach.at(x)));
                        queue.push_back(ab.first);
                    }
            }
            for (int a = 0; a < n; ++a) {
                if (a == b || !site_->leq(a, b) || restrictions_.count({a, b})) continue;
                if (auto it = reach.find(a); it != reach.end()) {
                    restrictions_.emplace(std::pair{a, b}, ChainMap(at(b), at(a), collect(it->second)));
                } else if (is_zero_complex(at(a)) || is_zero_complex(at(b))) {
                    restrictions_.emplace(std::pair{a, b}, ChainMap(at(b), at(a), {}));
                } else {
                    throw PreconditionViolated("no restriction from " + site_->name(b) + " to " + site_->name(a));
                }
            }
        }
    }

    const FiniteSite& site() const { return *site_; }
    std::shared_ptr<const FiniteSite> site_ptr() const { return site_; }
    const ChainComplex& at(int open) const { return complexes_.at(static_cast<std::size_t>(open)); }
    const std::vector<ChainComplex>& complexes() const { return complexes_; }

    ChainMap restriction(int a, int b) const {
        if (a == b) return ChainMap::identity(at(a));
        auto it = restrictions_.find({a, b});
        if (it == restrictions_.end()) throw PreconditionViolated(site_->name(a) + " is not below " + site_->name(b));
        return it->second;
    }

    int max_degree() const {
        int m = 0;
        for (const auto& c : complexes_)
            if (!c.empty()) m = std::max(m, c.max_degree());
        return m;
    }

    static bool is_zero_complex(const ChainComplex& c) {
        for (const auto& g : c.groups())
            if (!g.is_trivial()) return false;
        return true;
    }

private:
    static std::map<int, GroupHom> collect(const ChainMap& m) {
        std::map<int, GroupHom> out;
        auto [lo, hi] = m.span();
        for (int n = lo; n <= hi; ++n) out.emplace(n, m.at(n));
        return out;
    }

    std::shared_ptr<const FiniteSite> site_;
    std::vector<ChainComplex> complexes_;
    std::map<std::pair<int, int>, ChainMap> restrictions_;
};

// Same complex on every open except the empty one, identity restrictions.
inline Presheaf constant_presheaf(std::shared_ptr<const FiniteSite> site, const ChainComplex& c) {
    std::vector<ChainComplex> cs;
    std::map<std::pair<int, int>, ChainMap> given;
    const int n = static_cast<int>(site->size());
    for (int a = 0; a < n; ++a) cs.push_back(a == site->empty_open() ? ChainComplex() : c);
    for (auto [a, b] : site->covering_relations())
        given.emplace(std::pair{a, b}, a == site->empty_open() ? ChainMap(c, ChainComplex(), {}) : ChainMap::identity(c));
    return Presheaf(std::move(site), std::move(cs), given);
}

// Applies a functor of complexes openwise.
inline Presheaf map_presheaf(const Presheaf& f, const std::function<ChainComplex(const ChainComplex&)>& on_complex,
                             const std::function<ChainMap(const ChainMap&)>& on_map) {
    std::vector<ChainComplex> cs;
    std::map<std::pair<int, int>, ChainMap> given;
    const int n = static_cast<int>(f.site().size());
    for (int a = 0; a < n; ++a) cs.push_back(on_complex(f.at(a)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && f.site().leq(a, b)) {
                ChainMap m = on_map(f.restriction(a, b));
                std::map<int, GroupHom> comps;
                auto [lo, hi] = m.span();
                for (int k = lo; k <= hi; ++k) comps.emplace(k, m.at(k));
                given.emplace(std::pair{a, b}, ChainMap(cs[static_cast<std::size_t>(b)], cs[static_cast<std::size_t>(a)], std::move(comps)));
            }
    return Presheaf(f.site_ptr(), std::move(cs), given);
}

inline Presheaf loop_presheaf(const Presheaf& f, int k = 1) {
    Presheaf r = f;
    for (int i = 0; i < k; ++i)
        r = map_presheaf(r, [](const ChainComplex& c) { return loop(c); }, [](const ChainMap& m) { return loop_map(m); });
    return r;
}

inline Presheaf shift_presheaf(const Presheaf& f) {
    return map_presheaf(
        f, [](const ChainComplex& c) { return shift_up(c); },
        [](const ChainMap& m) {
            std::map<int, GroupHom> comps;
            auto [lo, hi] = m.span();
            for (int n = lo; n <= hi; ++n) comps.emplace(n + 1, m.at(n));
            return ChainMap(shift_up(m.source()), shift_up(m.target()), std::move(comps));
        });
}

inline ValidationReport validate_presheaf(const Presheaf& f) {
    ValidationReport r;
    const FiniteSite& s = f.site();
    const int n = static_cast<int>(s.size());
    for (int a = 0; a < n; ++a) {
        const ChainComplex& c = f.at(a);
        for (const auto& issue : validate(c).issues) r.issues.push_back({issue.property, s.name(a) + ": " + issue.detail});
        if (!c.empty() && c.min_degree() < 0) r.issues.push_back({"degrees >= 0", s.name(a)});
        if (a == s.empty_open() && !Presheaf::is_zero_complex(c)) r.issues.push_back({"vanishes on the empty open", s.name(a)});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !s.leq(a, b)) continue;
            const std::string pair = s.name(a) + "<=" + s.name(b);
            ChainMap rab = f.restriction(a, b);
            for (const auto& issue : validate(rab).issues) r.issues.push_back({"chain map", pair + ": " + issue.detail});
            for (int c = 0; c < n; ++c) {
                if (c == b || !s.leq(b, c)) continue;
                ChainMap lhs = f.restriction(a, c), rhs = compose(rab, f.restriction(b, c));
                auto [lo, hi] = lhs.span();
                for (int k = lo; k <= hi; ++k)
                    if (!lhs.at(k).equals(rhs.at(k))) {
                        r.issues.push_back({"functoriality", pair + "<=" + s.name(c) + " in degree " + std::to_string(k)});
                        break;
                    }
            }
        }
    return r;
}

// Degreewise equalizer condition: F(V)_q -> prod F(U_i)_q => prod F(U_ij)_q for every cover.
struct SheafViolation {
    int open = -1;
    std::size_t cover = 0;
    int degree = 0;
    std::string detail;
};

inline std::vector<SheafViolation> levelwise_sheaf_violations(const Presheaf& f) {
    std::vector<SheafViolation> out;
    const FiniteSite& s = f.site();
    for (int v = 0; v < static_cast<int>(s.size()); ++v)
        for (std::size_t ci = 0; ci < s.covers(v).size(); ++ci) {
            const auto& u = s.covers(v)[ci];
            const std::size_t m = u.size();
            const int top = f.max_degree();
            for (int q = 0; q <= top; ++q) {
                const FgAbGroup fv = f.at(v).group(q);
                IntMatrix rel0(0, 0), rel1(0, 0);
                std::vector<std::size_t> off0, off1;
                std::vector<std::pair<std::size_t, std::size_t>> pairs;
                for (std::size_t i = 0; i < m; ++i) {
                    off0.push_back(rel0.rows());
                    rel0 = IntMatrix::direct_sum(rel0, f.at(u[i]).group(q).relations());
                }
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = i + 1; j < m; ++j) {
                        pairs.emplace_back(i, j);
                        off1.push_back(rel1.rows());
                        rel1 = IntMatrix::direct_sum(rel1, f.at(s.meet(u[i], u[j])).group(q).relations());
                    }
                FgAbGroup c0(rel0), c1(rel1);
                IntMatrix eps(c0.num_generators(), fv.num_generators());
                for (std::size_t i = 0; i < m; ++i) eps.set_block(off0[i], 0, f.restriction(u[i], v).at(q).matrix());
                IntMatrix delta(c1.num_generators(), c0.num_generators());
                for (std::size_t k = 0; k < pairs.size(); ++k) {
                    auto [i, j] = pairs[k];
                    const int w = s.meet(u[i], u[j]);
                    delta.set_block(off1[k], off0[j], f.restriction(w, u[j]).at(q).matrix());
                    delta.set_block(off1[k], off0[i], f.restriction(w, u[i]).at(q).matrix().scaled(-1));
                }
                GroupHom e(fv, c0, eps), d(c0, c1, delta);
                if (!is_injective(e)) {
                    out.push_back({v, ci, q, "restriction to the cover is not injective"});
                    continue;
                }
                // image of e equals the kernel of d
                Subquotient quotient(d, e);
                if (!quotient.group().is_trivial()) out.push_back({v, ci, q, "compatible families that do not glue"});
            }
        }
    return out;
}

}  // namespace omegacat
