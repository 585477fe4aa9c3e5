#pragma once

#include "omegacat/descent/cech.hpp"

namespace omegacat {

struct DeloopingReport {
    ChainComplex b;
    bool acyclic = true;
    bool kernel_recovers = true;  // c -> B injective with image exactly Ker(B -> c[1])
    bool short_exact = true;      // B -> c[1] surjective, so c is the fibre over 0
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// B_n = c_n + c_{n-1}, d(x, y) = (dx + (-1)^n y, dy); B -> c[1] is (x, y) |-> y.
inline ChainComplex delooping_complex(const ChainComplex& c) {
    if (c.empty()) return c;
    const int lo = c.min_degree(), hi = c.max_degree() + 1;
    std::vector<FgAbGroup> groups;
    for (int n = lo; n <= hi; ++n) groups.push_back(FgAbGroup::direct_sum(c.group(n), c.group(n - 1)));
    std::vector<IntMatrix> ds;
    for (int n = lo + 1; n <= hi; ++n) {
        const std::size_t xn = c.group(n).num_generators(), yn = c.group(n - 1).num_generators();
        const std::size_t xm = c.group(n - 1).num_generators(), ym = c.group(n - 2).num_generators();
        IntMatrix m(xm + ym, xn + yn);
        m.set_block(0, 0, c.d(n).matrix());
        m.set_block(0, xn, IntMatrix::scalar(xm, n % 2 == 0 ? 1 : -1));
        m.set_block(xm, xn, c.d(n - 1).matrix());
        ds.push_back(std::move(m));
    }
    return ChainComplex(lo, std::move(groups), std::move(ds));
}

inline DeloopingReport delooping_check(const ChainComplex& c) {
    DeloopingReport r;
    r.b = delooping_complex(c);
    if (c.empty()) return r;
    const ChainComplex& B = r.b;
    const ChainComplex c1 = shift_up(c);
    std::map<int, GroupHom> inc, proj;
    for (int n = B.min_degree(); n <= B.max_degree(); ++n) {
        const std::size_t xn = c.group(n).num_generators(), yn = c.group(n - 1).num_generators();
        IntMatrix i(xn + yn, xn), p(yn, xn + yn);
        i.set_block(0, 0, IntMatrix::identity(xn));
        p.set_block(0, xn, IntMatrix::identity(yn));
        inc.emplace(n, GroupHom(c.group(n), B.group(n), std::move(i)));
        proj.emplace(n, GroupHom(B.group(n), c1.group(n), std::move(p)));
    }
    ChainMap I(c, B, inc), Pr(B, c1, proj);
    for (const auto& issue : validate(B).issues) r.failures.push_back("B: " + issue.property + " " + issue.detail);
    if (!validate(I).ok()) r.failures.push_back("inclusion is not a chain map");
    if (!validate(Pr).ok()) r.failures.push_back("projection is not a chain map");
    if (!r.ok()) return r;
    for (int n = B.min_degree(); n <= B.max_degree(); ++n) {
        if (!homology(B, n).is_trivial()) {
            r.acyclic = false;
            r.failures.push_back("H_" + std::to_string(n) + "(B) = " + homology(B, n).describe());
        }
        if (!is_injective(I.at(n)) || !Subquotient(Pr.at(n), I.at(n)).group().is_trivial()) {
            r.kernel_recovers = false;
            r.failures.push_back("kernel of B -> c[1] differs from c in degree " + std::to_string(n));
        }
        if (!is_surjective(Pr.at(n))) {
            r.short_exact = false;
            r.failures.push_back("B -> c[1] not surjective in degree " + std::to_string(n));
        }
    }
    return r;
}

struct TorsorLevel {
    int open = -1;
    std::size_t cover = 0;
    int n = 0;
    FgAbGroup classes;          // H^n of the Cech cochains
    FgAbGroup shifted;          // H_{1-n} of the total complex of the shifted presheaf
    bool shift_identity = true;
};

struct TorsorTower {
    std::vector<TorsorLevel> levels;
    bool ok() const {
        return std::all_of(levels.begin(), levels.end(), [](const TorsorLevel& l) { return l.shift_identity; });
    }
};

// Cech classes H^k(V, g) for k <= n, each compared with level k-1 of the delooped presheaf g[1].
inline TorsorTower torsor_tower(const Presheaf& g, int n) {
    if (g.max_degree() > 0) throw PreconditionViolated("torsor classification needs a presheaf concentrated in degree 0");
    TorsorTower t;
    const Presheaf g1 = shift_presheaf(g);
    const FiniteSite& s = g.site();
    for (int v = 0; v < static_cast<int>(s.size()); ++v)
        for (std::size_t ci = 0; ci < s.covers(v).size(); ++ci) {
            const auto& u = s.covers(v)[ci];
            const CechComplex shifted = cech_total(g1, v, u);
            for (int k = 0; k <= n; ++k) {
                TorsorLevel l;
                l.open = v;
                l.cover = ci;
                l.n = k;
                l.classes = cech_cohomology(g, k, v, u);
                l.shifted = homology(shifted.total.complex, 1 - k);
                l.shift_identity = group_iso_test(l.classes, l.shifted);
                t.levels.push_back(std::move(l));
            }
        }
    return t;
}

}  // namespace omegacat
