#pragma once

#include "omegacat/algebra/finite_index.hpp"
#include "omegacat/descent/cech.hpp"

namespace omegacat {

struct GlueingVerdict {
    int open = -1;
    std::size_t cover = 0;
    int k = 0;
    bool exists = true;  // every compatible family glues
    bool unique = true;  // a global object that glues to zero is zero up to isomorphism
    std::string method;  // "enumeration" or "lattice"
    std::optional<IntVector> obstruction;     // degree-0 cocycle of Tot with no global glueing
    std::optional<IntVector> kernel_witness;  // global object, nonzero up to iso, whose family is trivial

    bool ok() const { return exists && unique; }
};

namespace detail {

inline std::vector<char> subgroup_closure(const FiniteIndex& idx, const std::vector<std::size_t>& gens) {
    std::vector<char> seen(idx.size(), 0);
    std::vector<std::size_t> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t g : gens) {
            std::size_t y = idx.add(queue[i], g);
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
        }
    return seen;
}

inline std::vector<std::size_t> generator_images(const GroupHom& f, const FiniteIndex& tgt) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < f.source().num_generators(); ++j) out.push_back(tgt.index_of(f.matrix().apply(f.source().generator(j))));
    return out;
}

inline IntMatrix first_rows(const IntMatrix& m, std::size_t rows) { return m.block(0, 0, rows, m.cols()); }

}  // namespace detail

// 0-glueing for the cover u of v, decided on cocycles and coboundaries of Tot in degree 0.
// Brute-force enumeration when the groups involved are small and finite, lattice arithmetic otherwise.
inline GlueingVerdict zero_glueing_check(const Presheaf& f, int v, std::size_t ci, std::uint64_t enumeration_limit = 1u << 20) {
    GlueingVerdict out;
    out.open = v;
    out.cover = ci;
    const CechComplex c = cech_total(f, v, f.site().covers(v)[ci]);
    const ChainComplex& tot = c.total.complex;
    const ChainComplex& fv = f.at(v);
    const FgAbGroup T0 = tot.group(0), Tm1 = tot.group(-1), F0 = fv.group(0);
    const GroupHom D0 = tot.d(0), D1 = tot.d(1), eps = c.augmentation.at(0), dF = fv.d(1);

    auto small = [&](const FgAbGroup& g) { return g.is_finite() && g.order() <= Integer(enumeration_limit); };
    if (small(T0) && small(Tm1) && small(F0)) {
        out.method = "enumeration";
        FiniteIndex i0(T0), im1(Tm1), iF(F0);
        FiniteHomTable d0(D0, i0, im1), e(eps, iF, i0);
        std::vector<char> bound = detail::subgroup_closure(i0, detail::generator_images(D1, i0));
        auto glue_gens = detail::generator_images(D1, i0);
        for (std::size_t g : detail::generator_images(eps, i0)) glue_gens.push_back(g);
        std::vector<char> glued = detail::subgroup_closure(i0, glue_gens);
        for (std::size_t z = 0; z < i0.size(); ++z)
            if (d0(z) == 0 && !glued[z]) {
                out.exists = false;
                out.obstruction = i0.element(z);
                break;
            }
        std::vector<char> bound_f = detail::subgroup_closure(iF, detail::generator_images(dF, iF));
        for (std::size_t x = 0; x < iF.size(); ++x)
            if (bound[e(x)] && !bound_f[x]) {
                out.unique = false;
                out.kernel_witness = iF.element(x);
                break;
            }
        return out;
    }

    out.method = "lattice";
    const std::size_t g0 = T0.num_generators(), gF = F0.num_generators();
    IntMatrix cyc = detail::first_rows(kernel_basis(IntMatrix::hstack(D0.matrix(), Tm1.relations())), g0);
    Lattice glued(IntMatrix::hstack(IntMatrix::hstack(eps.matrix(), D1.matrix()), T0.relations()));
    for (std::size_t j = 0; j < cyc.cols(); ++j)
        if (!glued.contains(cyc.column(j))) {
            out.exists = false;
            out.obstruction = cyc.column(j);
            break;
        }
    IntMatrix killed = detail::first_rows(
        kernel_basis(IntMatrix::hstack(IntMatrix::hstack(eps.matrix(), D1.matrix().scaled(-1)), T0.relations().scaled(-1))), gF);
    Lattice bound_f(IntMatrix::hstack(dF.matrix(), F0.relations()));
    for (std::size_t j = 0; j < killed.cols(); ++j)
        if (!bound_f.contains(killed.column(j))) {
            out.unique = false;
            out.kernel_witness = killed.column(j);
            break;
        }
    return out;
}

// k-glueing reduces to 0-glueing of the k-fold loop presheaf (loops at the zero object).
inline GlueingVerdict k_glueing_check(const Presheaf& f, int k, int v, std::size_t ci) {
    GlueingVerdict r = zero_glueing_check(loop_presheaf(f, k), v, ci);
    r.k = k;
    return r;
}

struct GlueingReport {
    std::vector<GlueingVerdict> entries;
    CechDescentReport cech;
    bool ok() const {
        return std::all_of(entries.begin(), entries.end(), [](const GlueingVerdict& v) { return v.ok(); });
    }
};

// Unique k-glueing for k <= k_max at every open and cover, checked against Cech descent degree by degree.
inline GlueingReport omega_descent_check(const Presheaf& f, int k_max) {
    if (k_max < f.max_degree() + 1)
        throw PreconditionViolated("k_max must be at least the top degree plus one (" + std::to_string(f.max_degree() + 1) + ")");
    GlueingReport r;
    r.cech = cech_descent_check(f);
    Presheaf lk = f;
    const FiniteSite& s = f.site();
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) lk = loop_presheaf(lk);
        std::size_t e = 0;
        for (int v = 0; v < static_cast<int>(s.size()); ++v)
            for (std::size_t ci = 0; ci < s.covers(v).size(); ++ci, ++e) {
                GlueingVerdict g = zero_glueing_check(lk, v, ci);
                g.k = k;
                const auto& fails = r.cech.entries[e].failing_degrees;
                const bool cech_ok = std::find(fails.begin(), fails.end(), k) == fails.end();
                if (cech_ok != g.ok())
                    throw InternalInconsistency("descent checkers disagree at " + s.name(v) + ", cover #" + std::to_string(ci) +
                                                ", degree " + std::to_string(k) + ": Cech " + (cech_ok ? "iso" : "not iso") +
                                                ", glueing exists=" + (g.exists ? "1" : "0") + " unique=" + (g.unique ? "1" : "0"));
                r.entries.push_back(std::move(g));
            }
    }
    for (const auto& c : r.cech.entries)
        for (int n : c.failing_degrees)
            if (n > k_max) throw InternalInconsistency("Cech failure in degree " + std::to_string(n) + " beyond the glueing depth");
    return r;
}

}  // namespace omegacat
