#pragma once

#include <chrono>
#include <sstream>

#include "omegacat/descent/deloop.hpp"
#include "omegacat/descent/glueing.hpp"
#include "omegacat/simplicial/nerve.hpp"
#include "omegacat/verify/random.hpp"

namespace omegacat::verify {

struct CriterionResult {
    int id = 0;
    std::string tag;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

// Fixed finite complexes used by several criteria.
inline std::vector<ChainComplex> finite_corpus(std::uint64_t seed) {
    std::vector<ChainComplex> out{
        ChainComplex::concentrated(0, FgAbGroup::cyclic(2)),
        ChainComplex::concentrated(1, FgAbGroup::cyclic(2)),
        ChainComplex::concentrated(2, FgAbGroup::cyclic(3)),
        ChainComplex(0, {FgAbGroup::cyclic(4), FgAbGroup::cyclic(2)}, {IntMatrix::from_rows({{2}})}),
        ChainComplex(0, {FgAbGroup::cyclic(2), FgAbGroup::cyclic(2)}, {IntMatrix::from_rows({{1}})}),
        ChainComplex(0, {FgAbGroup::cyclic(2), FgAbGroup::cyclic(4)}, {IntMatrix::from_rows({{1}})}),
        ChainComplex(0, {FgAbGroup::cyclic(3), FgAbGroup::cyclic(3), FgAbGroup::cyclic(3)},
                     {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{0}})}),
        ChainComplex(0, {FgAbGroup::from_orders({2, 2}), FgAbGroup::cyclic(2)}, {IntMatrix::from_rows({{1}, {1}})}),
    };
    Rng rng(seed);
    while (out.size() < 20) {
        ChainComplex c = random_finite_complex(rng, Palette::Finite, 3, 64);
        out.push_back(c);
    }
    return out;
}

inline std::vector<ChainComplex> mixed_corpus(std::uint64_t seed) {
    std::vector<ChainComplex> out = finite_corpus(seed);
    out.push_back(ChainComplex(0, {FgAbGroup::free(1), FgAbGroup::free(1)}, {IntMatrix::from_rows({{2}})}));
    out.push_back(ChainComplex::concentrated(0, FgAbGroup::free(2)));
    Rng rng(seed ^ 0x5eedULL);
    for (int i = 0; i < 10; ++i) out.push_back(random_complex(rng, Palette::Mixed, 4));
    return out;
}

namespace detail {

class Collector {
public:
    void fail(const std::string& what) {
        ++failures_;
        if (notes_.size() < 3) notes_.push_back(what);
    }
    void count() { ++checks_; }
    bool ok() const { return failures_ == 0; }
    std::string summary(const std::string& passed_note) const {
        if (ok()) return passed_note;
        std::ostringstream os;
        os << failures_ << " failure(s)";
        for (const auto& n : notes_) os << "; " << n;
        return os.str();
    }

private:
    std::size_t failures_ = 0, checks_ = 0;
    std::vector<std::string> notes_;
};

// Exhaustive check that a hom of finite Picard categories commutes with every s_n, t_n.
inline bool preserves_structure_exhaustive(const GroupHom& phi, const PicOmegaCat& a, const PicOmegaCat& b) {
    FiniteIndex ia(a.group()), ib(b.group());
    FiniteHomTable f(phi, ia, ib);
    const int lo = std::min(a.min_level(), b.min_level()), hi = std::max(a.max_level(), b.max_level());
    for (int n = std::max(lo, 0); n <= hi; ++n) {
        FiniteHomTable sa(a.s(n), ia, ia), ta(a.t(n), ia, ia), sb(b.s(n), ib, ib), tb(b.t(n), ib, ib);
        for (std::size_t x = 0; x < ia.size(); ++x)
            if (f(sa(x)) != sb(f(x)) || f(ta(x)) != tb(f(x))) return false;
    }
    return true;
}

inline bool bijective_exhaustive(const GroupHom& phi) {
    FiniteIndex ia(phi.source()), ib(phi.target());
    if (ia.size() != ib.size()) return false;
    FiniteHomTable f(phi, ia, ib);
    std::vector<char> hit(ib.size(), 0);
    for (std::size_t x = 0; x < ia.size(); ++x) {
        if (hit[f(x)]) return false;
        hit[f(x)] = 1;
    }
    return true;
}

}  // namespace detail

// 1. Q(P(c)) = c through the unit, and A -> PQ(A) is a structure-preserving bijection.
inline CriterionResult criterion_roundtrip(std::uint64_t seed) {
    CriterionResult r{1, "QP/PQ roundtrip", false, "", 0};
    detail::Collector col;
    Rng rng(seed);
    std::size_t exhaustive = 0;
    for (int i = 0; i < 100; ++i) {
        ChainComplex c = random_complex(rng, Palette::Mixed, 5);
        if (!is_chain_iso(qp_unit(c))) col.fail("Q(P(c)) unit not an isomorphism for case " + std::to_string(i));
        SeqPairPic sp(c);
        for (const PicOmegaCat& A : {PicOmegaCat(p_of(c)), PicOmegaCat(sp.cat())}) {
            PQUnit u = pq_unit(A);
            if (!is_isomorphism(u.phi)) col.fail("phi not bijective for case " + std::to_string(i));
            if (!preserves_structure(u.phi, A, u.pq.cat())) col.fail("phi does not commute with s/t for case " + std::to_string(i));
            if (A.group().is_finite() && A.group().order() <= 4096) {
                ++exhaustive;
                if (!detail::bijective_exhaustive(u.phi) || !detail::preserves_structure_exhaustive(u.phi, A, u.pq.cat()))
                    col.fail("exhaustive phi check failed for case " + std::to_string(i));
            }
        }
    }
    r.passed = col.ok();
    r.detail = col.summary("100 complexes, 200 categories (" + std::to_string(exhaustive) + " checked element by element)");
    return r;
}

// 2. Axiom battery on realized Picard categories and orientals; a corrupted table is caught.
inline CriterionResult criterion_axioms(std::uint64_t seed) {
    CriterionResult r{2, "omega-category axioms", false, "", 0};
    detail::Collector col;
    std::size_t tables = 0;
    for (const auto& c : finite_corpus(seed)) {
        PicRealization real = from_pic(p_of(c));
        ++tables;
        if (!validate_axioms(*real.cat).ok()) col.fail("realization of a corpus complex violates the axioms");
    }
    for (int n = 0; n <= 3; ++n) {
        ++tables;
        AxiomReport rep = validate_axioms(*oriental(n).cat);
        if (!rep.ok()) col.fail("oriental(" + std::to_string(n) + "): " + describe(rep, *oriental(n).cat));
    }
    // (Z/2 --0--> Z/2): the composite of the two loops at 0 is redirected to the object 1.
    ChainComplex c(0, {FgAbGroup::cyclic(2), FgAbGroup::cyclic(2)}, {IntMatrix::from_rows({{0}})});
    PicRealization real = from_pic(p_of(c));
    FiniteOmegaCat broken = *real.cat;
    const int loop = static_cast<int>(real.index.index_of(graded_embed(c, 1, {1})));
    const int one = static_cast<int>(real.index.index_of(graded_embed(c, 0, {1})));
    broken.set_compose(0, loop, loop, one);
    AxiomReport rep = validate_axioms(broken);
    bool named = false;
    for (const auto& v : rep.violations)
        if (std::find(v.elements.begin(), v.elements.end(), loop) != v.elements.end()) named = true;
    if (rep.ok()) col.fail("corrupted composition table accepted");
    else if (!named) col.fail("corruption reported without the corrupted cells: " + describe(rep, broken));
    r.passed = col.ok();
    r.detail = col.summary(std::to_string(tables) + " tables valid; corrupted table rejected (" +
                           (rep.violations.empty() ? std::string("-") : rep.violations.front().axiom) + ")");
    return r;
}

// 3. Quasi-isomorphism agrees with equivalence of the realized functor.
inline CriterionResult criterion_quasi_iso(std::uint64_t seed) {
    CriterionResult r{3, "quasi-iso vs equivalence", false, "", 0};
    detail::Collector col;
    Rng rng(seed);
    int qis = 0;
    for (int i = 0; i < 50; ++i) {
        ChainComplex a = random_finite_complex(rng, Palette::Finite, 3, 32);
        ChainMap f;
        switch (i % 5) {
            case 0: f = random_chain_map(rng, a, random_finite_complex(rng, Palette::Finite, 3, 32)); break;
            case 1: f = random_chain_map(rng, a, a); break;
            case 2: {  // inclusion into a plus an acyclic complex
                ChainComplex e = delooping_complex(ChainComplex::concentrated(static_cast<int>(rng.below(2)), random_group(rng, Palette::Small)));
                ChainComplex ae = direct_sum(a, e);
                std::map<int, GroupHom> comps;
                for (int n = 0; n <= ae.max_degree(); ++n) {
                    IntMatrix m(ae.group(n).num_generators(), a.group(n).num_generators());
                    m.set_block(0, 0, IntMatrix::identity(a.group(n).num_generators()));
                    comps.emplace(n, GroupHom(a.group(n), ae.group(n), std::move(m)));
                }
                f = ChainMap(a, ae, std::move(comps));
                break;
            }
            case 3: f = add_null_homotopic(ChainMap::identity(a), random_degree_one(rng, a, a)); break;
            default: {
                ChainMap g = random_chain_map(rng, a, a);
                f = add_null_homotopic(g, random_degree_one(rng, a, a));
            }
        }
        if (!validate(f).ok()) {
            col.fail("generated map is not a chain map");
            continue;
        }
        const bool q = is_quasi_iso(f);
        qis += q;
        PicRealization ra = from_pic(p_of(f.source())), rb = from_pic(p_of(f.target()));
        const bool e = equivalence_check(realize_map(p_of_map(f), ra, rb)).ok();
        if (q != e) col.fail("case " + std::to_string(i) + ": quasi-iso " + std::to_string(q) + " vs equivalence " + std::to_string(e));
    }
    r.passed = col.ok();
    r.detail = col.summary("50 maps agree (" + std::to_string(qis) + " quasi-isomorphisms)");
    return r;
}

// 4. Nerve by oriental enumeration equals the Dold-Kan nerve.
inline CriterionResult criterion_nerve(std::uint64_t seed) {
    CriterionResult r{4, "nerve = Dold-Kan", false, "", 0};
    detail::Collector col;
    std::size_t compared = 0, simplices = 0;
    for (const auto& c : finite_corpus(seed)) {
        ++compared;
        NerveComparison cmp = compare_nerves(c, 3);
        for (auto n : cmp.enumerated) simplices += n;
        if (!cmp.ok()) col.fail(cmp.failures.front());
    }
    r.passed = col.ok();
    r.detail = col.summary(std::to_string(compared) + " complexes, levels 0..3, " + std::to_string(simplices) + " simplices matched");
    return r;
}

// 5. Oriental combinatorics.
inline CriterionResult criterion_orientals(std::uint64_t) {
    CriterionResult r{5, "oriental combinatorics", false, "", 0};
    detail::Collector col;
    for (int n = 0; n <= 3; ++n) {
        const auto& o = oriental(n);
        if (atoms(o.complex).size() != (std::size_t{1} << (n + 1)) - 1) col.fail("atom count of oriental(" + std::to_string(n) + ")");
        if (!o.freely_generated) col.fail("oriental(" + std::to_string(n) + ") not generated by atoms");
    }
    const auto& o2 = oriental(2);
    std::size_t top = 0;
    for (int x = 0; x < static_cast<int>(o2.cells.size()); ++x)
        if (o2.cat->dimension(x) == 2) ++top;
    if (top != 1) col.fail("oriental(2) has " + std::to_string(top) + " non-identity 2-cells");
    // all monotone maps [l] -> [m] for l, m <= 3
    auto monotone = [](int l, int m) {
        std::vector<MonotoneMap> out;
        MonotoneMap f(static_cast<std::size_t>(l + 1), 0);
        std::function<void(int, int)> rec = [&](int i, int from) {
            if (i > l) {
                out.push_back(f);
                return;
            }
            for (int v = from; v <= m; ++v) {
                f[static_cast<std::size_t>(i)] = v;
                rec(i + 1, v);
            }
        };
        rec(0, 0);
        return out;
    };
    std::size_t triples = 0;
    for (int l = 0; l <= 3; ++l)
        for (int m = 0; m <= 3; ++m)
            for (const auto& alpha : monotone(l, m)) {
                OmegaFunctor fa = induced_map(alpha, m);
                if (!validate_functor(fa).ok()) col.fail("induced map is not a functor");
                for (int n = 0; n <= 3; ++n)
                    for (const auto& beta : monotone(m, n)) {
                        ++triples;
                        if (compose(induced_map(beta, n), fa).map != induced_map(compose_maps(beta, alpha), n).map)
                            col.fail("O(beta o alpha) != O(beta) o O(alpha)");
                    }
                MonotoneMap id(static_cast<std::size_t>(m + 1));
                for (int v = 0; v <= m; ++v) id[static_cast<std::size_t>(v)] = v;
                if (compose(induced_map(id, m), fa).map != fa.map) col.fail("identity law");
            }
    r.passed = col.ok();
    r.detail = col.summary("atoms 1,3,7,15; one top 2-cell; " + std::to_string(triples) + " composable pairs of monotone maps");
    return r;
}

// The two presheaves that separate Cech descent from the levelwise sheaf condition.
struct SeparatingExamples {
    Presheaf acyclic_at_top;   // passes Cech descent, not levelwise a sheaf
    Presheaf delooped_constant;  // levelwise a sheaf, fails Cech descent
};

inline SeparatingExamples separating_examples() {
    auto site = std::make_shared<const FiniteSite>(circle_site());
    std::vector<ChainComplex> cs(site->size());
    cs[static_cast<std::size_t>(site->find("X"))] =
        ChainComplex(0, {FgAbGroup::cyclic(2), FgAbGroup::cyclic(2)}, {IntMatrix::identity(1)});
    return {Presheaf(site, cs, {}), constant_presheaf(site, ChainComplex::concentrated(1, FgAbGroup::free(1)))};
}

// 6. Cech descent = omega-descent on random presheaves; the separating examples behave as expected.
inline CriterionResult criterion_descent(std::uint64_t seed) {
    CriterionResult r{6, "Cech descent = omega-descent", false, "", 0};
    detail::Collector col;
    Rng rng(seed);
    int passing = 0, inconsistencies = 0;
    for (int i = 0; i < 200; ++i) {
        auto site = std::make_shared<const FiniteSite>(random_site(rng));
        Presheaf f = random_presheaf(rng, site);
        if (!validate_presheaf(f).ok()) {
            col.fail("generated presheaf invalid");
            continue;
        }
        try {
            GlueingReport g = omega_descent_check(f, f.max_degree() + 1);
            if (g.ok() != g.cech.ok()) col.fail("verdicts differ on presheaf " + std::to_string(i));
            passing += g.ok();
        } catch (const InternalInconsistency& e) {
            ++inconsistencies;
            col.fail(e.what());
        }
    }
    SeparatingExamples ex = separating_examples();
    const bool e1_cech = cech_descent_check(ex.acyclic_at_top).ok();
    const bool e1_sheaf = levelwise_sheaf_violations(ex.acyclic_at_top).empty();
    const bool e2_cech = cech_descent_check(ex.delooped_constant).ok();
    const bool e2_sheaf = levelwise_sheaf_violations(ex.delooped_constant).empty();
    if (!e1_cech || e1_sheaf) col.fail("first separating example: Cech " + std::to_string(e1_cech) + ", levelwise sheaf " + std::to_string(e1_sheaf));
    if (e2_cech || !e2_sheaf) col.fail("second separating example: Cech " + std::to_string(e2_cech) + ", levelwise sheaf " + std::to_string(e2_sheaf));
    for (const Presheaf* f : {&ex.acyclic_at_top, &ex.delooped_constant}) try {
            GlueingReport g = omega_descent_check(*f, f->max_degree() + 1);
            if (g.ok() != g.cech.ok()) col.fail("separating example verdicts differ");
        } catch (const InternalInconsistency& e) {
            ++inconsistencies;
            col.fail(e.what());
        }
    r.passed = col.ok();
    r.detail = col.summary("200 presheaves agree (" + std::to_string(passing) + " satisfy descent), " +
                           std::to_string(inconsistencies) + " inconsistencies; separating examples reproduced");
    return r;
}

// Random truncated simplicial groups: Gamma of a random finite complex, sometimes plus a constant one.
inline SimplicialAbGroup random_simplicial(Rng& rng, int T) {
    ChainComplex c = random_finite_complex(rng, Palette::Finite, 3, 64);
    SimplicialAbGroup g = dk_inverse(c, T);
    if (rng.chance(1, 3)) g = direct_sum(g, constant_simplicial(random_group(rng, Palette::Small), T));
    return g;
}

// 7. pi_{n+1}(g) = pi_n(L g); loop o shift_up = id.
inline CriterionResult criterion_loop_shift(std::uint64_t seed) {
    CriterionResult r{7, "loop-shift ladder", false, "", 0};
    detail::Collector col;
    Rng rng(seed);
    const int T = 4;
    std::size_t groups_compared = 0;
    for (int i = 0; i < 50; ++i) {
        SimplicialAbGroup g = random_simplicial(rng, T);
        SimplicialAbGroup L = simplicial_loop(g);
        if (!validate_simplicial(L).ok()) col.fail("loop is not simplicial");
        for (int n = 0; n + 1 < T - 0 && n < L.truncation(); ++n) {
            ++groups_compared;
            if (!group_iso_test(homotopy_groups(g, n + 1), homotopy_groups(L, n)))
                col.fail("pi_" + std::to_string(n + 1) + "(g) != pi_" + std::to_string(n) + "(Lg) in case " + std::to_string(i));
        }
        ChainComplex c = random_complex(rng, Palette::Mixed, 4);
        ChainComplex back = loop(shift_up(c));
        bool same = back.min_degree() == c.min_degree() && back.length() == c.length();
        for (int n = c.min_degree(); same && n <= c.max_degree(); ++n)
            same = back.group(n).relations() == c.group(n).relations() && back.d(n).matrix() == c.d(n).matrix();
        if (!same) col.fail("loop(shift_up(c)) differs from c in case " + std::to_string(i));
    }
    r.passed = col.ok();
    r.detail = col.summary("50 simplicial groups, " + std::to_string(groups_compared) + " homotopy groups matched; 50 loop(shift_up) identities");
    return r;
}

// 8. Delooping complex is acyclic with kernel c; W-bar shifts homology up by one.
inline CriterionResult criterion_delooping(std::uint64_t seed) {
    CriterionResult r{8, "delooping and W-bar", false, "", 0};
    detail::Collector col;
    std::size_t corpus = 0;
    for (const auto& c : mixed_corpus(seed)) {
        ++corpus;
        DeloopingReport d = delooping_check(c);
        if (!d.ok()) col.fail(d.failures.front());
    }
    Rng rng(seed);
    for (int i = 0; i < 20; ++i) {
        SimplicialAbGroup g = random_simplicial(rng, 3);
        SimplicialAbGroup w = wbar(g);
        if (!validate_simplicial(w).ok()) col.fail("W-bar is not simplicial");
        ChainComplex kw = normalized_chains(w), kg = normalized_chains(g);
        for (int n = 0; n < w.truncation(); ++n) {
            FgAbGroup lhs = homology(kw, n);
            FgAbGroup rhs = n == 0 ? FgAbGroup::trivial() : homotopy_groups(g, n - 1);
            if (!group_iso_test(lhs, rhs)) col.fail("H_" + std::to_string(n) + "(K W-bar g) mismatch in case " + std::to_string(i));
        }
    }
    r.passed = col.ok();
    r.detail = col.summary(std::to_string(corpus) + " complexes delooped; 20 W-bar comparisons");
    return r;
}

// 9. Cech cohomology of the circle; the torsor tower shift identity.
inline CriterionResult criterion_gerbes(std::uint64_t seed) {
    CriterionResult r{9, "Cech classification", false, "", 0};
    detail::Collector col;
    auto site = std::make_shared<const FiniteSite>(circle_site());
    Presheaf z = constant_presheaf(site, ChainComplex::concentrated(0, FgAbGroup::free(1)));
    const int X = site->find("X");
    const auto& u = site->covers(X)[0];
    const std::vector<std::string> expected{"Z", "Z", "0"};
    std::string got;
    for (int n = 0; n <= 2; ++n) {
        std::string h = cech_cohomology(z, n, X, u).describe();
        got += (n ? ", " : "") + h;
        if (h != expected[static_cast<std::size_t>(n)]) col.fail("H^" + std::to_string(n) + " = " + h);
    }
    std::vector<Presheaf> corpus{z, constant_presheaf(site, ChainComplex::concentrated(0, FgAbGroup::cyclic(2)))};
    Rng rng(seed);
    for (int i = 0; i < 10; ++i) {
        auto s = std::make_shared<const FiniteSite>(random_site(rng));
        corpus.push_back(random_presheaf(rng, s, 1));
    }
    for (const auto& g : corpus)
        if (!torsor_tower(g, 2).ok()) col.fail("torsor tower shift identity fails");
    r.passed = col.ok();
    r.detail = col.summary("circle: H^0, H^1, H^2 = " + got + "; tower identity on " + std::to_string(corpus.size()) + " presheaves");
    return r;
}

// 10. Chain homotopies and Picard homotopies correspond.
inline CriterionResult criterion_homotopies(std::uint64_t seed) {
    CriterionResult r{10, "homotopy correspondence", false, "", 0};
    detail::Collector col;
    Rng rng(seed);
    std::size_t exhaustive = 0;
    for (int i = 0; i < 50; ++i) {
        ChainComplex a = random_finite_complex(rng, Palette::Finite, 3, 64);
        ChainComplex b = random_finite_complex(rng, Palette::Finite, 3, 64);
        ChainMap F = random_chain_map(rng, a, b);
        ChainHomotopy h{F, add_null_homotopic(F, random_degree_one(rng, a, b)), random_degree_one(rng, a, b)};
        h.G = add_null_homotopic(F, h.h);
        if (!check_homotopy(h).ok()) col.fail("generated homotopy fails d h + h d = G - F");
        GroupHom H = homotopy_to_pic(h);
        if (!pic_homotopy_identity(h, H)) col.fail("D H + H D != G - F for case " + std::to_string(i));
        ChainHomotopy back = homotopy_from_pic(h.F, h.G, H);
        for (int n = a.min_degree(); n <= a.max_degree(); ++n)
            if (!back.at(n).equals(h.at(n))) col.fail("roundtrip h -> H -> h differs in case " + std::to_string(i));
        if (!homotopy_to_pic(back).equals(H)) col.fail("roundtrip H -> h -> H differs in case " + std::to_string(i));
        // element by element
        PicOmegaCat pa = p_of(a), pb = p_of(b);
        FiniteIndex ia(pa.group()), ib(pb.group());
        FiniteHomTable tH(H, ia, ib), Da(pic_differential(pa), ia, ia), Db(pic_differential(pb), ib, ib),
            tF(p_of_map(h.F), ia, ib), tG(p_of_map(h.G), ia, ib);
        for (std::size_t x = 0; x < ia.size(); ++x)
            if (ib.add(Db(tH(x)), tH(Da(x))) != ib.sub(tG(x), tF(x))) {
                col.fail("D H + H D != G - F at an element in case " + std::to_string(i));
                break;
            }
        ++exhaustive;
    }
    r.passed = col.ok();
    r.detail = col.summary("50 homotopies roundtrip; identity checked on every element of " + std::to_string(exhaustive) + " instances");
    return r;
}

// 11. Alternating and full normalized Cech complexes agree.
inline CriterionResult criterion_alternating(std::uint64_t) {
    CriterionResult r{11, "alternating vs full Cech", false, "", 0};
    detail::Collector col;
    auto site = std::make_shared<const FiniteSite>(two_open_site());
    const int X = site->find("X");
    ChainComplex c(0, {FgAbGroup::cyclic(2), FgAbGroup::cyclic(4)}, {IntMatrix::from_rows({{2}})});
    Presheaf f = direct_sum(constant_presheaf(site, c), point_presheaf(site, ChainComplex::concentrated(1, FgAbGroup::free(1)), 0b101));
    CechComplex alt = cech_total(f, X, site->covers(X)[0]);
    CechComplex full = cech_total_full(f, X, site->covers(X)[0], f.max_degree() + 3);
    std::string got;
    for (int n = 0; n <= 1; ++n) {
        FgAbGroup a = homology(alt.total.complex, n), b = homology(full.total.complex, n);
        got += (n ? ", H_1 = " : "H_0 = ") + a.describe();
        if (!group_iso_test(a, b)) col.fail("H_" + std::to_string(n) + ": " + a.describe() + " vs " + b.describe());
    }
    r.passed = col.ok();
    r.detail = col.summary(got + " in both");
    return r;
}

using CriterionFn = CriterionResult (*)(std::uint64_t);

inline const std::vector<CriterionFn>& criteria() {
    static const std::vector<CriterionFn> all{criterion_roundtrip, criterion_axioms,     criterion_quasi_iso, criterion_nerve,
                                              criterion_orientals, criterion_descent,    criterion_loop_shift, criterion_delooping,
                                              criterion_gerbes,    criterion_homotopies, criterion_alternating};
    return all;
}

// Runs one criterion; exceptions count as failures except InternalInconsistency, which propagates.
inline CriterionResult run_criterion(std::size_t i, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = criteria().at(i)(seed);
    } catch (const InternalInconsistency&) {
        throw;
    } catch (const std::exception& e) {
        r.id = static_cast<int>(i) + 1;
        r.tag = "criterion " + std::to_string(i + 1);
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.tag << ": " << r.detail;
    return os.str();
}

}  // namespace omegacat::verify
