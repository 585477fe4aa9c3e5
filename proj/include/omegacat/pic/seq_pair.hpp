#pragma once

#include "omegacat/pic/pic_omega_cat.hpp"

namespace omegacat {

// Sequences of pairs (x_i^-, x_i^+), x_i^a in c_i, with d x_i^a = x_{i-1}^+ - x_{i-1}^-,
// and pairs above the top degree equal to (0, 0).
struct SeqPairElement {
    int lo = 0;
    std::vector<std::pair<IntVector, IntVector>> pairs;  // pairs[i - lo]

    const std::pair<IntVector, IntVector>& at(int i) const { return pairs[static_cast<std::size_t>(i - lo)]; }
    std::pair<IntVector, IntVector>& at(int i) { return pairs[static_cast<std::size_t>(i - lo)]; }
};

inline SeqPairElement seqpair_zero(const ChainComplex& c) {
    SeqPairElement e;
    e.lo = c.min_degree();
    for (int i = c.min_degree(); i <= c.max_degree() && !c.empty(); ++i)
        e.pairs.emplace_back(c.group(i).zero(), c.group(i).zero());
    return e;
}

inline bool seqpair_valid(const ChainComplex& c, const SeqPairElement& x) {
    for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
        const FgAbGroup g = c.group(i - 1);
        const auto& [m, p] = x.at(i);
        if (i > c.min_degree()) {
            IntVector diff = sub_vectors(x.at(i - 1).second, x.at(i - 1).first);
            if (!g.equal(c.d(i).matrix().apply(m), diff) || !g.equal(c.d(i).matrix().apply(p), diff)) return false;
        }
    }
    const auto& top = x.at(c.max_degree());
    return c.group(c.max_degree()).equal(top.first, top.second);
}

inline bool seqpair_equal(const ChainComplex& c, const SeqPairElement& x, const SeqPairElement& y) {
    for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
        const FgAbGroup g = c.group(i);
        if (!g.equal(x.at(i).first, y.at(i).first) || !g.equal(x.at(i).second, y.at(i).second)) return false;
    }
    return true;
}

inline SeqPairElement seqpair_source(const ChainComplex& c, const SeqPairElement& x, int n) {
    SeqPairElement r = x;
    for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
        if (i == n) r.at(i).second = r.at(i).first;
        if (i > n) r.at(i) = {c.group(i).zero(), c.group(i).zero()};
    }
    return r;
}

inline SeqPairElement seqpair_target(const ChainComplex& c, const SeqPairElement& x, int n) {
    SeqPairElement r = x;
    for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
        if (i == n) r.at(i).first = r.at(i).second;
        if (i > n) r.at(i) = {c.group(i).zero(), c.group(i).zero()};
    }
    return r;
}

// x *_n y = (x_0, ..., x_{n-1}, (y_n^-, x_n^+), x_{n+1} + y_{n+1}, ...)
inline SeqPairElement seqpair_compose(const ChainComplex& c, const SeqPairElement& x, const SeqPairElement& y, int n) {
    if (!seqpair_equal(c, seqpair_source(c, x, n), seqpair_target(c, y, n)))
        throw NotComposable("seq-pair composition at level " + std::to_string(n));
    SeqPairElement r = x;
    for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
        if (i == n) r.at(i) = {y.at(i).first, x.at(i).second};
        if (i > n) r.at(i) = {add_vectors(x.at(i).first, y.at(i).first), add_vectors(x.at(i).second, y.at(i).second)};
    }
    return r;
}

// (x_i) |-> ((x_i, x_i + d x_{i+1}))
inline SeqPairElement graded_to_seqpair(const ChainComplex& c, const IntVector& x) {
    SeqPairElement r = seqpair_zero(c);
    for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
        IntVector xi = graded_component(c, i, x);
        IntVector up = i < c.max_degree() ? c.d(i + 1).matrix().apply(graded_component(c, i + 1, x)) : c.group(i).zero();
        r.at(i) = {xi, add_vectors(xi, up)};
    }
    return r;
}

inline IntVector seqpair_to_graded(const ChainComplex& c, const SeqPairElement& p) {
    GradedLayout L(c);
    IntVector v(L.total, 0);
    for (int i = c.min_degree(); i <= c.max_degree(); ++i)
        for (std::size_t k = 0; k < p.at(i).first.size(); ++k) v[L.at(i) + k] = p.at(i).first[k];
    return v;
}

// P(c) realized on the seq-pair group itself, independently of the graded representation.
class SeqPairPic {
public:
    explicit SeqPairPic(ChainComplex c) : c_(std::move(c)) {
        const int lo = c_.min_degree(), hi = c_.max_degree();
        IntMatrix rel(0, 0);
        for (int i = lo; i <= hi; ++i) {
            off_.push_back(rel.rows());
            rel = IntMatrix::direct_sum(rel, IntMatrix::direct_sum(c_.group(i).relations(), c_.group(i).relations()));
        }
        ambient_ = FgAbGroup(rel);
        // Constraint rows: for i in (lo, hi], both d x_i^- and d x_i^+ equal x_{i-1}^+ - x_{i-1}^-;
        // for the top degree, x^+ - x^- = 0.
        IntMatrix cons(0, rel.rows());
        IntMatrix crel(0, 0);
        auto add_row_block = [&](const IntMatrix& blk, const FgAbGroup& g) {
            cons = IntMatrix::vstack(cons, blk);
            crel = IntMatrix::direct_sum(crel, g.relations());
        };
        for (int i = lo + 1; i <= hi + 1; ++i) {
            const FgAbGroup g = c_.group(i - 1);
            const std::size_t gm = g.num_generators();
            for (int sign = 0; sign < 2; ++sign) {
                IntMatrix blk(gm, rel.rows());
                blk.set_block(0, minus(i - 1), -IntMatrix::identity(gm));
                blk.set_block(0, plus(i - 1), IntMatrix::identity(gm));
                if (i <= hi) {
                    IntMatrix dm = -c_.d(i).matrix();
                    blk.set_block(0, sign == 0 ? minus(i) : plus(i), dm);
                }
                add_row_block(blk, g);
                if (i == hi + 1) break;
            }
        }
        FgAbGroup cgroup(crel);
        kernel_.emplace(kernel_of(GroupHom(ambient_, cgroup, cons)));
        const FgAbGroup& K = kernel_->group();
        const bool z = lo < 0;
        const int first = z ? lo : 0;
        const int last = std::max(0, hi);
        std::vector<GroupHom> s, t;
        for (int n = first; n <= last; ++n) {
            s.push_back(restrict(ambient_structure(n, true)));
            t.push_back(restrict(ambient_structure(n, false)));
        }
        cat_ = PicOmegaCat(K, first, std::move(s), std::move(t), z);
    }

    const ChainComplex& complex() const { return c_; }
    const PicOmegaCat& cat() const { return cat_; }
    const Subquotient& kernel() const { return *kernel_; }

    IntVector from_pairs(const SeqPairElement& p) const {
        IntVector v(ambient_.num_generators(), 0);
        for (int i = c_.min_degree(); i <= c_.max_degree(); ++i) {
            const auto& [m, q] = p.at(i);
            for (std::size_t k = 0; k < m.size(); ++k) {
                v[minus(i) + k] = m[k];
                v[plus(i) + k] = q[k];
            }
        }
        return kernel_->project(v);
    }

    SeqPairElement to_pairs(const IntVector& k) const {
        IntVector v = kernel_->section(k);
        SeqPairElement p = seqpair_zero(c_);
        for (int i = c_.min_degree(); i <= c_.max_degree(); ++i) {
            const std::size_t sz = c_.group(i).num_generators();
            for (std::size_t j = 0; j < sz; ++j) {
                p.at(i).first[j] = v[minus(i) + j];
                p.at(i).second[j] = v[plus(i) + j];
            }
        }
        return p;
    }

private:
    std::size_t minus(int i) const { return off_[static_cast<std::size_t>(i - c_.min_degree())]; }
    std::size_t plus(int i) const { return minus(i) + c_.group(i).num_generators(); }

    IntMatrix ambient_structure(int n, bool source) const {
        const std::size_t tot = ambient_.num_generators();
        IntMatrix m(tot, tot);
        for (int i = c_.min_degree(); i <= c_.max_degree(); ++i) {
            const std::size_t sz = c_.group(i).num_generators();
            const IntMatrix id = IntMatrix::identity(sz);
            if (i < n) {
                m.set_block(minus(i), minus(i), id);
                m.set_block(plus(i), plus(i), id);
            } else if (i == n) {
                const std::size_t from = source ? minus(i) : plus(i);
                m.set_block(minus(i), from, id);
                m.set_block(plus(i), from, id);
            }
        }
        return m;
    }

    GroupHom restrict(const IntMatrix& amb) const {
        const FgAbGroup& K = kernel_->group();
        IntMatrix m(K.num_generators(), K.num_generators());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            IntVector img = kernel_->project(amb.apply(kernel_->section(K.generator(j))));
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = img[r];
        }
        return GroupHom(K, K, std::move(m));
    }

    ChainComplex c_;
    std::vector<std::size_t> off_;
    FgAbGroup ambient_;
    std::optional<Subquotient> kernel_;
    PicOmegaCat cat_;
};

// The graded-to-seq-pair isomorphism as a group map.
inline GroupHom graded_iso(const ChainComplex& c, const SeqPairPic& sp) {
    FgAbGroup A = graded_group(c);
    IntMatrix m(sp.cat().group().num_generators(), A.num_generators());
    for (std::size_t j = 0; j < A.num_generators(); ++j) {
        IntVector img = sp.from_pairs(graded_to_seqpair(c, A.generator(j)));
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = img[r];
    }
    return GroupHom(A, sp.cat().group(), std::move(m));
}

// phi : A -> P(Q(A)), x |-> ([s_i x], [t_i x])_i, landing in the seq-pair realization of Q(A).
struct PQUnit {
    QData q;
    SeqPairPic pq;
    GroupHom phi;
};

inline PQUnit pq_unit(const PicOmegaCat& a) {
    QData q = q_data(a);
    SeqPairPic sp(q.complex);
    const FgAbGroup& A = a.group();
    IntMatrix m(sp.cat().group().num_generators(), A.num_generators());
    for (std::size_t j = 0; j < A.num_generators(); ++j) {
        IntVector x = A.generator(j);
        SeqPairElement e = seqpair_zero(q.complex);
        for (int i = q.complex.min_degree(); i <= q.complex.max_degree(); ++i)
            e.at(i) = {q.at(i).project(a.source(x, i)), q.at(i).project(a.target(x, i))};
        IntVector img = sp.from_pairs(e);
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = img[r];
    }
    GroupHom phi(A, sp.cat().group(), std::move(m));
    return {std::move(q), std::move(sp), std::move(phi)};
}

// f commutes with all structure maps of the two categories.
inline bool preserves_structure(const GroupHom& f, const PicOmegaCat& a, const PicOmegaCat& b) {
    const int lo = std::min(a.min_level(), b.min_level());
    const int hi = std::max(a.max_level(), b.max_level());
    for (int n = lo; n <= hi; ++n) {
        if (n < 0 && (!a.z_indexed() || !b.z_indexed())) continue;
        if (!compose(f, a.s(n)).equals(compose(b.s(n), f))) return false;
        if (!compose(f, a.t(n)).equals(compose(b.t(n), f))) return false;
    }
    return true;
}

}  // namespace omegacat
