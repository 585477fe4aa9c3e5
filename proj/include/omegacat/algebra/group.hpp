#pragma once

#include <memory>
#include <string>

#include "omegacat/algebra/smith.hpp"

namespace omegacat {

// Z^g / colspan(R). Immutable; copies share the precomputed Smith data.
class FgAbGroup {
public:
    FgAbGroup() : FgAbGroup(IntMatrix(0, 0)) {}

    explicit FgAbGroup(IntMatrix relations) {
        auto d = std::make_shared<Data>();
        d->relations = std::move(relations);
        d->smith = smith_normal_form(d->relations);
        const std::size_t g = d->relations.rows();
        const std::size_t r = d->relations.cols();
        for (std::size_t i = 0; i < g; ++i) {
            Integer m = i < std::min(g, r) ? d->smith.D(i, i) : Integer(0);
            if (m == 1) continue;
            d->coords.push_back(i);
            d->moduli.push_back(m);
        }
        data_ = std::move(d);
    }

    static FgAbGroup trivial() { return FgAbGroup(); }
    static FgAbGroup free(std::size_t rank) { return FgAbGroup(IntMatrix(rank, 0)); }
    // One generator per entry, entry 0 meaning a copy of Z.
    static FgAbGroup from_orders(const std::vector<Integer>& orders) {
        return FgAbGroup(IntMatrix::diagonal(orders));
    }
    static FgAbGroup cyclic(const Integer& order) { return from_orders({order}); }

    static FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
        return FgAbGroup(IntMatrix::direct_sum(a.relations(), b.relations()));
    }

    std::size_t num_generators() const { return data_->relations.rows(); }
    const IntMatrix& relations() const { return data_->relations; }
    const SmithForm& smith() const { return data_->smith; }

    // Canonical coordinates: torsion moduli (>1, dividing chain) then 0 for each free summand.
    const std::vector<Integer>& moduli() const { return data_->moduli; }
    std::size_t canonical_dim() const { return data_->moduli.size(); }

    std::vector<Integer> invariant_factors() const {
        std::vector<Integer> f;
        for (const auto& m : data_->moduli)
            if (m != 0) f.push_back(m);
        return f;
    }
    std::size_t free_rank() const {
        std::size_t n = 0;
        for (const auto& m : data_->moduli)
            if (m == 0) ++n;
        return n;
    }
    bool is_trivial() const { return data_->moduli.empty(); }
    bool is_finite() const { return free_rank() == 0; }

    Integer order() const {
        if (!is_finite()) throw InfiniteGroup("group has free rank " + std::to_string(free_rank()));
        Integer n = 1;
        for (const auto& m : data_->moduli) n *= m;
        return n;
    }

    IntVector canonical(const IntVector& x) const {
        check_length(x);
        IntVector c(data_->coords.size());
        for (std::size_t k = 0; k < data_->coords.size(); ++k) {
            const std::size_t i = data_->coords[k];
            Integer y = 0;
            for (std::size_t j = 0; j < x.size(); ++j)
                if (x[j] != 0) y += data_->smith.U(i, j) * x[j];
            const Integer& m = data_->moduli[k];
            c[k] = m == 0 ? y : floor_mod(y, m);
        }
        return c;
    }

    IntVector lift(const IntVector& c) const {
        if (c.size() != data_->coords.size()) throw ShapeMismatch("canonical coordinate length");
        IntVector x(num_generators(), 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            const std::size_t i = data_->coords[k];
            for (std::size_t j = 0; j < x.size(); ++j) x[j] += data_->smith.U_inv(j, i) * c[k];
        }
        return x;
    }

    IntVector reduce(const IntVector& x) const { return lift(canonical(x)); }
    bool is_zero(const IntVector& x) const { return is_zero_vector(canonical(x)); }
    bool equal(const IntVector& x, const IntVector& y) const { return is_zero(sub_vectors(x, y)); }
    IntVector zero() const { return IntVector(num_generators(), 0); }
    IntVector generator(std::size_t i) const { return unit_vector(num_generators(), i); }

    // Canonical generator k (the image of the k-th canonical unit vector).
    IntVector canonical_generator(std::size_t k) const { return lift(unit_vector(canonical_dim(), k)); }

    // All elements as canonical representatives, in lexicographic order of canonical coordinates.
    std::vector<IntVector> elements() const {
        if (!is_finite()) throw InfiniteGroup("cannot enumerate a group with free rank");
        std::vector<IntVector> out;
        IntVector c(canonical_dim(), 0);
        for (;;) {
            out.push_back(lift(c));
            std::size_t k = c.size();
            while (k > 0) {
                --k;
                if (++c[k] < data_->moduli[k]) break;
                c[k] = 0;
                if (k == 0) return out;
            }
            if (c.empty()) return out;
        }
    }

    std::string describe() const {
        if (is_trivial()) return "0";
        std::string s;
        for (const auto& m : data_->moduli) {
            if (!s.empty()) s += " + ";
            s += m == 0 ? std::string("Z") : "Z/" + m.str();
        }
        return s;
    }

private:
    struct Data {
        IntMatrix relations;
        SmithForm smith;
        std::vector<std::size_t> coords;
        std::vector<Integer> moduli;
    };

    void check_length(const IntVector& x) const {
        if (x.size() != num_generators()) throw ShapeMismatch("element length does not match generator count");
    }

    std::shared_ptr<const Data> data_;
};

inline bool group_iso_test(const FgAbGroup& a, const FgAbGroup& b) { return a.moduli() == b.moduli(); }

inline std::vector<IntVector> enumerate_elements(const FgAbGroup& g) { return g.elements(); }

class GroupHom {
public:
    GroupHom() = default;
    GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
        if (matrix_.rows() != target_.num_generators() || matrix_.cols() != source_.num_generators())
            throw ShapeMismatch("hom matrix is " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + ", expected " +
                                std::to_string(target_.num_generators()) + "x" +
                                std::to_string(source_.num_generators()));
        const IntMatrix& r = source_.relations();
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (!target_.is_zero(matrix_.apply(r.column(j))))
                throw IllDefinedHom("relation " + std::to_string(j) + " is not sent to zero");
    }

    static GroupHom zero(const FgAbGroup& s, const FgAbGroup& t) {
        return GroupHom(s, t, IntMatrix(t.num_generators(), s.num_generators()));
    }
    static GroupHom identity(const FgAbGroup& g) {
        return GroupHom(g, g, IntMatrix::identity(g.num_generators()));
    }

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    IntVector apply(const IntVector& x) const { return target_.reduce(matrix_.apply(x)); }

    bool is_zero() const {
        for (std::size_t j = 0; j < matrix_.cols(); ++j)
            if (!target_.is_zero(matrix_.column(j))) return false;
        return true;
    }

    bool equals(const GroupHom& o) const {
        if (matrix_.rows() != o.matrix_.rows() || matrix_.cols() != o.matrix_.cols()) return false;
        for (std::size_t j = 0; j < matrix_.cols(); ++j)
            if (!target_.equal(matrix_.column(j), o.matrix_.column(j))) return false;
        return true;
    }

    // Matrix in canonical coordinates of source and target, entries reduced.
    IntMatrix canonical_matrix() const {
        IntMatrix m(target_.canonical_dim(), source_.canonical_dim());
        for (std::size_t k = 0; k < source_.canonical_dim(); ++k) {
            IntVector img = target_.canonical(matrix_.apply(source_.canonical_generator(k)));
            for (std::size_t i = 0; i < img.size(); ++i) m(i, k) = img[i];
        }
        return m;
    }

private:
    FgAbGroup source_, target_;
    IntMatrix matrix_;
};

// g after f
inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
    return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}
inline GroupHom operator+(const GroupHom& a, const GroupHom& b) {
    return GroupHom(a.source(), a.target(), a.matrix() + b.matrix());
}
inline GroupHom operator-(const GroupHom& a, const GroupHom& b) {
    return GroupHom(a.source(), a.target(), a.matrix() - b.matrix());
}
inline GroupHom operator-(const GroupHom& a) { return GroupHom(a.source(), a.target(), -a.matrix()); }
inline GroupHom scale(const GroupHom& a, const Integer& k) {
    return GroupHom(a.source(), a.target(), a.matrix().scaled(k));
}

// Ker(f) / Im(g) for A --f--> B with C --g--> A and f g = 0.
// `group` is in canonical invariant-factor form (diagonal presentation, no trivial factors).
class Subquotient {
public:
    Subquotient(const GroupHom& ker_of, const GroupHom& mod_image_of) : ambient_(ker_of.source()) {
        const FgAbGroup& A = ker_of.source();
        const FgAbGroup& B = ker_of.target();
        if (mod_image_of.target().num_generators() != A.num_generators())
            throw ShapeMismatch("subquotient maps do not share the middle group");
        const std::size_t a = A.num_generators();

        // Elements x with f(x) in the relation lattice of B.
        IntMatrix kgens;
        if (B.num_generators() == 0) {
            kgens = IntMatrix::identity(a);
        } else {
            IntMatrix k = kernel_basis(IntMatrix::hstack(ker_of.matrix(), B.relations()));
            kgens = k.block(0, 0, a, k.cols());
        }
        cycles_ = Lattice(kgens);

        const IntMatrix& mg = mod_image_of.matrix();
        for (std::size_t j = 0; j < mg.cols(); ++j)
            if (!B.is_zero(ker_of.matrix().apply(mg.column(j))))
                throw CompositeNonzero("composite is nonzero on generator " + std::to_string(j));

        IntMatrix igens = IntMatrix::hstack(mg, A.relations());
        std::vector<IntVector> coords;
        for (std::size_t j = 0; j < igens.cols(); ++j) {
            auto z = cycles_.solve(igens.column(j));
            if (!z) throw InternalInconsistency("boundary outside cycle lattice");
            coords.push_back(std::move(*z));
        }
        presentation_ = FgAbGroup(IntMatrix::from_columns(cycles_.rank(), coords));
        group_ = FgAbGroup::from_orders(presentation_.moduli());
    }

    const FgAbGroup& ambient() const { return ambient_; }
    const FgAbGroup& group() const { return group_; }

    bool contains(const IntVector& x) const { return cycles_.contains(x); }

    // Class of a kernel element, in the coordinates of group().
    IntVector project(const IntVector& x) const {
        auto z = cycles_.solve(x);
        if (!z) throw PreconditionViolated("element is not in the kernel");
        return presentation_.canonical(*z);
    }

    // A kernel element representing the class c.
    IntVector section(const IntVector& c) const {
        return cycles_.basis().apply(presentation_.lift(c));
    }

private:
    FgAbGroup ambient_;
    Lattice cycles_;
    FgAbGroup presentation_;
    FgAbGroup group_;
};

inline Subquotient subquotient(const GroupHom& ker_of, const GroupHom& mod_image_of) {
    return Subquotient(ker_of, mod_image_of);
}

inline Subquotient kernel_of(const GroupHom& f) {
    return Subquotient(f, GroupHom::zero(FgAbGroup::trivial(), f.source()));
}

inline Subquotient cokernel_of(const GroupHom& f) {
    return Subquotient(GroupHom::zero(f.target(), FgAbGroup::trivial()), f);
}

// Map between subquotients induced by f (which must carry cycles to cycles and boundaries to boundaries).
inline GroupHom induced_map(const Subquotient& from, const Subquotient& to, const GroupHom& f) {
    const FgAbGroup& s = from.group();
    IntMatrix m(to.group().num_generators(), s.num_generators());
    for (std::size_t j = 0; j < s.num_generators(); ++j) {
        IntVector img = to.project(f.matrix().apply(from.section(s.generator(j))));
        for (std::size_t i = 0; i < img.size(); ++i) m(i, j) = img[i];
    }
    return GroupHom(s, to.group(), std::move(m));
}

inline bool is_injective(const GroupHom& f) { return kernel_of(f).group().is_trivial(); }
inline bool is_surjective(const GroupHom& f) { return cokernel_of(f).group().is_trivial(); }
inline bool is_isomorphism(const GroupHom& f) { return is_injective(f) && is_surjective(f); }

// Canonical invariant-factor form of a group, with the identifying maps.
inline Subquotient canonical_form(const FgAbGroup& g) {
    return Subquotient(GroupHom::zero(g, FgAbGroup::trivial()), GroupHom::zero(FgAbGroup::trivial(), g));
}

}  // namespace omegacat
