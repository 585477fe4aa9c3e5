#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "omegacat/errors.hpp"

namespace omegacat {

// Strict omega-category on elements 0..size-1, given by lookup tables for levels 0..N.
// Levels above N act as identities.
class FiniteOmegaCat {
public:
    static constexpr std::size_t max_elements = 4096;
    static constexpr int undefined = -1;

    FiniteOmegaCat() = default;

    FiniteOmegaCat(std::size_t size, int stabilization) : n_(size), N_(stabilization) {
        if (size > max_elements) throw TooLarge(std::to_string(size) + " elements exceed the table limit");
        if (stabilization < 0) throw PreconditionViolated("negative stabilization level");
        for (int i = 0; i <= N_; ++i) {
            std::vector<int> id(n_);
            for (std::size_t x = 0; x < n_; ++x) id[x] = static_cast<int>(x);
            s_.push_back(id);
            t_.push_back(id);
            comp_.emplace_back(n_ * n_, undefined);
        }
        names_.resize(n_);
        for (std::size_t x = 0; x < n_; ++x) names_[x] = std::to_string(x);
    }

    std::size_t size() const { return n_; }
    int stabilization() const { return N_; }

    int s(int level, int x) const { return level > N_ ? x : s_[static_cast<std::size_t>(level)][static_cast<std::size_t>(x)]; }
    int t(int level, int x) const { return level > N_ ? x : t_[static_cast<std::size_t>(level)][static_cast<std::size_t>(x)]; }

    // x *_level y, or undefined.
    int compose(int level, int x, int y) const {
        if (level > N_) return x == y ? x : undefined;
        return comp_[static_cast<std::size_t>(level)][static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)];
    }

    void set_s(int level, int x, int v) { s_.at(static_cast<std::size_t>(level)).at(static_cast<std::size_t>(x)) = v; }
    void set_t(int level, int x, int v) { t_.at(static_cast<std::size_t>(level)).at(static_cast<std::size_t>(x)) = v; }
    void set_compose(int level, int x, int y, int v) {
        comp_.at(static_cast<std::size_t>(level)).at(static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)) = v;
    }

    const std::string& name(int x) const { return names_[static_cast<std::size_t>(x)]; }
    void set_name(int x, std::string s) { names_[static_cast<std::size_t>(x)] = std::move(s); }
    const std::vector<std::string>& names() const { return names_; }

    bool is_cell_of_level(int x, int level) const { return s(level, x) == x; }

    // mu(x) = min { m : s_m x = x }
    int dimension(int x) const {
        for (int m = 0; m <= N_; ++m)
            if (s(m, x) == x) return m;
        return N_;
    }

    std::vector<int> cells_of_level(int level) const {
        std::vector<int> out;
        for (std::size_t x = 0; x < n_; ++x)
            if (s(level, static_cast<int>(x)) == static_cast<int>(x)) out.push_back(static_cast<int>(x));
        return out;
    }

private:
    std::size_t n_ = 0;
    int N_ = 0;
    std::vector<std::vector<int>> s_, t_;
    std::vector<std::vector<int>> comp_;
    std::vector<std::string> names_;
};

// Fills composition tables from a rule; rule(level, x, y) is called only when s_level x == t_level y.
template <class Rule>
void fill_compositions(FiniteOmegaCat& a, Rule&& rule) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i <= a.stabilization(); ++i)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (a.s(i, x) == a.t(i, y)) a.set_compose(i, x, y, rule(i, x, y));
}

struct OmegaFunctor {
    std::shared_ptr<const FiniteOmegaCat> source, target;
    std::vector<int> map;

    int operator()(int x) const { return map[static_cast<std::size_t>(x)]; }
};

}  // namespace omegacat
