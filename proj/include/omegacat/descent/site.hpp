#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "omegacat/errors.hpp"

namespace omegacat {

// Finite poset of opens with explicit covers. leq(a, b) means a is contained in b.
class FiniteSite {
public:
    using Cover = std::vector<int>;

    FiniteSite() = default;

    int add_open(std::string name) {
        names_.push_back(std::move(name));
        for (auto& row : leq_) row.push_back(0);
        leq_.emplace_back(names_.size(), 0);
        leq_.back().back() = 1;
        covers_.emplace_back();
        return static_cast<int>(names_.size()) - 1;
    }

    // Records a <= b and closes transitively.
    void add_leq(int a, int b) {
        check(a);
        check(b);
        leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        const std::size_t n = names_.size();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (leq_[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (leq_[k][j]) leq_[i][j] = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && leq_[i][j] && leq_[j][i]) throw PreconditionViolated("order relation has a cycle through " + names_[i]);
    }

    void add_cover(int v, Cover members) {
        check(v);
        for (int m : members) {
            check(m);
            if (!leq(m, v)) throw PreconditionViolated(names_[static_cast<std::size_t>(m)] + " is not below " + names_[static_cast<std::size_t>(v)]);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        covers_[static_cast<std::size_t>(v)].push_back(std::move(members));
    }

    // The designated empty open, on which every presheaf must vanish.
    void set_empty(int e) {
        check(e);
        empty_ = e;
    }
    int empty_open() const { return empty_; }

    std::size_t size() const { return names_.size(); }
    const std::string& name(int a) const { return names_.at(static_cast<std::size_t>(a)); }
    int find(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
    }
    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
    const std::vector<Cover>& covers(int v) const { return covers_.at(static_cast<std::size_t>(v)); }

    // Greatest lower bound, or MissingMeet.
    int meet(int a, int b) const {
        int best = -1;
        for (int c = 0; c < static_cast<int>(size()); ++c)
            if (leq(c, a) && leq(c, b) && (best < 0 || leq(best, c))) best = c;
        if (best < 0) throw MissingMeet("no common lower bound of " + name(a) + " and " + name(b));
        for (int c = 0; c < static_cast<int>(size()); ++c)
            if (leq(c, a) && leq(c, b) && !leq(c, best)) throw MissingMeet("no meet of " + name(a) + " and " + name(b));
        return best;
    }

    int meet(const std::vector<int>& opens) const {
        if (opens.empty()) throw PreconditionViolated("meet of an empty family");
        int m = opens.front();
        for (std::size_t i = 1; i < opens.size(); ++i) m = meet(m, opens[i]);
        return m;
    }

    // Pairs a < b with nothing strictly between.
    std::vector<std::pair<int, int>> covering_relations() const {
        std::vector<std::pair<int, int>> out;
        const int n = static_cast<int>(size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b || !leq(a, b)) continue;
                bool direct = true;
                for (int c = 0; c < n && direct; ++c)
                    if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
                if (direct) out.emplace_back(a, b);
            }
        return out;
    }

private:
    void check(int a) const {
        if (a < 0 || static_cast<std::size_t>(a) >= names_.size()) throw PreconditionViolated("unknown open #" + std::to_string(a));
    }

    std::vector<std::string> names_;
    std::vector<std::vector<char>> leq_;
    std::vector<std::vector<Cover>> covers_;
    int empty_ = -1;
};

// Subsets of a point set, ordered by inclusion; every pairwise intersection of listed opens
// must itself be listed. Opens are given as bitmasks over the points.
inline FiniteSite point_set_site(const std::vector<std::pair<std::string, unsigned>>& opens) {
    FiniteSite s;
    for (const auto& [name, mask] : opens) {
        int id = s.add_open(name);
        if (mask == 0) s.set_empty(id);
    }
    for (std::size_t a = 0; a < opens.size(); ++a)
        for (std::size_t b = 0; b < opens.size(); ++b)
            if (a != b && (opens[a].second & ~opens[b].second) == 0) s.add_leq(static_cast<int>(a), static_cast<int>(b));
    return s;
}

// X covered by U0, U1, U2 with pairwise overlaps U01, U12, U02 and empty triple overlap.
inline FiniteSite circle_site() {
    FiniteSite s = point_set_site({{"X", 0b111111},
                                   {"U0", 0b100011},
                                   {"U1", 0b000111},
                                   {"U2", 0b111100},
                                   {"U01", 0b000011},
                                   {"U12", 0b000100},
                                   {"U02", 0b100000},
                                   {"empty", 0}});
    s.add_cover(s.find("X"), {s.find("U0"), s.find("U1"), s.find("U2")});
    return s;
}

// X covered by two opens U, V with overlap W.
inline FiniteSite two_open_site() {
    FiniteSite s = point_set_site({{"X", 0b111}, {"U", 0b011}, {"V", 0b110}, {"W", 0b010}});
    s.add_cover(s.find("X"), {s.find("U"), s.find("V")});
    return s;
}

}  // namespace omegacat
