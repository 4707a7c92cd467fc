#include "mpart/solver.hpp"

#include "mpart/error.hpp"
#include "mpart/recognize.hpp"

#include <bit>
#include <cmath>

namespace mpart {

namespace {

using Clock = std::chrono::steady_clock;

struct State {
    std::vector<std::uint64_t> domain;
    std::vector<int> part;
    std::uint64_t used = 0;  // parts holding at least one vertex
};

/// Parts i and j get the same class when swapping them maps the matrix to
/// itself. Twin rows form an equivalence relation.
std::vector<int> part_classes(const PatternMatrix& m) {
    const int k = m.order();
    std::vector<int> cls(k, -1);
    for (int i = 0; i < k; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = i;
        for (int j = i + 1; j < k; ++j) {
            if (cls[j] >= 0 || m(i, i) != m(j, j)) continue;
            bool same = true;
            for (int x = 0; x < k && same; ++x) {
                if (x != i && x != j) same = m(i, x) == m(j, x);
            }
            if (same) cls[j] = i;
        }
    }
    return cls;
}

class Engine {
public:
    Engine(const Graph& g, const PatternMatrix& m, bool break_symmetry,
           std::optional<Clock::time_point> deadline = std::nullopt)
        : g_(g), m_(m), deadline_(deadline) {
        if (break_symmetry) classes_ = part_classes(m);
    }

    std::optional<State> initial(const std::optional<ListConstraint>& lists) const {
        const int n = g_.order();
        const std::uint64_t full = m_.order() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_.order()) - 1;
        State s;
        s.domain.assign(n, full);
        s.part.assign(n, -1);
        if (lists) {
            if (static_cast<int>(lists->allowed.size()) != n) {
                throw Error(Errc::BadParameters, "list constraint size differs from graph order");
            }
            for (int v = 0; v < n; ++v) {
                if (lists->allowed[v] & ~full) {
                    throw Error(Errc::ListPartOutOfRange, "list of vertex " + std::to_string(v) +
                                                              " names a part outside the matrix");
                }
                s.domain[v] &= lists->allowed[v];
                if (s.domain[v] == 0) return std::nullopt;
            }
        }
        return s;
    }

    /// Places v in part p and prunes every unassigned domain. False on a wipe-out.
    bool assign(State& s, int v, int p) const {
        s.part[v] = p;
        s.domain[v] = std::uint64_t{1} << p;
        s.used |= std::uint64_t{1} << p;
        const auto adj_ok = m_.edge_allowed(p);
        const auto non_adj_ok = m_.non_edge_allowed(p);
        for (int u = 0; u < g_.order(); ++u) {
            if (u == v || s.part[u] >= 0) continue;
            s.domain[u] &= g_.adjacent(u, v) ? adj_ok : non_adj_ok;
            if (s.domain[u] == 0) return false;
        }
        return true;
    }

    /// Removes part p from the domains of `vs`. False on a wipe-out.
    bool forbid(State& s, VertexSet vs, int p) const {
        for (int u : members(vs)) {
            if (s.part[u] >= 0) {
                if (s.part[u] == p) return false;
                continue;
            }
            s.domain[u] &= ~(std::uint64_t{1} << p);
            if (s.domain[u] == 0) return false;
        }
        return true;
    }

    std::optional<PartAssignment> search(const State& s) {
        if (aborted_) return std::nullopt;
        if (deadline_ && (++nodes_ & 1023) == 0 && Clock::now() > *deadline_) {
            aborted_ = true;
            return std::nullopt;
        }
        int pick = -1;
        int best = 65;
        for (int v = 0; v < g_.order(); ++v) {
            if (s.part[v] >= 0) continue;
            const int size = std::popcount(s.domain[v]);
            if (size < best) {
                best = size;
                pick = v;
            }
        }
        if (pick < 0) return PartAssignment{s.part};
        std::uint64_t tried_empty_classes = 0;
        for (std::uint64_t rest = s.domain[pick]; rest; rest &= rest - 1) {
            const int p = std::countr_zero(rest);
            if (!classes_.empty() && !((s.used >> p) & 1U)) {
                // An empty part is interchangeable with an equivalent empty
                // part already tried at this node.
                const auto cls_bit = std::uint64_t{1} << classes_[p];
                if (tried_empty_classes & cls_bit) continue;
                tried_empty_classes |= cls_bit;
            }
            State child = s;
            if (!assign(child, pick, p)) continue;
            if (auto found = search(child)) return found;
            if (aborted_) return std::nullopt;
        }
        return std::nullopt;
    }

    bool aborted() const { return aborted_; }

private:
    const Graph& g_;
    const PatternMatrix& m_;
    std::vector<int> classes_;
    std::optional<Clock::time_point> deadline_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

BoundedSolve run_solve(const Graph& g, const PatternMatrix& m, const std::optional<ListConstraint>& lists,
                       std::optional<Clock::time_point> deadline) {
    if (!lists) {
        if (const int d = first_diagonal_star(m); d >= 0) {
            return {true, PartAssignment{std::vector<int>(g.order(), d)}};
        }
    }
    Engine engine(g, m, !lists.has_value(), deadline);
    auto start = engine.initial(lists);
    if (!start) return {true, std::nullopt};
    auto witness = engine.search(*start);
    return {!engine.aborted(), std::move(witness)};
}

}  // namespace

bool validate(const Graph& g, const PatternMatrix& m, const PartAssignment& assignment) {
    const int n = g.order();
    if (static_cast<int>(assignment.parts.size()) != n) {
        throw Error(Errc::BadParameters, "assignment covers " + std::to_string(assignment.parts.size()) +
                                             " vertices, graph has " + std::to_string(n));
    }
    for (int p : assignment.parts) {
        if (p < 0 || p >= m.order()) throw Error(Errc::PartOutOfRange, "part " + std::to_string(p) + " out of range");
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const Entry e = m(assignment.parts[u], assignment.parts[v]);
            if (e == Entry::One && !g.adjacent(u, v)) return false;
            if (e == Entry::Zero && g.adjacent(u, v)) return false;
        }
    }
    return true;
}

std::optional<PartAssignment> solve(const Graph& g, const PatternMatrix& m, const std::optional<ListConstraint>& lists) {
    return run_solve(g, m, lists, std::nullopt).witness;
}

BoundedSolve solve_until(const Graph& g, const PatternMatrix& m, Clock::time_point deadline,
                         const std::optional<ListConstraint>& lists) {
    return run_solve(g, m, lists, deadline);
}

SplitSolve solve_split_detailed(const Graph& g, const PatternMatrix& m) {
    const auto split = split_partition(g);
    if (!split) throw Error(Errc::NotSplit, "input graph is not split");
    const auto form = normalize_block_form(m);
    const std::vector<int> zero_parts(form.perm.begin(), form.perm.begin() + form.k);
    const std::vector<int> one_parts(form.perm.begin() + form.k, form.perm.end());

    for (int i : zero_parts) {
        for (int j : one_parts) {
            if (m(i, j) != Entry::Star) continue;
            PartAssignment a{std::vector<int>(g.order(), i)};
            for (int v : members(split->clique)) a.parts[v] = j;
            return {SplitRoute::StarInC, std::move(a)};
        }
    }

    // Slots: each zero-diagonal part picks its clique occupant (or none),
    // then each one-diagonal part picks its independent occupant (or none).
    struct Slot {
        int part;
        VertexSet candidates;
    };
    std::vector<Slot> slots;
    for (int i : zero_parts) slots.push_back({i, split->clique});
    for (int j : one_parts) slots.push_back({j, split->independent});

    Engine engine(g, m, false);
    auto start = engine.initial(std::nullopt);
    if (!start) return {SplitRoute::Occupants, std::nullopt};

    auto recurse = [&](auto&& self, const State& s, std::size_t slot) -> std::optional<PartAssignment> {
        if (slot == slots.size()) return engine.search(s);
        const auto [p, candidates] = slots[slot];
        {
            State none = s;
            if (engine.forbid(none, candidates, p)) {
                if (auto found = self(self, none, slot + 1)) return found;
            }
        }
        for (int v : members(candidates)) {
            if (s.part[v] >= 0 || !((s.domain[v] >> p) & 1U)) continue;
            State child = s;
            if (!engine.assign(child, v, p)) continue;
            if (auto found = self(self, child, slot + 1)) return found;
        }
        return std::nullopt;
    };
    return {SplitRoute::Occupants, recurse(recurse, *start, 0)};
}

std::optional<PartAssignment> solve_split(const Graph& g, const PatternMatrix& m) {
    return solve_split_detailed(g, m).witness;
}

std::uint64_t count_partitions(const Graph& g, const PatternMatrix& m) {
    const int n = g.order();
    const int k = m.order();
    if (n > 10 || k > 4) throw Error(Errc::TooLarge, "count_partitions is limited to n <= 10 and m <= 4");
    std::uint64_t count = 0;
    PartAssignment a{std::vector<int>(n, 0)};
    while (true) {
        if (validate(g, m, a)) ++count;
        int pos = 0;
        while (pos < n && a.parts[pos] == k - 1) a.parts[pos++] = 0;
        if (pos == n) break;
        ++a.parts[pos];
    }
    return count;
}

}  // namespace mpart
