#pragma once

#include "gip/formula.hpp"
#include "gip/interval.hpp"

#include <map>
#include <vector>

namespace gip {

enum class SolveStatus { SAT, UNSAT_AT_RESOLUTION, BUDGET_EXHAUSTED };

struct SolveStats {
  long nodes_explored = 0;
  long max_depth = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::UNSAT_AT_RESOLUTION;
  std::map<VarId, Interval> box;    // SAT only
  bool midpoint_exact = false;      // midpoint satisfies with tol = 0
  Rational resolution;              // echoed tolerance
  SolveStats stats;

  Assignment midpoint() const {
    Assignment a;
    for (const auto& [v, iv] : box) a[v] = iv.mid();
    return a;
  }
};

namespace detail {

using Box = std::vector<Interval>;

struct IndexedConstraint {
  ConstraintKind kind;
  std::vector<std::size_t> vars;
};

// One round of constraint propagation. Returns false when a variable domain
// becomes empty. Domains are positive (lo >= 1/2), so division is safe.
inline bool contract_once(const std::vector<IndexedConstraint>& cs, Box& box, bool& changed) {
  auto tighten = [&](std::size_t v, const Interval& with) {
    Interval next = intersect(box[v], with);
    if (!(next == box[v])) {
      box[v] = next;
      changed = true;
    }
    return !box[v].empty();
  };
  const Interval top{Rational(-1000000), Rational(1000000)};
  for (const auto& c : cs) {
    switch (c.kind) {
      case ConstraintKind::CONST_ONE: {
        if (!tighten(c.vars[0], {1, 1})) return false;
        break;
      }
      case ConstraintKind::ADD_EQ: {
        auto [x, y, z] = std::tuple{c.vars[0], c.vars[1], c.vars[2]};
        if (!tighten(z, box[x] + box[y])) return false;
        if (!tighten(x, box[z] - box[y])) return false;
        if (!tighten(y, box[z] - box[x])) return false;
        break;
      }
      case ConstraintKind::ADD_LEQ: {
        auto [x, y, z] = std::tuple{c.vars[0], c.vars[1], c.vars[2]};
        if (!tighten(z, {box[x].lo + box[y].lo, top.hi})) return false;
        if (!tighten(x, {top.lo, box[z].hi - box[y].lo})) return false;
        if (!tighten(y, {top.lo, box[z].hi - box[x].lo})) return false;
        break;
      }
      case ConstraintKind::ADD_GEQ: {
        auto [x, y, z] = std::tuple{c.vars[0], c.vars[1], c.vars[2]};
        if (!tighten(z, {top.lo, box[x].hi + box[y].hi})) return false;
        if (!tighten(x, {box[z].lo - box[y].hi, top.hi})) return false;
        if (!tighten(y, {box[z].lo - box[x].hi, top.hi})) return false;
        break;
      }
      case ConstraintKind::INV_EQ: {
        auto [x, y] = std::pair{c.vars[0], c.vars[1]};
        if (!tighten(x, reciprocal_positive(box[y]))) return false;
        if (!tighten(y, reciprocal_positive(box[x]))) return false;
        break;
      }
      case ConstraintKind::INV_LEQ: {
        auto [x, y] = std::pair{c.vars[0], c.vars[1]};
        if (!tighten(x, {top.lo, Rational(1) / box[y].lo})) return false;
        if (!tighten(y, {top.lo, Rational(1) / box[x].lo})) return false;
        break;
      }
      case ConstraintKind::INV_GEQ: {
        auto [x, y] = std::pair{c.vars[0], c.vars[1]};
        if (!tighten(x, {Rational(1) / box[y].hi, top.hi})) return false;
        if (!tighten(y, {Rational(1) / box[x].hi, top.hi})) return false;
        break;
      }
    }
  }
  return true;
}

inline bool contract(const std::vector<IndexedConstraint>& cs, Box& box) {
  for (int round = 0; round < 16; ++round) {
    bool changed = false;
    if (!contract_once(cs, box, changed)) return false;
    if (!changed) return true;
  }
  return true;
}

}  // namespace detail

// Interval branch-and-prune over [lo,hi]^n. Depth-first, lower half first,
// bisecting the widest variable, so the first SAT box found is the
// lexicographically smallest; deterministic for fixed inputs.
inline SolveResult solve_formula(const Formula& f, const Rational& tol = Rational(1, 1000000),
                                 long budget = 200000) {
  SolveResult result;
  result.resolution = tol;

  std::map<VarId, std::size_t> index;
  for (std::size_t i = 0; i < f.variables.size(); ++i) index[f.variables[i]] = i;
  std::vector<detail::IndexedConstraint> cs;
  for (const auto& c : f.constraints) {
    detail::IndexedConstraint ic{c.kind, {}};
    for (const auto& v : c.operands) ic.vars.push_back(index.at(v));
    cs.push_back(ic);
  }

  struct Node {
    detail::Box box;
    long depth;
  };
  std::vector<Node> stack;
  stack.push_back({detail::Box(f.variables.size(), Interval{f.lo, f.hi}), 0});

  while (!stack.empty()) {
    if (result.stats.nodes_explored >= budget) {
      result.status = SolveStatus::BUDGET_EXHAUSTED;
      return result;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    ++result.stats.nodes_explored;
    result.stats.max_depth = std::max(result.stats.max_depth, node.depth);

    if (!detail::contract(cs, node.box)) continue;

    std::size_t widest = 0;
    Rational w = -1;
    for (std::size_t i = 0; i < node.box.size(); ++i)
      if (node.box[i].width() > w) {
        w = node.box[i].width();
        widest = i;
      }

    if (w <= tol) {
      Assignment mid;
      for (std::size_t i = 0; i < f.variables.size(); ++i)
        mid[f.variables[i]] = node.box[i].mid();
      if (evaluate(f, mid, tol).status == EvalStatus::SAT) {
        result.status = SolveStatus::SAT;
        for (std::size_t i = 0; i < f.variables.size(); ++i)
          result.box[f.variables[i]] = node.box[i];
        result.midpoint_exact = evaluate(f, mid, 0).status == EvalStatus::SAT;
        return result;
      }
      continue;  // refuted at this resolution
    }

    Rational m = node.box[widest].mid();
    Node hi_half{node.box, node.depth + 1};
    hi_half.box[widest].lo = m;
    Node lo_half{std::move(node.box), node.depth + 1};
    lo_half.box[widest].hi = m;
    stack.push_back(std::move(hi_half));
    stack.push_back(std::move(lo_half));  // explored first
  }

  result.status = SolveStatus::UNSAT_AT_RESOLUTION;
  return result;
}

}  // namespace gip
