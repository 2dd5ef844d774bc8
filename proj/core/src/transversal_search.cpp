#include "transversal_search.hpp"

#include <algorithm>

#include "turanforge/errors.hpp"

namespace turanforge::detail {

int TransversalCsp::add_var(std::size_t class_id) {
  vars_.push_back({class_id, a_.class_size_at(class_id), {}, {}});
  return static_cast<int>(vars_.size()) - 1;
}

void TransversalCsp::add_edge(std::size_t triple_id, int var_ij, int var_ik, int var_jk) {
  const std::array<int, 3> vars{var_ij, var_ik, var_jk};
  const auto last = static_cast<std::size_t>(std::max_element(vars.begin(), vars.end()) - vars.begin());
  int middle = -1;
  for (std::size_t r = 0; r < 3; ++r)
    if (r != last) middle = std::max(middle, vars[r]);
  edges_.push_back({triple_id, vars, last});
  vars_[static_cast<std::size_t>(middle)].triggers.push_back(edges_.size() - 1);
}

void TransversalCsp::forbid(int first, int second, const BitMatrix& forbidden) {
  if (first == second) throw ArgumentError("a cherry needs two distinct transversal entries");
  forbids_.push_back({first, second, &forbidden});
  vars_[static_cast<std::size_t>(std::max(first, second))].forbids.push_back(forbids_.size() - 1);
}

BitView TransversalCsp::completion(const Edge& e) const {
  const auto val = [&](std::size_t r) { return static_cast<std::size_t>(values_[static_cast<std::size_t>(e.vars[r])]); };
  const auto size_of = [&](std::size_t r) {
    return static_cast<std::size_t>(a_.class_size_at(vars_[static_cast<std::size_t>(e.vars[r])].class_id));
  };
  switch (e.last_role) {
  case 2: return a_.table(e.triple, Orientation::Left).row(val(0) * size_of(1) + val(1));
  case 1: return a_.table(e.triple, Orientation::Middle).row(val(0) * size_of(2) + val(2));
  default: return a_.table(e.triple, Orientation::Right).row(val(1) * size_of(2) + val(2));
  }
}

bool TransversalCsp::descend(std::size_t depth) {
  if (depth == vars_.size()) return true;
  const Var& var = vars_[depth];
  const Bitset& dom = domains_[depth][depth];
  for (std::size_t v = dom.first(); v < dom.size(); v = dom.next(v + 1)) {
    if (*nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++*nodes_;
    values_[depth] = static_cast<int>(v);
    bool ok = true;
    for (std::size_t fi : var.forbids) {
      const Forbid& f = forbids_[fi];
      const auto x = static_cast<std::size_t>(values_[static_cast<std::size_t>(f.first)]);
      const auto y = static_cast<std::size_t>(values_[static_cast<std::size_t>(f.second)]);
      if (f.forbidden->test(x, y)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Bitset>& next = domains_[depth + 1];
    for (std::size_t w = depth + 1; w < vars_.size(); ++w) next[w] = domains_[depth][w];
    for (std::size_t ei : var.triggers) {
      const Edge& e = edges_[ei];
      Bitset& target = next[static_cast<std::size_t>(e.vars[e.last_role])];
      target &= completion(e);
      if (target.none()) {
        ok = false;
        break;
      }
    }
    if (ok && descend(depth + 1)) return true;
    if (exhausted_) return false;
  }
  return false;
}

SearchStatus TransversalCsp::solve(std::uint64_t budget, std::uint64_t& nodes, std::vector<int>& values) {
  values_.assign(vars_.size(), -1);
  std::vector<Bitset> full;
  for (const Var& v : vars_) full.push_back(Bitset::full(static_cast<std::size_t>(v.size)));
  domains_.assign(vars_.size() + 1, full);
  nodes_ = &nodes;
  budget_ = budget;
  exhausted_ = false;
  const bool found = !vars_.empty() && std::none_of(full.begin(), full.end(), [](const Bitset& b) { return b.none(); }) &&
                     descend(0);
  if (found || vars_.empty()) {
    values = values_;
    return SearchStatus::Found;
  }
  return exhausted_ ? SearchStatus::BudgetExhausted : SearchStatus::Absent;
}

} // namespace turanforge::detail
