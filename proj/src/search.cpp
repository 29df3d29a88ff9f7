#include "braidcalc/search.hpp"

#include <algorithm>
#include <unordered_map>

#include "braidcalc/error.hpp"
#include "braidcalc/lmove.hpp"
#include "braidcalc/temperley_lieb.hpp"

namespace braidcalc {

namespace {

using Steps = std::vector<MoveStep>;

const BraidWord& last_word(const BraidWord& start, const Steps& steps) {
  return steps.empty() ? start : steps.back().result;
}

void append_free_reduce(const BraidWord& start, Steps& steps) {
  const BraidWord& cur = last_word(start, steps);
  MoveStep step = free_reduce_step(cur);
  if (step.result != cur) steps.push_back(std::move(step));
}

// Steps from w to the representative its memo key is read from.
Steps normalize(const BraidWord& w, MoveSet moves) {
  Steps steps;
  append_free_reduce(w, steps);
  if (moves == MoveSet::lmove) return steps;
  while (true) {
    const BraidWord& cur = last_word(w, steps);
    if (cur.length() < 2 || cur.letters().front() != cur.letters().back().inverse()) break;
    steps.push_back(rotate_step(cur, 1));
    steps.push_back(cancel_pair_step(steps.back().result, 0));
  }
  const BraidWord cur = last_word(w, steps);
  std::size_t best = 0;
  BraidWord best_word = cur;
  for (std::size_t k = 1; k < cur.length(); ++k) {
    BraidWord r = commute_rotate(cur, k);
    if (r < best_word) {
      best = k;
      best_word = std::move(r);
    }
  }
  if (best != 0) steps.push_back(rotate_step(cur, best));
  return steps;
}

std::string encode(const BraidWord& w) {
  std::string key;
  key.reserve(w.length() + 1);
  key.push_back(static_cast<char>(w.strands()));
  for (const auto& l : w.letters()) key.push_back(static_cast<char>(l.generator * l.exponent));
  return key;
}

Steps reverse_steps(const BraidWord& start, const Steps& steps) {
  Steps out;
  for (std::size_t i = steps.size(); i-- > 0;) {
    const BraidWord& before = i == 0 ? start : steps[i - 1].result;
    for (auto& s : reverse_step(before, steps[i])) out.push_back(std::move(s));
  }
  return out;
}

struct Bounds {
  int strands;
  std::size_t length;
  bool admits(const BraidWord& w) const { return w.strands() <= strands && w.length() <= length; }
};

std::vector<Steps> markov_neighbours(const BraidWord& w, const Bounds& bounds) {
  std::vector<Steps> out;
  const std::size_t len = w.length();
  const int n = w.strands();
  for (std::size_t k = 0; k < std::max<std::size_t>(len, 1); ++k) {
    Steps prefix;
    if (k != 0) prefix.push_back(rotate_step(w, k));
    const BraidWord& r = last_word(w, prefix);
    for (const auto& site : relation_sites(r)) {
      Steps steps = prefix;
      steps.push_back(relation_step(r, site.position, site.kind, site.direction));
      append_free_reduce(w, steps);
      out.push_back(std::move(steps));
    }
  }
  for (int g = 1; g < n; ++g) {
    for (int s : {1, -1}) {
      Steps steps{conjugate_step(w, g, s)};
      append_free_reduce(w, steps);
      out.push_back(std::move(steps));
    }
  }
  if (n + 1 <= bounds.strands) {
    for (std::size_t at = 0; at <= len; ++at) {
      for (int s : {1, -1}) out.push_back({stabilize_step(w, at, s)});
    }
  }
  if (destabilize(w)) {
    Steps steps{destabilize_step(w)};
    append_free_reduce(w, steps);
    out.push_back(std::move(steps));
  }
  return out;
}

std::vector<Steps> lmove_neighbours(const BraidWord& w, const Bounds& bounds) {
  std::vector<Steps> out;
  for (const auto& site : relation_sites(w)) {
    Steps steps{relation_step(w, site.position, site.kind, site.direction)};
    append_free_reduce(w, steps);
    out.push_back(std::move(steps));
  }
  if (w.strands() + 1 <= bounds.strands) {
    for (const auto& spec : lmove_grid(w)) {
      Steps steps{lmove_step(w, spec)};
      append_free_reduce(w, steps);
      out.push_back(std::move(steps));
    }
  }
  for (const auto& undo : detect_lmove(w)) {
    Steps steps{lmove_undo_step(w, undo.spec, undo.source)};
    append_free_reduce(w, steps);
    out.push_back(std::move(steps));
  }
  return out;
}

struct Node {
  BraidWord word;
  int parent;
  Steps from_parent;
};

struct Tree {
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> by_key;
  std::vector<std::pair<std::string, int>> frontier;

  Steps path_to(int index) const {
    std::vector<int> chain;
    for (int i = index; i > 0; i = nodes[i].parent) chain.push_back(i);
    Steps steps;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      steps.insert(steps.end(), nodes[*it].from_parent.begin(), nodes[*it].from_parent.end());
    }
    return steps;
  }
};

}  // namespace

std::vector<MoveStep> reverse_step(const BraidWord& before, const MoveStep& step) {
  const BraidWord& after = step.result;
  const auto& m = step.move;
  if (m == "relation") {
    const bool yb = step.param("yang_baxter") != 0;
    const auto dir = yb && step.param("forward") != 0 ? RelationDirection::backward : RelationDirection::forward;
    return {relation_step(after, static_cast<std::size_t>(step.param("position")),
                          yb ? RelationKind::yang_baxter : RelationKind::far_commute, dir)};
  }
  if (m == "free_reduce") {
    std::vector<std::pair<std::size_t, Letter>> removed;
    BraidWord cur = before;
    for (std::size_t p : free_reduction_steps(before)) {
      removed.emplace_back(p, cur.letters()[p]);
      cur = cancel_pair(cur, p);
    }
    Steps out;
    cur = after;
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
      out.push_back(insert_pair_step(cur, it->first, it->second));
      cur = out.back().result;
    }
    return out;
  }
  if (m == "cancel_pair") {
    const auto p = static_cast<std::size_t>(step.param("position"));
    return {insert_pair_step(after, p, before.letters()[p])};
  }
  if (m == "insert_pair") return {cancel_pair_step(after, static_cast<std::size_t>(step.param("position")))};
  if (m == "conjugate") {
    Steps out{conjugate_step(after, step.param("generator"), -step.param("sign"))};
    out.push_back(cancel_pair_step(out.back().result, 0));
    out.push_back(cancel_pair_step(out.back().result, out.back().result.length() - 2));
    return out;
  }
  if (m == "rotate") {
    const auto k = static_cast<std::size_t>(step.param("k"));
    return {rotate_step(after, after.length() == 0 ? 0 : (after.length() - k) % after.length())};
  }
  if (m == "stabilize") return {destabilize_step(after)};
  if (m == "destabilize") {
    return {stabilize_step(after, static_cast<std::size_t>(step.param("position")), step.param("sign"))};
  }
  const LMoveSpec spec{step.param("over") != 0 ? LMoveKind::over : LMoveKind::under, step.param("sign"),
                       static_cast<std::size_t>(step.param("split")), step.param("column")};
  if (m == "lmove") return {lmove_undo_step(after, spec, before)};
  if (m == "lmove_undo") {
    Steps out{lmove_step(after, spec)};
    append_free_reduce(after, out);
    auto restore = reverse_step(before, free_reduce_step(before));
    out.insert(out.end(), restore.begin(), restore.end());
    return out;
  }
  throw Error(ErrorCode::ContractViolation, "cannot reverse move '" + m + "'");
}

SearchResult equivalent_bounded(const BraidWord& w1, const BraidWord& w2, MoveSet moves, const SearchBudget& budget,
                                const StateObserver& observer) {
  SearchResult result;
  if (closure_components(w1) != closure_components(w2)) {
    result.outcome = SearchOutcome::not_equivalent;
    result.reason = "closure component counts differ";
    return result;
  }
  if (normalized_jones(w1) != normalized_jones(w2)) {
    result.outcome = SearchOutcome::not_equivalent;
    result.reason = "Jones polynomials differ";
    return result;
  }

  const Bounds bounds{std::max(w1.strands(), w2.strands()) + budget.extra_strands,
                      std::max(w1.length(), w2.length()) + budget.extra_length};
  auto key_of = [&](const BraidWord& w) { return encode(last_word(w, normalize(w, moves))); };

  Tree trees[2];
  const BraidWord* roots[2] = {&w1, &w2};
  for (int s = 0; s < 2; ++s) {
    auto key = key_of(*roots[s]);
    trees[s].nodes.push_back({*roots[s], -1, {}});
    trees[s].by_key.emplace(key, 0);
    trees[s].frontier.emplace_back(key, 0);
    if (observer) observer(*roots[s]);
  }
  result.states_explored = 2;

  auto connect = [&](int forward_index, int backward_index) {
    const Node& f = trees[0].nodes[forward_index];
    const Node& b = trees[1].nodes[backward_index];
    Steps steps = trees[0].path_to(forward_index);
    Steps to_key = normalize(f.word, moves);
    steps.insert(steps.end(), to_key.begin(), to_key.end());
    Steps back_to_key = normalize(b.word, moves);
    Steps undo = reverse_steps(b.word, back_to_key);
    steps.insert(steps.end(), undo.begin(), undo.end());
    Steps tail = reverse_steps(w2, trees[1].path_to(backward_index));
    steps.insert(steps.end(), tail.begin(), tail.end());

    MoveTrace trace{w1, std::move(steps)};
    if (replay(trace) != w2) throw Error(ErrorCode::ContractViolation, "search trace does not end at the target");
    result.outcome = SearchOutcome::found;
    result.trace = std::move(trace);
    return result;
  };

  if (trees[0].frontier.front().first == trees[1].frontier.front().first) return connect(0, 0);

  while (!trees[0].frontier.empty() || !trees[1].frontier.empty()) {
    int s = 0;
    if (trees[0].frontier.empty() ||
        (!trees[1].frontier.empty() && trees[1].frontier.size() < trees[0].frontier.size())) {
      s = 1;
    }
    Tree& tree = trees[s];
    const Tree& other = trees[1 - s];
    std::vector<std::pair<std::string, int>> next;
    for (const auto& [key, index] : tree.frontier) {
      const BraidWord word = tree.nodes[index].word;
      auto neighbours = moves == MoveSet::markov ? markov_neighbours(word, bounds) : lmove_neighbours(word, bounds);
      for (auto& steps : neighbours) {
        const BraidWord& reached = last_word(word, steps);
        if (!bounds.admits(reached)) continue;
        auto k = key_of(reached);
        if (tree.by_key.contains(k)) continue;
        const int id = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({reached, index, std::move(steps)});
        tree.by_key.emplace(k, id);
        next.emplace_back(k, id);
        ++result.states_explored;
        if (observer) observer(tree.nodes.back().word);
        if (auto hit = other.by_key.find(k); hit != other.by_key.end()) {
          return s == 0 ? connect(id, hit->second) : connect(hit->second, id);
        }
        if (result.states_explored >= budget.max_states) {
          result.frontier_bound_hit = true;
          return result;
        }
      }
    }
    std::sort(next.begin(), next.end());
    tree.frontier = std::move(next);
  }
  return result;
}

SearchResult markov_equivalent_bounded(const BraidWord& w1, const BraidWord& w2, const SearchBudget& budget) {
  return equivalent_bounded(w1, w2, MoveSet::markov, budget);
}

SearchResult lmove_equivalent_bounded(const BraidWord& w1, const BraidWord& w2, const SearchBudget& budget) {
  return equivalent_bounded(w1, w2, MoveSet::lmove, budget);
}

SearchResult conjugation_via_lmoves(const BraidWord& a, int i, const SearchBudget& budget) {
  auto result = equivalent_bounded(conjugate(a, i, 1), a, MoveSet::lmove, budget);
  if (result.outcome == SearchOutcome::not_equivalent) {
    throw Error(ErrorCode::ContractViolation, "a conjugate has different invariants: " + result.reason);
  }
  return result;
}

}  // namespace braidcalc
