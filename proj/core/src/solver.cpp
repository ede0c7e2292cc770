#include "gcw/solver.hpp"

#include <algorithm>

namespace gcw {

WorklistStrategy worklist_strategy_from_string(const std::string& s) {
  if (s == "set") return WorklistStrategy::Set;
  if (s == "lifo") return WorklistStrategy::Lifo;
  if (s == "fifo") return WorklistStrategy::Fifo;
  if (s == "round_robin") return WorklistStrategy::RoundRobin;
  if (s == "rpo") return WorklistStrategy::Rpo;
  if (s == "scc") return WorklistStrategy::Scc;
  if (s == "natloop") return WorklistStrategy::NatLoop;
  throw InputError("unknown worklist strategy: " + s);
}

std::string to_string(WorklistStrategy s) {
  switch (s) {
    case WorklistStrategy::Set: return "set";
    case WorklistStrategy::Lifo: return "lifo";
    case WorklistStrategy::Fifo: return "fifo";
    case WorklistStrategy::RoundRobin: return "round_robin";
    case WorklistStrategy::Rpo: return "rpo";
    case WorklistStrategy::Scc: return "scc";
    case WorklistStrategy::NatLoop: return "natloop";
  }
  return "?";
}

namespace detail {
namespace {

// Fig. 4.5, with extraction resolved to the member with smallest reverse
// postorder so runs are reproducible.
class SetWorklist final : public Worklist {
 public:
  explicit SetWorklist(const RPNumbering& rp) : rp_(rp) {}
  void insert(NodeId q) override { members_.insert(q); }
  NodeId extract() override {
    auto best = members_.begin();
    for (auto it = members_.begin(); it != members_.end(); ++it)
      if (rp_[*it] < rp_[*best]) best = it;
    NodeId q = *best;
    members_.erase(best);
    return q;
  }
  bool empty() const override { return members_.empty(); }
  size_t size() const override { return members_.size(); }

 private:
  const RPNumbering& rp_;
  std::set<NodeId> members_;
};

// Fig. 4.6 (stack) and Fig. 4.7 (queue); duplicates are allowed.
class LifoWorklist final : public Worklist {
 public:
  void insert(NodeId q) override { items_.push_front(q); }
  NodeId extract() override {
    NodeId q = items_.front();
    items_.pop_front();
    return q;
  }
  bool empty() const override { return items_.empty(); }
  size_t size() const override { return items_.size(); }

 private:
  std::deque<NodeId> items_;
};

class FifoWorklist final : public Worklist {
 public:
  void insert(NodeId q) override { items_.push_back(q); }
  NodeId extract() override {
    NodeId q = items_.front();
    items_.pop_front();
    return q;
  }
  bool empty() const override { return items_.empty(); }
  size_t size() const override { return items_.size(); }

 private:
  std::deque<NodeId> items_;
};

// Fig. 4.13: the pair (V, t). Every insert only raises the round flag; when
// V runs out and the flag is set, a fresh round starts at the initial node
// followed by the remaining nodes in reverse postorder.
class RoundRobinWorklist final : public Worklist {
 public:
  RoundRobinWorklist(const ProgramGraph& pg, const RPNumbering& rp) : pg_(pg), rp_(rp) {}
  void insert(NodeId) override { flag_ = true; }
  NodeId extract() override {
    if (current_.empty()) {
      ++rounds;
      flag_ = false;
      std::vector<NodeId> rest;
      for (NodeId q : pg_.nodes())
        if (q != pg_.initial()) rest.push_back(q);
      std::sort(rest.begin(), rest.end(),
                [&](NodeId a, NodeId b) { return rp_[a] < rp_[b]; });
      current_.assign(rest.begin(), rest.end());
      return pg_.initial();
    }
    NodeId q = current_.front();
    current_.pop_front();
    return q;
  }
  bool empty() const override { return current_.empty() && !flag_; }
  size_t size() const override { return current_.size() + (flag_ ? 1 : 0); }

 private:
  const ProgramGraph& pg_;
  const RPNumbering& rp_;
  std::deque<NodeId> current_;
  bool flag_ = false;
};

// Fig. 4.15: current list plus pending set; when the list runs out all
// pending nodes are sorted into reverse postorder.
class RpoWorklist final : public Worklist {
 public:
  explicit RpoWorklist(const RPNumbering& rp) : rp_(rp) {}
  void insert(NodeId q) override {
    if (std::find(current_.begin(), current_.end(), q) == current_.end()) pending_.insert(q);
  }
  NodeId extract() override {
    if (current_.empty()) {
      ++rounds;
      std::vector<NodeId> sorted(pending_.begin(), pending_.end());
      std::sort(sorted.begin(), sorted.end(),
                [&](NodeId a, NodeId b) { return rp_[a] < rp_[b]; });
      pending_.clear();
      current_.assign(sorted.begin(), sorted.end());
    }
    NodeId q = current_.front();
    current_.pop_front();
    return q;
  }
  bool empty() const override { return current_.empty() && pending_.empty(); }
  size_t size() const override { return current_.size() + pending_.size(); }

 private:
  const RPNumbering& rp_;
  std::deque<NodeId> current_;
  std::set<NodeId> pending_;
};

// Figs. 4.18 and 4.22: when the current list runs out, the pending nodes of
// a topmost component are sorted into reverse postorder; the remaining
// pending nodes wait. Components are strong components or natural
// components, ordered so that a scan finds a topmost one deterministically.
class ComponentWorklist final : public Worklist {
 public:
  ComponentWorklist(const RPNumbering& rp, std::vector<std::set<NodeId>> components,
                    std::set<std::pair<size_t, size_t>> dag_edges, bool whole_component)
      : rp_(rp), components_(std::move(components)), whole_(whole_component) {
    // Transitive ancestors per component.
    size_t n = components_.size();
    ancestors_.assign(n, {});
    bool changed = true;
    for (const auto& [a, b] : dag_edges) ancestors_[b].insert(a);
    while (changed) {
      changed = false;
      for (const auto& [a, b] : dag_edges)
        for (size_t anc : ancestors_[a])
          if (ancestors_[b].insert(anc).second) changed = true;
    }
  }

  void insert(NodeId q) override {
    if (std::find(current_.begin(), current_.end(), q) == current_.end()) pending_.insert(q);
  }

  NodeId extract() override {
    if (current_.empty()) {
      ++rounds;
      size_t chosen = pick_component();
      std::vector<NodeId> batch;
      if (whole_)
        batch.assign(components_[chosen].begin(), components_[chosen].end());
      else
        for (NodeId q : components_[chosen])
          if (pending_.count(q)) batch.push_back(q);
      for (NodeId q : components_[chosen]) pending_.erase(q);
      std::sort(batch.begin(), batch.end(),
                [&](NodeId a, NodeId b) { return rp_[a] < rp_[b]; });
      current_.assign(batch.begin(), batch.end());
    }
    NodeId q = current_.front();
    current_.pop_front();
    return q;
  }

  bool empty() const override { return current_.empty() && pending_.empty(); }
  size_t size() const override { return current_.size() + pending_.size(); }

 private:
  bool has_pending(size_t c) const {
    for (NodeId q : components_[c])
      if (pending_.count(q)) return true;
    return false;
  }

  size_t pick_component() {
    // Topmost: contains pending nodes while no ancestor does. Ties go to the
    // component holding the smallest reverse postorder number.
    size_t best = components_.size();
    int best_rp = 0;
    for (size_t c = 0; c < components_.size(); ++c) {
      if (!has_pending(c)) continue;
      bool topmost = true;
      for (size_t anc : ancestors_[c])
        if (has_pending(anc)) {
          topmost = false;
          break;
        }
      if (!topmost) continue;
      int min_rp = 0;
      bool first = true;
      for (NodeId q : components_[c]) {
        int r = rp_[q];
        if (first || r < min_rp) min_rp = r;
        first = false;
      }
      if (best == components_.size() || min_rp < best_rp) {
        best = c;
        best_rp = min_rp;
      }
    }
    return best;
  }

  const RPNumbering& rp_;
  std::vector<std::set<NodeId>> components_;
  std::vector<std::set<size_t>> ancestors_;
  bool whole_;
  std::deque<NodeId> current_;
  std::set<NodeId> pending_;
};

}  // namespace

std::unique_ptr<Worklist> make_worklist(WorklistStrategy strategy, const ProgramGraph& work_pg,
                                        const SolverAux& aux, bool whole_component) {
  switch (strategy) {
    case WorklistStrategy::Set:
      return std::make_unique<SetWorklist>(aux.rp);
    case WorklistStrategy::Lifo:
      return std::make_unique<LifoWorklist>();
    case WorklistStrategy::Fifo:
      return std::make_unique<FifoWorklist>();
    case WorklistStrategy::RoundRobin:
      return std::make_unique<RoundRobinWorklist>(work_pg, aux.rp);
    case WorklistStrategy::Rpo:
      return std::make_unique<RpoWorklist>(aux.rp);
    case WorklistStrategy::Scc: {
      std::vector<std::set<NodeId>> comps = aux.sccs.components;
      return std::make_unique<ComponentWorklist>(aux.rp, std::move(comps),
                                                 aux.sccs.reduced_edges, whole_component);
    }
    case WorklistStrategy::NatLoop:
      return std::make_unique<ComponentWorklist>(aux.rp, aux.gol.components, aux.gol.edges,
                                                 whole_component);
  }
  throw InputError("bad worklist strategy");
}

}  // namespace detail
}  // namespace gcw
