#pragma once

// Chaotic iteration, the worklist algorithm with its seven worklist
// representations, and chaotic iteration with widening.
//
// Backward analyses are solved on the reversed program graph; transfer
// functions always receive the edge in its original orientation. For
// backward problems the reverse postorder, strong components and natural
// loops are computed on the reversed graph.

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcw/domain.hpp"
#include "gcw/errors.hpp"
#include "gcw/graph.hpp"
#include "gcw/graph_algos.hpp"

namespace gcw {

enum class Direction { Forward, Backward };
enum class Extremal { AtInitial, AtFinal };

// A packaged monotone-framework instance (domain, per-edge transfer
// functions, initial element, direction).
template <typename E>
struct AnalysisSpec {
  Domain<E> domain;
  // Transfer for an edge in original orientation.
  std::function<E(const Edge&, const E&)> transfer;
  E initial;
  Direction direction = Direction::Forward;
  Extremal extremal = Extremal::AtInitial;
};

template <typename E>
using Assignment = std::map<NodeId, E>;

enum class WorklistStrategy { Set, Lifo, Fifo, RoundRobin, Rpo, Scc, NatLoop };

WorklistStrategy worklist_strategy_from_string(const std::string& s);
std::string to_string(WorklistStrategy s);

struct TraceEvent {
  size_t step = 0;
  NodeId extracted;
  std::string edge;
  std::optional<NodeId> changed;
  std::vector<NodeId> inserts;
  size_t worklist_size = 0;
};

struct SolverStats {
  size_t transfer_evals = 0;
  size_t inserts = 0;
  size_t extracts = 0;
  size_t updates = 0;
  size_t rounds = 0;  // Round Robin and the component strategies
};

struct SolveOptions {
  bool record_trace = false;
  // Fig. 4.18/4.22 extract only the pending nodes of the chosen component;
  // the whole-component variants of Teasers 4.26/4.36 sit behind this flag.
  bool whole_component = false;
};

template <typename E>
struct SolveResult {
  Assignment<E> assignment;
  SolverStats stats;
  std::vector<TraceEvent> trace;
  std::vector<NodeId> extraction_order;
};

namespace detail {

// The worklist abstract data type of Fig. 4.2: empty / insert / extract.
class Worklist {
 public:
  virtual ~Worklist() = default;
  virtual void insert(NodeId q) = 0;
  virtual NodeId extract() = 0;
  virtual bool empty() const = 0;
  virtual size_t size() const = 0;
  size_t rounds = 0;
};

struct SolverAux {
  RPNumbering rp;
  SccResult sccs;
  std::map<NodeId, std::set<NodeId>> loops;
  GraphOfLoops gol;
};

std::unique_ptr<Worklist> make_worklist(WorklistStrategy strategy, const ProgramGraph& work_pg,
                                        const SolverAux& aux, bool whole_component);

}  // namespace detail

// Fig. 4.1: repeatedly processes the first violated edge in edge-sequence
// order. Computes the least solution for monotone transfers.
template <typename E>
Assignment<E> chaotic_solve(const AnalysisSpec<E>& spec, const ProgramGraph& pg) {
  if (!spec.domain.has_acc)
    throw DomainNotAcc("domain lacks the ascending chain condition; use widening_solve");
  const bool backward = spec.direction == Direction::Backward;
  ProgramGraph work = backward ? pg.reversed() : pg;

  Assignment<E> aa;
  for (NodeId q : work.nodes()) aa.emplace(q, spec.domain.bottom);
  aa.at(work.initial()) = spec.initial;

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < work.edges().size(); ++i) {
      const Edge& we = work.edges()[i];
      const Edge& orig = pg.edges()[i];
      E out = spec.transfer(orig, aa.at(we.source));
      if (!spec.domain.leq(out, aa.at(we.target))) {
        aa.at(we.target) = spec.domain.join(aa.at(we.target), out);
        changed = true;
        break;  // restart the scan: first violated edge each time
      }
    }
  }
  return aa;
}

// Fig. 4.2 parameterised on a worklist representation.
template <typename E>
SolveResult<E> worklist_solve(const AnalysisSpec<E>& spec, const ProgramGraph& pg,
                              WorklistStrategy strategy, const SolveOptions& opts = {}) {
  if (!spec.domain.has_acc)
    throw DomainNotAcc("domain lacks the ascending chain condition; use widening_solve");
  const bool backward = spec.direction == Direction::Backward;
  ProgramGraph work = backward ? pg.reversed() : pg;

  detail::SolverAux aux;
  if (strategy != WorklistStrategy::Lifo && strategy != WorklistStrategy::Fifo) {
    aux.rp = dfs_spanning_tree(work);
    if (strategy == WorklistStrategy::Scc) aux.sccs = strong_components(work, aux.rp);
    if (strategy == WorklistStrategy::NatLoop) {
      aux.loops = natural_loops(work, aux.rp);  // throws NonReducible
      aux.gol = graph_of_loops(work, aux.loops);
    }
  }
  auto wl = detail::make_worklist(strategy, work, aux, opts.whole_component);

  SolveResult<E> res;
  for (NodeId q : work.nodes()) {
    res.assignment.emplace(q, spec.domain.bottom);
    wl->insert(q);
    ++res.stats.inserts;
  }
  res.assignment.at(work.initial()) = spec.initial;

  size_t step = 0;
  while (!wl->empty()) {
    NodeId q = wl->extract();
    ++res.stats.extracts;
    if (opts.record_trace) res.extraction_order.push_back(q);
    for (size_t i : work.out_edges(q)) {
      const Edge& we = work.edges()[i];
      const Edge& orig = pg.edges()[i];
      E out = spec.transfer(orig, res.assignment.at(we.source));
      ++res.stats.transfer_evals;
      ++step;
      TraceEvent ev;
      if (opts.record_trace) {
        ev.step = step;
        ev.extracted = q;
        ev.edge = to_string(orig);
      }
      if (!spec.domain.leq(out, res.assignment.at(we.target))) {
        res.assignment.at(we.target) = spec.domain.join(res.assignment.at(we.target), out);
        ++res.stats.updates;
        wl->insert(we.target);
        ++res.stats.inserts;
        if (opts.record_trace) {
          ev.changed = we.target;
          ev.inserts.push_back(we.target);
        }
      }
      if (opts.record_trace) {
        ev.worklist_size = wl->size();
        res.trace.push_back(ev);
      }
    }
  }
  res.stats.rounds = wl->rounds;
  return res;
}

// Fig. 6.7: chaotic iteration where updates go through a strong widening.
// Terminates for any strong widening; the result solves the constraints but
// need not be least. The deterministic edge order makes runs reproducible.
template <typename E>
Assignment<E> widening_solve(const AnalysisSpec<E>& spec, const ProgramGraph& pg,
                             const std::function<E(const E&, const E&)>& widen,
                             size_t* update_count = nullptr) {
  const bool backward = spec.direction == Direction::Backward;
  ProgramGraph work = backward ? pg.reversed() : pg;

  Assignment<E> aa;
  for (NodeId q : work.nodes()) aa.emplace(q, spec.domain.bottom);
  aa.at(work.initial()) = spec.initial;
  if (update_count) *update_count = 0;

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < work.edges().size(); ++i) {
      const Edge& we = work.edges()[i];
      const Edge& orig = pg.edges()[i];
      E out = spec.transfer(orig, aa.at(we.source));
      if (!spec.domain.leq(out, aa.at(we.target))) {
        aa.at(we.target) = widen(aa.at(we.target), out);
        if (update_count) ++*update_count;
        changed = true;
        break;
      }
    }
  }
  return aa;
}

// Post-hoc check that an assignment solves every constraint.
template <typename E>
bool solves_constraints(const AnalysisSpec<E>& spec, const ProgramGraph& pg,
                        const Assignment<E>& aa) {
  const bool backward = spec.direction == Direction::Backward;
  ProgramGraph work = backward ? pg.reversed() : pg;
  if (!spec.domain.leq(spec.initial, aa.at(work.initial()))) return false;
  for (size_t i = 0; i < work.edges().size(); ++i) {
    const Edge& we = work.edges()[i];
    const Edge& orig = pg.edges()[i];
    if (!spec.domain.leq(spec.transfer(orig, aa.at(we.source)), aa.at(we.target))) return false;
  }
  return true;
}

// S[[pi]](d): composes transfers along a path (in original orientation).
template <typename E>
E transfer_along_path(const AnalysisSpec<E>& spec, const ProgramGraph& pg, const Path& path,
                      const E& start) {
  E cur = start;
  for (size_t i : path.edges) cur = spec.transfer(pg.edges()[i], cur);
  return cur;
}

}  // namespace gcw
