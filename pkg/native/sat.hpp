// Conflict-driven clause learning SAT core used by the bundled SMT-LIB
// solver process.  Deliberately minimal: watched literals, 1UIP learning,
// EVSIDS branching, phase saving, Luby restarts, activity-based clause
// deletion.  Incremental via added clauses and solve-under-assumptions.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace ftsat {

// Literal encoding: var v (0-based) -> positive literal 2v, negative 2v+1.
inline int lit_of(int var, bool sign) { return 2 * var + (sign ? 1 : 0); }
inline int lit_neg(int l) { return l ^ 1; }
inline int lit_var(int l) { return l >> 1; }
inline bool lit_sign(int l) { return l & 1; }  // true = negated

enum class Value : int8_t { False = 0, True = 1, Undef = 2 };

inline Value lit_value(Value v, int l) {
  if (v == Value::Undef) return Value::Undef;
  bool b = (v == Value::True) ^ lit_sign(l);
  return b ? Value::True : Value::False;
}

struct Clause {
  std::vector<int> lits;
  double activity = 0.0;
  bool learnt = false;
  bool deleted = false;
};

class Solver {
 public:
  int new_var() {
    int v = static_cast<int>(assigns_.size());
    assigns_.push_back(Value::Undef);
    phase_.push_back(false);
    level_.push_back(0);
    reason_.push_back(-1);
    activity_.push_back(0.0);
    seen_.push_back(0);
    inheap_.push_back(0);
    watches_.emplace_back();
    watches_.emplace_back();
    return v;
  }

  int num_vars() const { return static_cast<int>(assigns_.size()); }

  void ensure_var(int v) {
    while (num_vars() <= v) new_var();
  }

  // Returns false if the clause is conflicting at level 0 (solver now UNSAT).
  bool add_clause(std::vector<int> lits) {
    if (!ok_) return false;
    for (int l : lits) ensure_var(lit_var(l));
    // Deduplicate / detect tautology.
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (size_t i = 0; i + 1 < lits.size(); ++i)
      if (lits[i] == lit_neg(lits[i + 1])) return true;  // tautology
    // Remove literals already false at level 0; satisfied clause is dropped.
    std::vector<int> out;
    for (int l : lits) {
      Value v = value(l);
      if (v == Value::True && level_[lit_var(l)] == 0) return true;
      if (v == Value::False && level_[lit_var(l)] == 0) continue;
      out.push_back(l);
    }
    if (out.empty()) { ok_ = false; return false; }
    if (out.size() == 1) {
      if (decision_level() != 0) backtrack(0);
      if (!enqueue(out[0], -1)) { ok_ = false; return false; }
      ok_ = (propagate() == -1);
      return ok_;
    }
    attach(new_clause(std::move(out), false));
    return true;
  }

  // 10 = SAT, 20 = UNSAT, 0 = budget exhausted.
  int solve(const std::vector<int>& assumptions, int64_t conflict_budget = -1) {
    if (!ok_) return 20;
    assumptions_ = assumptions;
    for (int l : assumptions_) ensure_var(lit_var(l));
    backtrack(0);
    model_.clear();
    conflict_budget_ = conflict_budget;
    rebuild_order();
    int rc = search();
    backtrack(0);
    return rc;
  }

  const std::vector<char>& model() const { return model_; }

  bool okay() const { return ok_; }

 private:
  // ---- state ----
  std::vector<Clause> clauses_;
  std::vector<int> free_slots_;
  std::vector<std::vector<int>> watches_;  // per literal: clause indices
  std::vector<Value> assigns_;
  std::vector<bool> phase_;
  std::vector<int> level_;
  std::vector<int> reason_;  // clause index or -1
  std::vector<double> activity_;
  std::vector<int8_t> seen_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::vector<int> assumptions_;
  std::vector<int> order_heap_;  // lazy pool of branch candidates
  std::vector<int8_t> inheap_;
  std::vector<char> model_;
  double var_inc_ = 1.0, cla_inc_ = 1.0;
  size_t qhead_ = 0;
  bool ok_ = true;
  int64_t conflict_budget_ = -1;
  int64_t conflicts_total_ = 0;
  size_t learnt_limit_ = 4096;

  Value value(int l) const { return lit_value(assigns_[lit_var(l)], l); }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  int new_clause(std::vector<int> lits, bool learnt) {
    int idx;
    if (!free_slots_.empty()) {
      idx = free_slots_.back();
      free_slots_.pop_back();
      clauses_[idx] = Clause();
    } else {
      idx = static_cast<int>(clauses_.size());
      clauses_.emplace_back();
    }
    clauses_[idx].lits = std::move(lits);
    clauses_[idx].learnt = learnt;
    clauses_[idx].activity = cla_inc_;
    return idx;
  }

  void attach(int ci) {
    const auto& c = clauses_[ci].lits;
    watches_[lit_neg(c[0])].push_back(ci);
    watches_[lit_neg(c[1])].push_back(ci);
  }

  bool enqueue(int l, int reason) {
    if (value(l) == Value::False) return false;
    if (value(l) == Value::True) return true;
    int v = lit_var(l);
    assigns_[v] = lit_sign(l) ? Value::False : Value::True;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
    return true;
  }

  // Returns conflicting clause index or -1.
  int propagate() {
    while (qhead_ < trail_.size()) {
      int l = trail_[qhead_++];
      auto& ws = watches_[l];
      size_t i = 0, j = 0;
      while (i < ws.size()) {
        int ci = ws[i++];
        Clause& c = clauses_[ci];
        if (c.deleted) continue;
        auto& lits = c.lits;
        // Make sure lits[1] is the false watch (the one triggered by l).
        if (lits[0] == lit_neg(l)) std::swap(lits[0], lits[1]);
        if (value(lits[0]) == Value::True) { ws[j++] = ci; continue; }
        bool moved = false;
        for (size_t k = 2; k < lits.size(); ++k) {
          if (value(lits[k]) != Value::False) {
            std::swap(lits[1], lits[k]);
            watches_[lit_neg(lits[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (!enqueue(lits[0], ci)) {
          // Conflict: keep remaining watches, restore list, report.
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return ci;
        }
      }
      ws.resize(j);
    }
    return -1;
  }

  void backtrack(int lvl) {
    if (decision_level() <= lvl) return;
    for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[lvl]; --i) {
      int v = lit_var(trail_[i]);
      phase_[v] = assigns_[v] == Value::True;
      assigns_[v] = Value::Undef;
      reason_[v] = -1;
      if (!inheap_[v]) { inheap_[v] = 1; order_heap_.push_back(v); }
    }
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
    qhead_ = trail_.size();
  }

  void bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
  }

  void bump_clause(Clause& c) {
    c.activity += cla_inc_;
    if (c.activity > 1e100) {
      for (auto& cl : clauses_) cl.activity *= 1e-100;
      cla_inc_ *= 1e-100;
    }
  }

  // First-UIP learning. Returns learnt clause (lits[0] = asserting literal)
  // and the backtrack level.
  void analyze(int confl, std::vector<int>& out_learnt, int& out_btlevel) {
    out_learnt.clear();
    out_learnt.push_back(0);  // placeholder for the asserting literal
    int path = 0;
    int p = -1;
    size_t index = trail_.size();
    do {
      Clause& c = clauses_[confl];
      if (c.learnt) bump_clause(c);
      for (size_t k = (p == -1 ? 0 : 1); k < c.lits.size(); ++k) {
        int q = c.lits[k];
        int v = lit_var(q);
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = 1;
          bump_var(v);
          if (level_[v] == decision_level())
            path++;
          else
            out_learnt.push_back(q);
        }
      }
      while (!seen_[lit_var(trail_[--index])]) {}
      p = trail_[index];
      confl = reason_[lit_var(p)];
      seen_[lit_var(p)] = 0;
      path--;
      // Reason clauses keep their asserting literal at position 0 (propagate
      // enqueues lits[0]), so the k=1 start above skips the resolved literal.
    } while (path > 0);
    out_learnt[0] = lit_neg(p);

    // Cheap self-subsumption: drop literals implied by the rest.
    size_t jj = 1;
    for (size_t i = 1; i < out_learnt.size(); ++i) {
      int v = lit_var(out_learnt[i]);
      int r = reason_[v];
      bool redundant = false;
      if (r != -1) {
        redundant = true;
        for (int q : clauses_[r].lits) {
          if (q == lit_neg(out_learnt[i])) continue;
          if (!seen_[lit_var(q)] && level_[lit_var(q)] > 0) { redundant = false; break; }
        }
      }
      if (!redundant) out_learnt[jj++] = out_learnt[i];
    }
    out_learnt.resize(jj);

    out_btlevel = 0;
    if (out_learnt.size() > 1) {
      size_t max_i = 1;
      for (size_t i = 2; i < out_learnt.size(); ++i)
        if (level_[lit_var(out_learnt[i])] > level_[lit_var(out_learnt[max_i])]) max_i = i;
      std::swap(out_learnt[1], out_learnt[max_i]);
      out_btlevel = level_[lit_var(out_learnt[1])];
    }
    for (int l : out_learnt) seen_[lit_var(l)] = 0;
  }

  void reduce_db() {
    std::vector<int> learnts;
    for (size_t i = 0; i < clauses_.size(); ++i)
      if (clauses_[i].learnt && !clauses_[i].deleted && clauses_[i].lits.size() > 2)
        learnts.push_back(static_cast<int>(i));
    if (learnts.size() < learnt_limit_) return;
    std::sort(learnts.begin(), learnts.end(), [&](int a, int b) {
      return clauses_[a].activity < clauses_[b].activity;
    });
    size_t target = learnts.size() / 2;
    size_t removed = 0;
    for (int ci : learnts) {
      if (removed >= target) break;
      bool locked = false;
      for (int l : clauses_[ci].lits) {
        int v = lit_var(l);
        if (assigns_[v] != Value::Undef && reason_[v] == ci) { locked = true; break; }
      }
      if (locked) continue;
      detach(ci);
      clauses_[ci].deleted = true;
      free_slots_.push_back(ci);
      ++removed;
    }
  }

  void detach(int ci) {
    for (int w = 0; w < 2; ++w) {
      auto& ws = watches_[lit_neg(clauses_[ci].lits[w])];
      for (size_t i = 0; i < ws.size(); ++i)
        if (ws[i] == ci) { ws[i] = ws.back(); ws.pop_back(); break; }
    }
  }

  void rebuild_order() {
    order_heap_.clear();
    std::fill(inheap_.begin(), inheap_.end(), 0);
    for (int v = 0; v < num_vars(); ++v)
      if (assigns_[v] == Value::Undef) { inheap_[v] = 1; order_heap_.push_back(v); }
  }

  int pick_branch_var() {
    int best = -1;
    double best_act = -1.0;
    size_t j = 0;
    for (size_t i = 0; i < order_heap_.size(); ++i) {
      int v = order_heap_[i];
      if (assigns_[v] != Value::Undef) { inheap_[v] = 0; continue; }
      order_heap_[j++] = v;
      if (activity_[v] > best_act) { best_act = activity_[v]; best = v; }
    }
    order_heap_.resize(j);
    return best;
  }

  static int64_t luby(int64_t x) {
    // Luby sequence 1 1 2 1 1 2 4 ..., 0-indexed.
    int64_t size = 1, seq = 0;
    while (size < x + 1) { ++seq; size = 2 * size + 1; }
    while (size - 1 != x) {
      size = (size - 1) >> 1;
      --seq;
      x = x % size;
    }
    return 1LL << seq;
  }

  int search() {
    int restart_count = 0;
    int64_t conflicts_since_restart = 0;
    int64_t restart_limit = 64 * luby(restart_count);
    std::vector<int> learnt;
    while (true) {
      int confl = propagate();
      if (confl != -1) {
        ++conflicts_total_;
        ++conflicts_since_restart;
        if (decision_level() == 0) { ok_ = false; return 20; }
        int btlevel;
        analyze(confl, learnt, btlevel);
        // Never backtrack past the assumptions prefix.
        backtrack(btlevel);
        if (learnt.size() == 1) {
          if (decision_level() != 0) backtrack(0);
          if (!enqueue(learnt[0], -1)) { ok_ = false; return 20; }
        } else {
          int ci = new_clause(learnt, true);
          attach(ci);
          enqueue(learnt[0], ci);
        }
        var_inc_ /= 0.95;
        cla_inc_ /= 0.999;
        if (conflict_budget_ >= 0 && conflicts_total_ >= conflict_budget_) return 0;
      } else {
        if (conflicts_since_restart >= restart_limit && decision_level() > static_cast<int>(assumptions_.size())) {
          conflicts_since_restart = 0;
          restart_limit = 64 * luby(++restart_count);
          backtrack(0);
          reduce_db();
          continue;
        }
        // Assumption handling: redo them after any restart/backjump below
        // their level.
        if (decision_level() < static_cast<int>(assumptions_.size())) {
          int l = assumptions_[decision_level()];
          if (value(l) == Value::True) {
            trail_lim_.push_back(static_cast<int>(trail_.size()));
            continue;
          }
          if (value(l) == Value::False) return 20;  // conflicting assumptions
          trail_lim_.push_back(static_cast<int>(trail_.size()));
          enqueue(l, -1);
          continue;
        }
        int v = pick_branch_var();
        if (v == -1) {
          model_.assign(num_vars(), 0);
          for (int u = 0; u < num_vars(); ++u) model_[u] = assigns_[u] == Value::True ? 1 : 0;
          return 10;
        }
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(lit_of(v, !phase_[v]), -1);
      }
    }
  }
};

}  // namespace ftsat
