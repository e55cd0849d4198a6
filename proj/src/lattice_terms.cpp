/*
 *   Copyright 2026 the oclat authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "oclat/lattice_terms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace oclat {

TermPtr LatticeTerm::variable(std::string name) {
  auto t = std::make_shared<LatticeTerm>();
  t->kind = Kind::Variable;
  t->var = std::move(name);
  return t;
}

TermPtr LatticeTerm::meet(TermPtr l, TermPtr r) {
  auto t = std::make_shared<LatticeTerm>();
  t->kind = Kind::Meet;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

TermPtr LatticeTerm::join(TermPtr l, TermPtr r) {
  auto t = std::make_shared<LatticeTerm>();
  t->kind = Kind::Join;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  TermPtr parse_full_term() {
    TermPtr t = parse_join();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return t;
  }

  LatticeIdentity parse_full_identity() {
    TermPtr lhs = parse_join();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '=') {
      throw ParseError("expected '=' between the identity sides", pos_);
    }
    ++pos_;
    TermPtr rhs = parse_join();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return LatticeIdentity{std::move(lhs), std::move(rhs)};
  }

 private:
  // term ::= factor ( "\/" factor )*, left-associative.
  TermPtr parse_join() {
    TermPtr t = parse_meet();
    while (try_connective('\\', '/')) {
      t = LatticeTerm::join(std::move(t), parse_meet());
    }
    return t;
  }

  // factor ::= atom ( "/\" atom )*, left-associative.
  TermPtr parse_meet() {
    TermPtr t = parse_atom();
    while (try_connective('/', '\\')) {
      t = LatticeTerm::meet(std::move(t), parse_atom());
    }
    return t;
  }

  TermPtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("expected a variable or '('", pos_);
    }
    if (text_[pos_] == '(') {
      ++pos_;
      TermPtr t = parse_join();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("expected ')'", pos_);
      }
      ++pos_;
      return t;
    }
    char c = text_[pos_];
    if (c < 'a' || c > 'z') {
      throw ParseError(std::string("expected a variable, got '") + c + "'",
                       pos_);
    }
    std::string name(1, c);
    ++pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
            (text_[pos_] >= '0' && text_[pos_] <= '9'))) {
      name += text_[pos_++];
    }
    return LatticeTerm::variable(std::move(name));
  }

  bool try_connective(char first, char second) {
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == first &&
        text_[pos_ + 1] == second) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
};

void collect_variables(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind == LatticeTerm::Kind::Variable) {
    out.insert(t->var);
  } else {
    collect_variables(t->left, out);
    collect_variables(t->right, out);
  }
}

std::string term_str_prec(const TermPtr& t, bool inside_meet) {
  switch (t->kind) {
    case LatticeTerm::Kind::Variable:
      return t->var;
    case LatticeTerm::Kind::Meet:
      return term_str_prec(t->left, true) + " /\\ " +
             term_str_prec(t->right, true);
    case LatticeTerm::Kind::Join: {
      std::string s = term_str_prec(t->left, false) + " \\/ " +
                      term_str_prec(t->right, false);
      return inside_meet ? "(" + s + ")" : s;
    }
  }
  return {};
}

}  // namespace

TermPtr parse_term(std::string_view text) {
  return TermParser(text).parse_full_term();
}

LatticeIdentity parse_identity(std::string_view text) {
  return TermParser(text).parse_full_identity();
}

std::string term_str(const TermPtr& t) { return term_str_prec(t, false); }

std::string identity_str(const LatticeIdentity& id) {
  return term_str(id.lhs) + " = " + term_str(id.rhs);
}

TermPtr dual(const TermPtr& t) {
  switch (t->kind) {
    case LatticeTerm::Kind::Variable:
      return t;
    case LatticeTerm::Kind::Meet:
      return LatticeTerm::join(dual(t->left), dual(t->right));
    case LatticeTerm::Kind::Join:
      return LatticeTerm::meet(dual(t->left), dual(t->right));
  }
  return t;
}

LatticeIdentity dual(const LatticeIdentity& id) {
  return LatticeIdentity{dual(id.lhs), dual(id.rhs)};
}

std::vector<std::string> variables(const TermPtr& t) {
  std::set<std::string> vars;
  collect_variables(t, vars);
  return {vars.begin(), vars.end()};
}

std::vector<std::string> variables(const LatticeIdentity& id) {
  std::set<std::string> vars;
  collect_variables(id.lhs, vars);
  collect_variables(id.rhs, vars);
  return {vars.begin(), vars.end()};
}

FiniteLattice FiniteLattice::from_tables(
    std::vector<std::string> names, std::vector<std::vector<size_t>> join,
    std::vector<std::vector<size_t>> meet) {
  const size_t n = names.size();
  auto check_table = [n](const std::vector<std::vector<size_t>>& t,
                         const char* what) {
    if (t.size() != n) {
      throw std::invalid_argument(std::string(what) + " table size mismatch");
    }
    for (const auto& row : t) {
      if (row.size() != n) {
        throw std::invalid_argument(std::string(what) + " table row mismatch");
      }
      for (size_t v : row) {
        if (v >= n) {
          throw std::invalid_argument(std::string(what) +
                                      " table entry out of range");
        }
      }
    }
  };
  check_table(join, "join");
  check_table(meet, "meet");
  for (size_t a = 0; a < n; ++a) {
    if (join[a][a] != a || meet[a][a] != a) {
      throw std::invalid_argument("lattice tables are not idempotent");
    }
    for (size_t b = 0; b < n; ++b) {
      if (join[a][b] != join[b][a] || meet[a][b] != meet[b][a]) {
        throw std::invalid_argument("lattice tables are not commutative");
      }
      if (join[a][meet[a][b]] != a || meet[a][join[a][b]] != a) {
        throw std::invalid_argument("lattice tables violate absorption");
      }
      for (size_t c = 0; c < n; ++c) {
        if (join[join[a][b]][c] != join[a][join[b][c]] ||
            meet[meet[a][b]][c] != meet[a][meet[b][c]]) {
          throw std::invalid_argument("lattice tables are not associative");
        }
      }
    }
  }
  FiniteLattice lat;
  lat.names_ = std::move(names);
  auto jt = std::make_shared<std::vector<std::vector<size_t>>>(std::move(join));
  auto mt = std::make_shared<std::vector<std::vector<size_t>>>(std::move(meet));
  lat.join_ = [jt](size_t a, size_t b) { return (*jt)[a][b]; };
  lat.meet_ = [mt](size_t a, size_t b) { return (*mt)[a][b]; };
  return lat;
}

FiniteLattice FiniteLattice::from_ops(std::vector<std::string> names, Op join,
                                      Op meet) {
  FiniteLattice lat;
  lat.names_ = std::move(names);
  lat.join_ = std::move(join);
  lat.meet_ = std::move(meet);
  return lat;
}

FiniteLattice FiniteLattice::partition_lattice(
    const std::vector<std::string>& universe, size_t cap) {
  auto elements =
      std::make_shared<std::vector<Partition>>(enumerate_partitions(universe, cap));
  auto index = std::make_shared<std::unordered_map<std::string, size_t>>();
  std::vector<std::string> names;
  names.reserve(elements->size());
  for (size_t i = 0; i < elements->size(); ++i) {
    const std::string text = (*elements)[i].str();
    index->emplace(text, i);
    names.push_back(text);
  }
  auto lookup = [elements, index](const Partition& p) {
    return index->at(p.str());
  };
  FiniteLattice lat;
  lat.names_ = std::move(names);
  lat.join_ = [elements, lookup](size_t a, size_t b) {
    return lookup(oclat::join((*elements)[a], (*elements)[b]));
  };
  lat.meet_ = [elements, lookup](size_t a, size_t b) {
    return lookup(oclat::meet((*elements)[a], (*elements)[b]));
  };
  lat.partitions_ = *elements;
  return lat;
}

FiniteLattice FiniteLattice::dual_lattice() const {
  FiniteLattice lat;
  lat.names_ = names_;
  lat.join_ = meet_;
  lat.meet_ = join_;
  lat.partitions_ = partitions_;
  return lat;
}

size_t evaluate(const TermPtr& t, const std::map<std::string, size_t>& sigma,
                const FiniteLattice& lattice) {
  switch (t->kind) {
    case LatticeTerm::Kind::Variable: {
      auto it = sigma.find(t->var);
      if (it == sigma.end()) {
        throw std::invalid_argument("unbound variable " + t->var);
      }
      return it->second;
    }
    case LatticeTerm::Kind::Meet:
      return lattice.meet(evaluate(t->left, sigma, lattice),
                          evaluate(t->right, sigma, lattice));
    case LatticeTerm::Kind::Join:
      return lattice.join(evaluate(t->left, sigma, lattice),
                          evaluate(t->right, sigma, lattice));
  }
  throw std::logic_error("corrupt term node");
}

namespace {

// Postfix program over a value stack; variables index into the assignment.
struct CompiledTerm {
  enum class OpCode : unsigned char { PushVar, Meet, Join };
  std::vector<OpCode> ops;
  std::vector<size_t> var_slots;  // parallel to PushVar entries
  size_t stack_need = 0;
};

void compile_into(const TermPtr& t,
                  const std::vector<std::string>& var_order,
                  CompiledTerm& out) {
  switch (t->kind) {
    case LatticeTerm::Kind::Variable: {
      auto it = std::find(var_order.begin(), var_order.end(), t->var);
      out.ops.push_back(CompiledTerm::OpCode::PushVar);
      out.var_slots.push_back(
          static_cast<size_t>(it - var_order.begin()));
      return;
    }
    case LatticeTerm::Kind::Meet:
    case LatticeTerm::Kind::Join:
      compile_into(t->left, var_order, out);
      compile_into(t->right, var_order, out);
      out.ops.push_back(t->kind == LatticeTerm::Kind::Meet
                            ? CompiledTerm::OpCode::Meet
                            : CompiledTerm::OpCode::Join);
      return;
  }
}

CompiledTerm compile_term(const TermPtr& t,
                          const std::vector<std::string>& var_order) {
  CompiledTerm out;
  compile_into(t, var_order, out);
  size_t depth = 0;
  size_t var_at = 0;
  for (auto op : out.ops) {
    if (op == CompiledTerm::OpCode::PushVar) {
      ++depth;
      ++var_at;
    } else {
      --depth;
    }
    out.stack_need = std::max(out.stack_need, depth);
  }
  (void)var_at;
  return out;
}

size_t run_compiled(const CompiledTerm& prog, const size_t* assignment,
                    const FiniteLattice& lattice, size_t* stack) {
  size_t sp = 0;
  size_t var_at = 0;
  for (auto op : prog.ops) {
    switch (op) {
      case CompiledTerm::OpCode::PushVar:
        stack[sp++] = assignment[prog.var_slots[var_at++]];
        break;
      case CompiledTerm::OpCode::Meet:
        --sp;
        stack[sp - 1] = lattice.meet(stack[sp - 1], stack[sp]);
        break;
      case CompiledTerm::OpCode::Join:
        --sp;
        stack[sp - 1] = lattice.join(stack[sp - 1], stack[sp]);
        break;
    }
  }
  return stack[0];
}

struct CheckPlan {
  std::vector<std::string> vars;
  CompiledTerm lhs, rhs;
  size_t total = 0;  // |L|^k, verified against the budget
};

CheckPlan plan_check(const LatticeIdentity& id, const FiniteLattice& lattice,
                     size_t budget) {
  CheckPlan plan;
  plan.vars = variables(id);
  const size_t n = lattice.size();
  if (n == 0) throw std::invalid_argument("empty lattice");
  size_t total = 1;
  for (size_t i = 0; i < plan.vars.size(); ++i) {
    if (total > budget / n) {
      throw BudgetError("assignment space exceeds the budget of " +
                        std::to_string(budget) + " evaluations");
    }
    total *= n;
  }
  if (total > budget) {
    throw BudgetError("assignment space exceeds the budget of " +
                      std::to_string(budget) + " evaluations");
  }
  plan.total = total;
  plan.lhs = compile_term(id.lhs, plan.vars);
  plan.rhs = compile_term(id.rhs, plan.vars);
  return plan;
}

// Mixed-radix decode: first variable most significant.
void decode_assignment(size_t flat, size_t base, size_t k, size_t* out) {
  for (size_t i = k; i-- > 0;) {
    out[i] = flat % base;
    flat /= base;
  }
}

IdentityCheckResult result_at(const CheckPlan& plan,
                              const FiniteLattice& lattice, size_t flat,
                              bool holds) {
  IdentityCheckResult res;
  res.holds = holds;
  if (holds) {
    res.assignments_checked = plan.total;
    return res;
  }
  const size_t k = plan.vars.size();
  std::vector<size_t> values(std::max<size_t>(k, 1));
  decode_assignment(flat, lattice.size(), k, values.data());
  std::vector<size_t> stack(
      std::max(plan.lhs.stack_need, plan.rhs.stack_need) + 1);
  res.lhs_value = run_compiled(plan.lhs, values.data(), lattice, stack.data());
  res.rhs_value = run_compiled(plan.rhs, values.data(), lattice, stack.data());
  for (size_t i = 0; i < k; ++i) res.counterexample[plan.vars[i]] = values[i];
  res.assignments_checked = flat + 1;
  return res;
}

}  // namespace

IdentityCheckResult check_identity_serial(const LatticeIdentity& id,
                                          const FiniteLattice& lattice,
                                          size_t budget) {
  const CheckPlan plan = plan_check(id, lattice, budget);
  const size_t k = plan.vars.size();
  std::vector<size_t> values(std::max<size_t>(k, 1));
  std::vector<size_t> stack(
      std::max(plan.lhs.stack_need, plan.rhs.stack_need) + 1);
  for (size_t flat = 0; flat < plan.total; ++flat) {
    decode_assignment(flat, lattice.size(), k, values.data());
    const size_t l =
        run_compiled(plan.lhs, values.data(), lattice, stack.data());
    const size_t r =
        run_compiled(plan.rhs, values.data(), lattice, stack.data());
    if (l != r) return result_at(plan, lattice, flat, false);
  }
  return result_at(plan, lattice, 0, true);
}

IdentityCheckResult check_identity(const LatticeIdentity& id,
                                   const FiniteLattice& lattice,
                                   size_t budget) {
  const CheckPlan plan = plan_check(id, lattice, budget);
  const size_t k = plan.vars.size();
  const size_t total = plan.total;
  size_t first_fail = total;  // total = none

#pragma omp parallel
  {
    std::vector<size_t> values(std::max<size_t>(k, 1));
    std::vector<size_t> stack(
        std::max(plan.lhs.stack_need, plan.rhs.stack_need) + 1);
    size_t local_fail = total;

#pragma omp for schedule(static)
    for (size_t flat = 0; flat < total; ++flat) {
      if (flat >= local_fail) continue;
      decode_assignment(flat, lattice.size(), k, values.data());
      const size_t l =
          run_compiled(plan.lhs, values.data(), lattice, stack.data());
      const size_t r =
          run_compiled(plan.rhs, values.data(), lattice, stack.data());
      if (l != r) local_fail = flat;
    }

#pragma omp critical
    first_fail = std::min(first_fail, local_fail);
  }

  if (first_fail == total) return result_at(plan, lattice, 0, true);
  return result_at(plan, lattice, first_fail, false);
}

bool free_leq(const TermPtr& s, const TermPtr& t) {
  using Kind = LatticeTerm::Kind;
  // Whitman's condition; the join-on-the-left / meet-on-the-right splits
  // are sound whenever applicable, so they come first.
  if (s->kind == Kind::Join) {
    return free_leq(s->left, t) && free_leq(s->right, t);
  }
  if (t->kind == Kind::Meet) {
    return free_leq(s, t->left) && free_leq(s, t->right);
  }
  if (s->kind == Kind::Variable && t->kind == Kind::Variable) {
    return s->var == t->var;
  }
  if (s->kind == Kind::Variable) {  // t is a join
    return free_leq(s, t->left) || free_leq(s, t->right);
  }
  if (t->kind == Kind::Variable) {  // s is a meet
    return free_leq(s->left, t) || free_leq(s->right, t);
  }
  // s is a meet, t is a join: Whitman's (W).
  return free_leq(s->left, t) || free_leq(s->right, t) ||
         free_leq(s, t->left) || free_leq(s, t->right);
}

bool is_trivial(const LatticeIdentity& id) {
  return free_leq(id.lhs, id.rhs) && free_leq(id.rhs, id.lhs);
}

}  // namespace oclat
