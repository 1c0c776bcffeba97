#pragma once

// Exact linear programming over the rationals: dense two-phase simplex with
// Bland's rule. Meant for the handful of variables the bound LPs need.

#include <optional>
#include <string>
#include <vector>

#include "altbounds/exact.hpp"

namespace altbounds {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };
enum class LPStatus { optimal, infeasible, unbounded };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation;
  Rational rhs;
};

class LinearProgram {
 public:
  LinearProgram(Sense sense, std::vector<Rational> objective);

  // Throws std::invalid_argument when the row length differs from the objective.
  void add_constraint(std::vector<Rational> coeffs, Relation relation, Rational rhs);
  // Variables default to x >= 0.
  void set_lower_bound(std::size_t var, Rational bound);
  void set_free(std::size_t var);
  void set_variable_name(std::size_t var, std::string name);
  // Constant added to the objective; lets callers fix variables without losing the true value.
  void set_objective_offset(Rational offset) { offset_ = std::move(offset); }

  Sense sense() const { return sense_; }
  std::size_t num_variables() const { return objective_.size(); }
  const std::vector<Rational>& objective() const { return objective_; }
  const Rational& objective_offset() const { return offset_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  // nullopt means the variable is free
  const std::optional<Rational>& lower_bound(std::size_t var) const { return lower_.at(var); }
  const std::string& variable_name(std::size_t var) const { return names_.at(var); }

 private:
  Sense sense_;
  std::vector<Rational> objective_;
  Rational offset_ = 0;
  std::vector<Constraint> constraints_;
  std::vector<std::optional<Rational>> lower_;
  std::vector<std::string> names_;
};

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  Rational value;                     // objective including the offset; optimal only
  std::vector<Rational> assignment;   // optimal only
  std::vector<std::string> basis;     // names of the final basic columns
};

LPSolution solve(const LinearProgram& lp);

Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& x);
// Exact check of every constraint and bound.
bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& x);

// Readable dump: objective line, one constraint per line, then bounds.
// Rationals print as "p/q".
std::string to_text(const LinearProgram& lp);
std::string to_string(LPStatus status);

}  // namespace altbounds
