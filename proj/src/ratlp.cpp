#include "altbounds/ratlp.hpp"

#include <sstream>
#include <stdexcept>

namespace altbounds {

LinearProgram::LinearProgram(Sense sense, std::vector<Rational> objective)
    : sense_(sense),
      objective_(std::move(objective)),
      lower_(objective_.size(), Rational(0)),
      names_(objective_.size()) {
  for (std::size_t j = 0; j < names_.size(); ++j) names_[j] = "x" + std::to_string(j);
}

void LinearProgram::add_constraint(std::vector<Rational> coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != objective_.size()) {
    throw std::invalid_argument("constraint has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                std::to_string(objective_.size()));
  }
  constraints_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearProgram::set_lower_bound(std::size_t var, Rational bound) { lower_.at(var) = std::move(bound); }
void LinearProgram::set_free(std::size_t var) { lower_.at(var) = std::nullopt; }
void LinearProgram::set_variable_name(std::size_t var, std::string name) { names_.at(var) = std::move(name); }

namespace {

// Column of the standard-form problem min c.y, T y = b, y >= 0.
struct Column {
  enum class Kind { structural, slack, artificial } kind;
  std::size_t source;  // original variable or constraint index
  int sign;            // structural: +1 or -1 (free split); slack: +1 or -1
  std::string name;
};

class Tableau {
 public:
  std::vector<std::vector<Rational>> rows;  // each row: columns..., rhs
  std::vector<std::size_t> basis;
  std::vector<Column> columns;

  std::size_t rhs() const { return columns.size(); }

  void pivot(std::size_t r, std::size_t e) {
    const Rational inv = Rational(1) / rows[r][e];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][e] == 0) continue;
      const Rational factor = rows[i][e];
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (rows[r][j] != 0) rows[i][j] -= factor * rows[r][j];
      }
    }
    basis[r] = e;
  }

  // Bland's rule simplex for min cost.y over columns allowed[j]. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < columns.size() && !entering; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i][j] != 0) reduced -= cost[basis[i]] * rows[i][j];
        }
        if (reduced < 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t e = *entering;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][e] <= 0) continue;
        const Rational ratio = rows[i][rhs()] / rows[i][e];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, e);
    }
  }

  Rational cost_of_basis(const std::vector<Rational>& cost) const {
    Rational total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) total += cost[basis[i]] * rows[i][rhs()];
    return total;
  }
};

}  // namespace

LPSolution solve(const LinearProgram& lp) {
  const std::size_t nvars = lp.num_variables();
  const auto& cons = lp.constraints();

  Tableau t;
  // Shift bounded variables to y = x - lower >= 0; split free ones.
  std::vector<Rational> shift(nvars, Rational(0));
  for (std::size_t j = 0; j < nvars; ++j) {
    if (lp.lower_bound(j)) {
      shift[j] = *lp.lower_bound(j);
      t.columns.push_back({Column::Kind::structural, j, 1, lp.variable_name(j)});
    } else {
      t.columns.push_back({Column::Kind::structural, j, 1, lp.variable_name(j) + "+"});
      t.columns.push_back({Column::Kind::structural, j, -1, lp.variable_name(j) + "-"});
    }
  }
  const std::size_t nstruct = t.columns.size();

  struct Row {
    std::vector<Rational> coeffs;  // over structural columns
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const auto& c : cons) {
    Row row{std::vector<Rational>(nstruct, Rational(0)), c.relation, c.rhs};
    for (std::size_t k = 0; k < nstruct; ++k) {
      const Column& col = t.columns[k];
      row.coeffs[k] = col.sign > 0 ? c.coeffs[col.source] : Rational(-c.coeffs[col.source]);
    }
    for (std::size_t j = 0; j < nvars; ++j) row.rhs -= c.coeffs[j] * shift[j];
    if (row.rhs < 0) {
      for (auto& x : row.coeffs) x = -x;
      row.rhs = -row.rhs;
      if (row.relation == Relation::less_equal) {
        row.relation = Relation::greater_equal;
      } else if (row.relation == Relation::greater_equal) {
        row.relation = Relation::less_equal;
      }
    }
    rows.push_back(std::move(row));
  }

  // slack / surplus columns, then artificials
  std::vector<std::optional<std::size_t>> slack_of(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].relation == Relation::equal) continue;
    const int sign = rows[i].relation == Relation::less_equal ? 1 : -1;
    slack_of[i] = t.columns.size();
    t.columns.push_back({Column::Kind::slack, i, sign, "s" + std::to_string(i)});
  }
  std::vector<std::optional<std::size_t>> artificial_of(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].relation == Relation::less_equal) continue;
    artificial_of[i] = t.columns.size();
    t.columns.push_back({Column::Kind::artificial, i, 1, "a" + std::to_string(i)});
  }

  const std::size_t ncols = t.columns.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Rational> r(ncols + 1, Rational(0));
    for (std::size_t k = 0; k < nstruct; ++k) r[k] = rows[i].coeffs[k];
    if (slack_of[i]) r[*slack_of[i]] = t.columns[*slack_of[i]].sign;
    if (artificial_of[i]) r[*artificial_of[i]] = 1;
    r[ncols] = rows[i].rhs;
    t.rows.push_back(std::move(r));
    t.basis.push_back(artificial_of[i] ? *artificial_of[i] : *slack_of[i]);
  }

  LPSolution out;

  // Phase 1: minimize the sum of artificials.
  std::vector<Rational> phase1(ncols, Rational(0));
  for (std::size_t j = 0; j < ncols; ++j) {
    if (t.columns[j].kind == Column::Kind::artificial) phase1[j] = 1;
  }
  t.optimize(phase1, std::vector<bool>(ncols, true));
  if (t.cost_of_basis(phase1) != 0) {
    out.status = LPStatus::infeasible;
    return out;
  }
  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.columns[t.basis[i]].kind != Column::Kind::artificial) {
      ++i;
      continue;
    }
    std::optional<std::size_t> replacement;
    for (std::size_t j = 0; j < ncols && !replacement; ++j) {
      if (t.columns[j].kind != Column::Kind::artificial && t.rows[i][j] != 0) replacement = j;
    }
    if (replacement) {
      t.pivot(i, *replacement);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 on the original objective, always as a minimization.
  std::vector<Rational> phase2(ncols, Rational(0));
  std::vector<bool> allowed(ncols, true);
  for (std::size_t j = 0; j < ncols; ++j) {
    const Column& col = t.columns[j];
    if (col.kind == Column::Kind::artificial) {
      allowed[j] = false;
    } else if (col.kind == Column::Kind::structural) {
      Rational c = lp.objective()[col.source] * col.sign;
      phase2[j] = lp.sense() == Sense::maximize ? Rational(-c) : c;
    }
  }
  if (!t.optimize(phase2, allowed)) {
    out.status = LPStatus::unbounded;
    return out;
  }

  out.status = LPStatus::optimal;
  out.assignment = shift;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Column& col = t.columns[t.basis[i]];
    out.basis.push_back(col.name);
    if (col.kind == Column::Kind::structural) out.assignment[col.source] += t.rows[i][t.rhs()] * col.sign;
  }
  out.value = evaluate_objective(lp, out.assignment);
  if (!is_feasible(lp, out.assignment)) throw std::logic_error("simplex returned an infeasible point");
  return out;
}

Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& x) {
  Rational total = lp.objective_offset();
  for (std::size_t j = 0; j < lp.num_variables(); ++j) total += lp.objective()[j] * x.at(j);
  return total;
}

bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.num_variables()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.lower_bound(j) && x[j] < *lp.lower_bound(j)) return false;
  }
  for (const auto& c : lp.constraints()) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coeffs[j] * x[j];
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {
void write_linear(std::ostream& os, const LinearProgram& lp, const std::vector<Rational>& coeffs) {
  bool first = true;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    if (!first) os << (coeffs[j] < 0 ? " - " : " + ");
    if (first && coeffs[j] < 0) os << "-";
    const Rational mag = abs(coeffs[j]);
    if (mag != 1) os << to_string(mag) << " ";
    os << lp.variable_name(j);
    first = false;
  }
  if (first) os << "0";
}
}  // namespace

std::string to_text(const LinearProgram& lp) {
  std::ostringstream os;
  os << (lp.sense() == Sense::maximize ? "maximize " : "minimize ");
  write_linear(os, lp, lp.objective());
  if (lp.objective_offset() != 0) os << " + (" << to_string(lp.objective_offset()) << ")";
  os << "\nsubject to\n";
  for (std::size_t i = 0; i < lp.constraints().size(); ++i) {
    const auto& c = lp.constraints()[i];
    os << "  c" << i << ": ";
    write_linear(os, lp, c.coeffs);
    os << (c.relation == Relation::less_equal ? " <= " : c.relation == Relation::equal ? " = " : " >= ");
    os << to_string(c.rhs) << "\n";
  }
  os << "bounds\n";
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    os << "  " << lp.variable_name(j);
    if (lp.lower_bound(j)) {
      os << " >= " << to_string(*lp.lower_bound(j)) << "\n";
    } else {
      os << " free\n";
    }
  }
  return os.str();
}

std::string to_string(LPStatus status) {
  switch (status) {
    case LPStatus::optimal:
      return "optimal";
    case LPStatus::infeasible:
      return "infeasible";
    case LPStatus::unbounded:
      return "unbounded";
  }
  return "unknown";
}

}  // namespace altbounds
