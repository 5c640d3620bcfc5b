#include "subspace_bounds/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace subspace_bounds {

std::string_view sense_symbol(RowSense sense) {
  switch (sense) {
    case RowSense::less_equal: return "<=";
    case RowSense::equal: return "=";
    case RowSense::greater_equal: return ">=";
  }
  return "?";
}

std::string_view status_name(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

int LinearProgram::add_variable(std::string name, Rational objective_coeff, bool is_integer) {
  variable_names.push_back(std::move(name));
  objective.push_back(std::move(objective_coeff));
  integer.push_back(is_integer);
  for (auto& row : rows) row.coeffs.emplace_back(0);
  return num_variables() - 1;
}

LinearRow& LinearProgram::add_row(std::string tag, int index, std::vector<Rational> coeffs, RowSense sense,
                                  Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_variables())
    throw std::invalid_argument("row width does not match variable count");
  rows.push_back(LinearRow{std::move(tag), index, std::move(coeffs), sense, std::move(rhs)});
  return rows.back();
}

namespace {

template <class T>
struct Arith;

template <>
struct Arith<Rational> {
  static bool positive(const Rational& v) { return sgn(v) > 0; }
  static bool negative(const Rational& v) { return sgn(v) < 0; }
  static bool zero(const Rational& v) { return sgn(v) == 0; }
  static Rational from(const Rational& v) { return v; }
};

template <>
struct Arith<double> {
  static constexpr double eps = 1e-9;
  static bool positive(double v) { return v > eps; }
  static bool negative(double v) { return v < -eps; }
  static bool zero(double v) { return std::fabs(v) <= eps; }
  static double from(const Rational& v) { return to_double(v); }
};

// Dense tableau for: maximize c.z subject to A z = b, z >= 0, b >= 0,
// with an identity basis provided by slack or artificial columns.
template <class T>
class Tableau {
  using A = Arith<T>;

 public:
  explicit Tableau(const LinearProgram& lp) : num_original_(lp.num_variables()) {
    const int m = static_cast<int>(lp.rows.size());
    row_sign_.assign(m, 1);
    std::vector<RowSense> senses(m);
    for (int r = 0; r < m; ++r) {
      senses[r] = lp.rows[r].sense;
      if (sgn(lp.rows[r].rhs) < 0) {
        row_sign_[r] = -1;
        if (senses[r] == RowSense::less_equal)
          senses[r] = RowSense::greater_equal;
        else if (senses[r] == RowSense::greater_equal)
          senses[r] = RowSense::less_equal;
      }
    }
    // column layout: originals | slack/surplus per inequality | artificials
    int cols = num_original_;
    std::vector<int> slack_col(m, -1);
    std::vector<int> art_col(m, -1);
    for (int r = 0; r < m; ++r)
      if (senses[r] != RowSense::equal) slack_col[r] = cols++;
    first_artificial_ = cols;
    for (int r = 0; r < m; ++r)
      if (senses[r] != RowSense::less_equal) art_col[r] = cols++;
    num_cols_ = cols;

    rows_.assign(m, std::vector<T>(num_cols_ + 1, T(0)));
    basis_.assign(m, -1);
    identity_col_.assign(m, -1);
    for (int r = 0; r < m; ++r) {
      const T sign = T(row_sign_[r]);
      for (int j = 0; j < num_original_; ++j) rows_[r][j] = sign * A::from(lp.rows[r].coeffs[j]);
      rows_[r][num_cols_] = sign * A::from(lp.rows[r].rhs);
      if (senses[r] == RowSense::less_equal) {
        rows_[r][slack_col[r]] = T(1);
        basis_[r] = slack_col[r];
        identity_col_[r] = slack_col[r];
      } else {
        if (senses[r] == RowSense::greater_equal) rows_[r][slack_col[r]] = T(-1);
        rows_[r][art_col[r]] = T(1);
        basis_[r] = art_col[r];
        identity_col_[r] = art_col[r];
      }
    }
  }

  // Returns false when unbounded.
  bool optimize(const std::vector<T>& cost, bool allow_artificial) {
    cost_ = cost;
    for (;;) {
      // Bland: lowest-index column with positive reduced cost enters.
      int entering = -1;
      for (int j = 0; j < num_cols_; ++j) {
        if (!allow_artificial && j >= first_artificial_) break;
        if (is_basic(j)) continue;
        if (A::positive(reduced_cost(j))) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      T best_ratio{};
      for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
        const T& a = rows_[r][entering];
        if (!A::positive(a)) continue;
        T ratio = rows_[r][num_cols_] / a;
        if (leaving < 0 || ratio < best_ratio ||
            (!A::positive(ratio - best_ratio) && !A::negative(ratio - best_ratio) && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  // After phase one: push zero-level artificials out where possible.
  void expel_artificials() {
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (basis_[r] < first_artificial_) continue;
      for (int j = 0; j < first_artificial_; ++j) {
        if (!A::zero(rows_[r][j]) && !is_basic(j)) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  T objective_value(const std::vector<T>& cost) const {
    T v(0);
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) v += cost[basis_[r]] * rows_[r][num_cols_];
    return v;
  }

  std::vector<T> primal() const {
    std::vector<T> x(num_original_, T(0));
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
      if (basis_[r] < num_original_) x[basis_[r]] = rows_[r][num_cols_];
    return x;
  }

  // y_r = c_B^T B^{-1} e_r, mapped back through the row sign flips.
  std::vector<T> duals(const std::vector<T>& cost) const {
    const int m = static_cast<int>(rows_.size());
    std::vector<T> y(m, T(0));
    for (int r = 0; r < m; ++r) {
      T acc(0);
      for (int i = 0; i < m; ++i) acc += cost[basis_[i]] * rows_[i][identity_col_[r]];
      y[r] = T(row_sign_[r]) * acc;
    }
    return y;
  }

  int num_cols() const { return num_cols_; }
  int first_artificial() const { return first_artificial_; }
  long pivots() const { return pivots_; }

 private:
  bool is_basic(int j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

  T reduced_cost(int j) const {
    T z(0);
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (A::zero(rows_[r][j])) continue;
      z += cost_[basis_[r]] * rows_[r][j];
    }
    return cost_[j] - z;
  }

  void pivot(int row, int col) {
    ++pivots_;
    const T p = rows_[row][col];
    for (auto& v : rows_[row]) v /= p;
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (r == row) continue;
      const T f = rows_[r][col];
      if (A::zero(f)) continue;
      for (int j = 0; j <= num_cols_; ++j)
        if (!A::zero(rows_[row][j])) rows_[r][j] -= f * rows_[row][j];
    }
    basis_[row] = col;
  }

  int num_original_;
  int num_cols_ = 0;
  int first_artificial_ = 0;
  std::vector<int> row_sign_;
  std::vector<std::vector<T>> rows_;
  std::vector<int> basis_;
  std::vector<int> identity_col_;
  std::vector<T> cost_;
  long pivots_ = 0;
};

template <class T>
struct RawResult {
  LpStatus status;
  T objective{};
  std::vector<T> primal;
  std::vector<T> dual;
  long pivots = 0;
};

template <class T>
RawResult<T> solve_tableau(const LinearProgram& lp) {
  using A = Arith<T>;
  Tableau<T> tab(lp);
  const int cols = tab.num_cols();

  std::vector<T> phase1(cols, T(0));
  for (int j = tab.first_artificial(); j < cols; ++j) phase1[j] = T(-1);
  tab.optimize(phase1, true);
  if (A::negative(tab.objective_value(phase1))) return {LpStatus::infeasible, T(0), {}, {}, tab.pivots()};
  tab.expel_artificials();

  const T sign = lp.direction == Direction::maximize ? T(1) : T(-1);
  std::vector<T> phase2(cols, T(0));
  for (int j = 0; j < lp.num_variables(); ++j) phase2[j] = sign * A::from(lp.objective[j]);
  if (!tab.optimize(phase2, false)) return {LpStatus::unbounded, T(0), {}, {}, tab.pivots()};

  RawResult<T> out{LpStatus::optimal, sign * tab.objective_value(phase2), tab.primal(), tab.duals(phase2),
                   tab.pivots()};
  for (auto& y : out.dual) y = sign * y;
  return out;
}

}  // namespace

LpSolution simplex_solve(const LinearProgram& lp) {
  auto raw = solve_tableau<Rational>(lp);
  return LpSolution{raw.status, raw.objective, std::move(raw.primal), std::move(raw.dual), raw.pivots};
}

FloatLpSolution simplex_solve_float(const LinearProgram& lp) {
  auto raw = solve_tableau<double>(lp);
  return FloatLpSolution{raw.status, raw.objective, std::move(raw.primal)};
}

std::optional<std::string> certificate_violation(const LinearProgram& lp, const LpSolution& solution) {
  if (solution.status != LpStatus::optimal) return "solution is not optimal";
  const int n = lp.num_variables();
  const int m = static_cast<int>(lp.rows.size());
  if (static_cast<int>(solution.primal.size()) != n || static_cast<int>(solution.dual.size()) != m)
    return "solution has the wrong shape";
  const bool maximize = lp.direction == Direction::maximize;

  for (int j = 0; j < n; ++j)
    if (sgn(solution.primal[j]) < 0) return "primal variable " + lp.variable_names[j] + " is negative";
  Rational primal_obj = 0;
  for (int j = 0; j < n; ++j) primal_obj += lp.objective[j] * solution.primal[j];
  for (const auto& row : lp.rows) {
    Rational lhs = 0;
    for (int j = 0; j < n; ++j) lhs += row.coeffs[j] * solution.primal[j];
    const bool ok = row.sense == RowSense::less_equal ? lhs <= row.rhs
                    : row.sense == RowSense::equal    ? lhs == row.rhs
                                                      : lhs >= row.rhs;
    if (!ok) return "row " + row.name() + " is violated";
  }

  // For maximize the dual is: min b.y, A^T y >= c, y >= 0 on <= rows,
  // y <= 0 on >= rows. Minimize mirrors every inequality.
  Rational dual_obj = 0;
  for (int r = 0; r < m; ++r) {
    const auto& y = solution.dual[r];
    const auto sense = lp.rows[r].sense;
    const int s = sgn(y) * (maximize ? 1 : -1);
    if (sense == RowSense::less_equal && s < 0) return "dual sign wrong on row " + lp.rows[r].name();
    if (sense == RowSense::greater_equal && s > 0) return "dual sign wrong on row " + lp.rows[r].name();
    dual_obj += lp.rows[r].rhs * y;
  }
  for (int j = 0; j < n; ++j) {
    Rational col = 0;
    for (int r = 0; r < m; ++r) col += lp.rows[r].coeffs[j] * solution.dual[r];
    if (maximize ? col < lp.objective[j] : col > lp.objective[j])
      return "reduced cost of " + lp.variable_names[j] + " has the wrong sign";
  }
  if (dual_obj != primal_obj) return "primal and dual objectives differ";
  if (solution.objective != primal_obj) return "reported objective differs from c.x";
  return std::nullopt;
}

namespace {

struct BranchBound {
  int var;
  bool upper;  // x_var <= value when true, x_var >= value otherwise
  BigInt value;
};

struct Node {
  Rational bound;
  std::vector<BranchBound> bounds;
};

struct NodeOrder {
  bool maximize;
  bool operator()(const Node& a, const Node& b) const { return maximize ? a.bound < b.bound : a.bound > b.bound; }
};

LinearProgram with_bounds(const LinearProgram& lp, const std::vector<BranchBound>& bounds) {
  LinearProgram out = lp;
  int idx = 0;
  for (const auto& b : bounds) {
    std::vector<Rational> coeffs(lp.num_variables(), Rational(0));
    coeffs[b.var] = 1;
    out.add_row("branch", idx++, std::move(coeffs), b.upper ? RowSense::less_equal : RowSense::greater_equal,
                Rational(b.value));
  }
  return out;
}

}  // namespace

IntegerSolution branch_and_bound(const LinearProgram& lp) {
  const int n = lp.num_variables();
  int num_integer = 0;
  for (int j = 0; j < n; ++j) num_integer += lp.integer[j] ? 1 : 0;
  if (num_integer > 32) throw std::invalid_argument("branch_and_bound supports at most 32 integer variables");

  const bool maximize = lp.direction == Direction::maximize;
  // With integral objective coefficients on integer variables only, every
  // integer point has an integral objective and bounds can be rounded.
  bool integral_objective = true;
  for (int j = 0; j < n; ++j) {
    if (sgn(lp.objective[j]) == 0) continue;
    if (!lp.integer[j] || lp.objective[j].get_den() != 1) integral_objective = false;
  }
  auto rounded = [&](const Rational& v) { return maximize ? Rational(floor(v)) : Rational(ceil(v)); };
  auto cannot_improve = [&](const Rational& bound, const Rational& incumbent) {
    const Rational b = integral_objective ? rounded(bound) : bound;
    return maximize ? b <= incumbent : b >= incumbent;
  };

  IntegerSolution best;
  bool have_incumbent = false;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> open(NodeOrder{maximize});

  auto root = simplex_solve(lp);
  ++best.nodes;
  if (root.status != LpStatus::optimal) {
    best.status = root.status;
    return best;
  }
  open.push(Node{root.objective, {}});

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (have_incumbent && cannot_improve(node.bound, best.objective)) break;

    auto sol = node.bounds.empty() ? root : simplex_solve(with_bounds(lp, node.bounds));
    if (!node.bounds.empty()) ++best.nodes;
    if (sol.status == LpStatus::infeasible) continue;
    if (sol.status == LpStatus::unbounded) {
      best.status = LpStatus::unbounded;
      return best;
    }
    if (have_incumbent && cannot_improve(sol.objective, best.objective)) continue;

    // most fractional: fractional part closest to 1/2
    int branch_var = -1;
    Rational best_score = -1;
    for (int j = 0; j < n; ++j) {
      if (!lp.integer[j] || sol.primal[j].get_den() == 1) continue;
      const Rational frac = sol.primal[j] - Rational(floor(sol.primal[j]));
      const Rational score = Rational(1, 2) - abs(frac - Rational(1, 2));
      if (score > best_score) {
        best_score = score;
        branch_var = j;
      }
    }
    if (branch_var < 0) {
      if (!have_incumbent || (maximize ? sol.objective > best.objective : sol.objective < best.objective)) {
        best.status = LpStatus::optimal;
        best.objective = sol.objective;
        best.primal = sol.primal;
        have_incumbent = true;
      }
      continue;
    }
    Node down{sol.objective, node.bounds};
    down.bounds.push_back({branch_var, true, floor(sol.primal[branch_var])});
    Node up{sol.objective, node.bounds};
    up.bounds.push_back({branch_var, false, ceil(sol.primal[branch_var])});
    open.push(std::move(down));
    open.push(std::move(up));
  }
  if (!have_incumbent) best.status = LpStatus::infeasible;
  return best;
}

}  // namespace subspace_bounds
