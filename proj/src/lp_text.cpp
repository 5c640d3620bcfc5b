#include "subspace_bounds/lp_text.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace subspace_bounds {

namespace {

constexpr std::array<std::string_view, 5> kTagOrder = {"dimension_cap", "packing", "theorem51_single",
                                                       "theorem51_pair", "complement_pair"};

int tag_rank(const std::string& tag) {
  for (std::size_t i = 0; i < kTagOrder.size(); ++i)
    if (kTagOrder[i] == tag) return static_cast<int>(i);
  return static_cast<int>(kTagOrder.size());
}

std::string signed_coeff(const Rational& c) { return (sgn(c) >= 0 ? "+" : "") + to_string(c); }

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::runtime_error("LP text line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string export_lp_text(const LinearProgram& lp) {
  std::ostringstream out;
  out << "# subspace-bounds linear program\n";
  out << (lp.direction == Direction::maximize ? "maximize" : "minimize") << "\n";
  out << "variables\n";
  for (int j = 0; j < lp.num_variables(); ++j) {
    out << "  " << lp.variable_names[j] << " " << to_string(lp.objective[j]);
    if (lp.integer[j]) out << " integer";
    out << "\n";
  }
  out << "rows\n";
  std::vector<std::size_t> order(lp.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = lp.rows[a];
    const auto& rb = lp.rows[b];
    const int ka = tag_rank(ra.tag);
    const int kb = tag_rank(rb.tag);
    if (ka != kb) return ka < kb;
    if (ra.tag != rb.tag) return ra.tag < rb.tag;
    return ra.index < rb.index;
  });
  for (const auto r : order) {
    const auto& row = lp.rows[r];
    out << "  " << row.name() << ":";
    for (int j = 0; j < lp.num_variables(); ++j)
      if (sgn(row.coeffs[j]) != 0) out << " " << signed_coeff(row.coeffs[j]) << " " << lp.variable_names[j];
    out << " " << sense_symbol(row.sense) << " " << to_string(row.rhs) << "\n";
  }
  out << "end\n";
  return out.str();
}

LinearProgram parse_lp_text(std::string_view text) {
  LinearProgram lp;
  std::istringstream in{std::string(text)};
  std::string line;
  enum class Section { header, variables, rows, done } section = Section::header;
  bool have_direction = false;
  std::map<std::string, int> var_index;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (section == Section::done) fail(line_no, "content after 'end'");

    if (first == "maximize" || first == "minimize") {
      if (section != Section::header || have_direction) fail(line_no, "unexpected direction");
      lp.direction = first == "maximize" ? Direction::maximize : Direction::minimize;
      have_direction = true;
      continue;
    }
    if (first == "variables") {
      if (!have_direction || section != Section::header) fail(line_no, "unexpected 'variables'");
      section = Section::variables;
      continue;
    }
    if (first == "rows") {
      if (section != Section::variables) fail(line_no, "unexpected 'rows'");
      section = Section::rows;
      continue;
    }
    if (first == "end") {
      if (section != Section::rows) fail(line_no, "unexpected 'end'");
      section = Section::done;
      continue;
    }

    if (section == Section::variables) {
      std::string coeff;
      std::string flag;
      if (!(ls >> coeff)) fail(line_no, "variable without objective coefficient");
      const bool is_integer = static_cast<bool>(ls >> flag);
      if (is_integer && flag != "integer") fail(line_no, "unknown variable flag '" + flag + "'");
      if (var_index.count(first)) fail(line_no, "duplicate variable " + first);
      var_index[first] = lp.add_variable(first, parse_rational(coeff), is_integer);
      continue;
    }
    if (section == Section::rows) {
      if (first.back() != ':') fail(line_no, "row name must end with ':'");
      const std::string name = first.substr(0, first.size() - 1);
      const auto open = name.find('[');
      if (open == std::string::npos || name.back() != ']') fail(line_no, "row name must look like tag[index]");
      const std::string tag = name.substr(0, open);
      const int index = std::stoi(name.substr(open + 1, name.size() - open - 2));
      std::vector<Rational> coeffs(lp.num_variables(), Rational(0));
      std::string tok;
      RowSense sense{};
      bool have_sense = false;
      while (ls >> tok) {
        if (tok == "<=" || tok == "=" || tok == ">=") {
          sense = tok == "<=" ? RowSense::less_equal : tok == "=" ? RowSense::equal : RowSense::greater_equal;
          have_sense = true;
          break;
        }
        std::string var;
        if (!(ls >> var)) fail(line_no, "coefficient without variable");
        auto it = var_index.find(var);
        if (it == var_index.end()) fail(line_no, "unknown variable " + var);
        coeffs[it->second] += parse_rational(tok);
      }
      std::string rhs;
      if (!have_sense || !(ls >> rhs)) fail(line_no, "row without sense and right-hand side");
      lp.rows.push_back(LinearRow{tag, index, std::move(coeffs), sense, parse_rational(rhs)});
      continue;
    }
    fail(line_no, "unexpected '" + first + "'");
  }
  if (section != Section::done) throw std::runtime_error("LP text is missing 'end'");
  return lp;
}

}  // namespace subspace_bounds
