#include "rulemine/karnaugh.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "rulemine/error.hpp"
#include "rulemine/minimize.hpp"

namespace rulemine {

std::vector<std::uint32_t> gray_sequence(int bits) {
  std::vector<std::uint32_t> out;
  out.reserve(1u << bits);
  for (std::uint32_t i = 0; i < (1u << bits); ++i) {
    out.push_back(i ^ (i >> 1));
  }
  return out;
}

namespace {

std::string bit_string(std::uint32_t value, int bits) {
  std::string out(bits, '0');
  for (int i = 0; i < bits; ++i) {
    if ((value >> (bits - 1 - i)) & 1u) out[i] = '1';
  }
  return out;
}

}  // namespace

std::string render_karnaugh(const TruthTable& table, const RuleSet& rules) {
  const int k = table.schema.k();
  if (k < 2 || k > 4) {
    throw ConfigError("Karnaugh rendering supports 2 to 4 attributes, got k=" +
                      std::to_string(k));
  }
  // First half of the attributes (rounded up) across the top, the rest
  // down the side; both in Gray order so neighbors differ in one bit.
  const int col_bits = (k + 1) / 2;
  const int row_bits = k - col_bits;
  const auto cols = gray_sequence(col_bits);
  const auto rows = gray_sequence(row_bits);

  std::string col_letters, row_letters;
  for (int i = 0; i < col_bits; ++i) col_letters += table.schema.attributes[i].letter();
  for (int i = col_bits; i < k; ++i) row_letters += table.schema.attributes[i].letter();

  const std::string corner = row_letters + " \\ " + col_letters;
  const std::size_t label_width = std::max(corner.size(), static_cast<std::size_t>(row_bits));
  const std::size_t cell_width = static_cast<std::size_t>(col_bits) + 2;

  std::ostringstream out;
  auto pad_left = [](const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };

  out << pad_left(corner, label_width) << " |";
  for (const auto col : cols) {
    out << pad_left(bit_string(col, col_bits), cell_width);
  }
  out << '\n';
  out << std::string(label_width + 1, '-') << '+'
      << std::string(cols.size() * cell_width, '-') << '\n';
  for (const auto row : rows) {
    out << pad_left(bit_string(row, row_bits), label_width) << " |";
    for (const auto col : cols) {
      const Combination c = (col << row_bits) | row;
      out << pad_left(table.outcomes[c] ? "1" : "0", cell_width);
    }
    out << '\n';
  }

  out << '\n';
  if (rules.rules.empty()) {
    out << "rules: FALSE\n";
  } else {
    for (const auto& rule : rules.rules) {
      out << format_rule(rule, table.schema) << " :";
      for (const auto c : covered_combinations(rule, k)) {
        out << ' ' << combination_to_string(c, table.schema);
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string render_karnaugh(const TruthTable& table) {
  return render_karnaugh(table, minimize(table));
}

}  // namespace rulemine
