#pragma once

// Published comparison values, embedded from data/literature.json at build
// time. These are quoted constants, never computed here.

#include <string>
#include <string_view>
#include <vector>

namespace anharm {

/// A value together with the number of decimals it was printed with.
struct PrintedValue {
  double value = 0.0;
  int decimals = 0;
  std::string text;

  /// One unit in the last printed digit, 10^-decimals.
  double last_digit() const;
};

/// Parses a decimal literal such as "-0.2099735". Throws ValidationError.
PrintedValue parse_printed(std::string_view text);

struct Table1Entry {
  PrintedValue t_reduced, f4, f_accu, f0, f2, f3;
};

struct Table2Entry {
  PrintedValue lambda, beta, f0, f_kr1, f3, f_kr3, f_exact, f2;
};

struct Literature {
  int version = 0;
  double table1_z = 0.0;
  std::string table1_source;
  std::string table2_source;
  std::vector<Table1Entry> table1;
  std::vector<Table2Entry> table2;
};

/// Parses a literature document (the layout of data/literature.json).
Literature parse_literature(std::string_view json_text);

/// The embedded literature data, parsed once.
const Literature& literature();

}  // namespace anharm
