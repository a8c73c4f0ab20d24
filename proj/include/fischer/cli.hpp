#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fischer/classify.hpp"
#include "fischer/rational.hpp"
#include "fischer/spaces.hpp"

namespace fischer {

/// Malformed space recipe; `position` is the 0-based offset of the offending
/// character.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::size_t position, const std::string& message)
      : std::invalid_argument("at " + std::to_string(position) + ": " + message), position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// sym:N | sp:2N | o+:2N | o-:2N | ext:M:<spec> | dualaffine2 | affine3 | fano
/// | root:<A|D|E><rank> | file:<path>
SpaceSpec parse_spec(std::string_view text);

/// Integers and p/q only. Throws std::invalid_argument otherwise.
Rational parse_exact(std::string_view text);

struct Command {
  std::string subcommand;  // build, verify, algebra, spectrum, gate, report
  std::string target;      // space recipe, or the report name
  Rational gamma{1, 2}, delta{1, 2};
  bool exhaustive = false;
  bool json = false;
  std::string check = "all";  // algebra: all, suite, invariance, unity, radical, fusion
};

struct CommandResult {
  int status = 0;
  std::string out;
  std::string err;
};

/// Runs one command. Output is deterministic; status is 0 iff every check
/// passes, 1 on a failed check and 2 on a usage error.
CommandResult run(const Command& command);

/// Argument parsing front end; writes to the streams and returns the status.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// JSON form of a table row, and back.
std::string to_json_text(const TableRow& row);
TableRow table_row_from_json_text(const std::string& text);

}  // namespace fischer
