#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace normlog {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error with a 1-based position and the token set the parser
// would have accepted at that position.
struct parse_error : error {
  parse_error(std::string message, int line, int column,
              std::vector<std::string> expected = {}, std::string found = {})
      : error(std::move(message)), line(line), column(column),
        expected(std::move(expected)), found(std::move(found)) {}

  int line = 0;
  int column = 0;
  std::vector<std::string> expected;
  std::string found;
};

// A symbol used at two different arities.
struct arity_error : error {
  using error::error;
};

// An enumeration (models, truth-table rows, closure sets) would exceed
// its configured cap.  Maps to exit status 3 in the CLI.
struct budget_error : error {
  using error::error;
};

// Malformed configuration, file format violation, or invalid argument.
struct config_error : error {
  using error::error;
};

// Knowledge base whose facts plus strict closure admit no model.
struct inconsistency_error : error {
  inconsistency_error(std::string message, std::string witness)
      : error(std::move(message)), witness(std::move(witness)) {}

  std::string witness;
};

// Probability inputs outside their domain (negative marginal, joint
// exceeding marginal, values outside [0,1]).
struct probability_error : error {
  using error::error;
};

// Substitution application failure: uncovered metavariable or an
// arity clash introduced by the chosen targets.
struct substitution_error : error {
  using error::error;
};

}  // namespace normlog
