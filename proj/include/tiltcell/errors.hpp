#ifndef TILTCELL_ERRORS_HPP
#define TILTCELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tiltcell {

// Exit codes used by the CLI: 0 ok, 2 invalid config, 3 inconclusive
// truncation, 4 internal invariant violation.

// Bad user input: unknown type, l <= h, unwritable cache dir, ...
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

// A length-truncated computation cannot answer the question asked.
// Never a silent wrong answer: callers must enlarge L and retry.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& m) : std::runtime_error(m) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& m) : std::runtime_error(m) {}
};

inline void require(bool cond, const char* what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace tiltcell

#endif
