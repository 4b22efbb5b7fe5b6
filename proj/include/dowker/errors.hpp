#pragma once

#include <stdexcept>
#include <string>

namespace dowker {

enum class errc {
  duplicate_label,
  unknown_label,
  not_a_morphism,
  source_target_mismatch,
  unknown_vertex,
  not_a_simplex,
  not_simplicial,
  empty_cover,
  dimension_guard,
  too_large,
  not_invertible,
  parse_error,
};

const char* errc_name(errc c);

// Every failure the library raises carries one of the errc codes above, so
// callers (and the CLI) can map errors onto exit codes without string-matching.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace dowker
