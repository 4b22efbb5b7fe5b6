#include "dowker/errors.hpp"

namespace dowker {

const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::unknown_label: return "UnknownLabel";
    case errc::not_a_morphism: return "NotAMorphism";
    case errc::source_target_mismatch: return "SourceTargetMismatch";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::not_a_simplex: return "NotASimplex";
    case errc::not_simplicial: return "NotSimplicial";
    case errc::empty_cover: return "EmptyCover";
    case errc::dimension_guard: return "DimensionGuard";
    case errc::too_large: return "TooLarge";
    case errc::not_invertible: return "NotInvertible";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace dowker
