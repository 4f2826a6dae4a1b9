#include "eqlift/error.hpp"

namespace eqlift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_order: return "invalid-order";
    case ErrorKind::label: return "label";
    case ErrorKind::consistency: return "consistency";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invariant: return "invariant";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::domain: return "domain";
    case ErrorKind::matrix_domain: return "matrix-domain";
    case ErrorKind::orbit_length: return "orbit-length";
    case ErrorKind::not_special_orthogonal: return "not-special-orthogonal";
    case ErrorKind::witness: return "witness";
    case ErrorKind::degenerate_signature: return "degenerate-signature";
    case ErrorKind::construction: return "construction";
    case ErrorKind::inconsistency: return "inconsistency";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace eqlift
