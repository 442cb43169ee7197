#include "gfree/error.hpp"

namespace gfree {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Construction: return "ConstructionError";
    case ErrorKind::Disconnected: return "DisconnectedError";
    case ErrorKind::MissingEdge: return "MissingEdgeError";
    case ErrorKind::Format: return "FormatError";
    case ErrorKind::Capacity: return "CapacityError";
    case ErrorKind::NotATree: return "NotATreeError";
    case ErrorKind::AdjacentEndpoints: return "AdjacentEndpointsError";
    case ErrorKind::InvalidWitness: return "InvalidWitnessError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::UnsupportedRamsey: return "UnsupportedRamseyError";
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

}  // namespace gfree
