#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypertrees {

/// Every failure the library reports carries one of these classes. The CLI
/// prints the class name verbatim on standard error.
enum class ErrorKind {
  MalformedHypergraph,
  MalformedInput,
  Disconnected,
  EdgeOverlap,
  CycleOutsideEdge,
  SizeIdentityViolated,
  NotAnEdge,
  NonUniqueMarked,
  EmptyTree,
  BadPartition,
  BadWordLength,
  LetterOutOfRange,
  NotATree,
  NotBipartite,
  BadLength,
  NonTreeCode,
  PartsMismatch,
  ProfileMismatch,
  BoundExceeded,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedHypergraph: return "MalformedHypergraph";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EdgeOverlap: return "EdgeOverlap";
    case ErrorKind::CycleOutsideEdge: return "CycleOutsideEdge";
    case ErrorKind::SizeIdentityViolated: return "SizeIdentityViolated";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::NonUniqueMarked: return "NonUniqueMarked";
    case ErrorKind::EmptyTree: return "EmptyTree";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::BadWordLength: return "BadWordLength";
    case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::NonTreeCode: return "NonTreeCode";
    case ErrorKind::PartsMismatch: return "PartsMismatch";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace hypertrees
