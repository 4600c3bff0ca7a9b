#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sas {

enum class ErrorCode {
  SyntaxError,
  NotHomogeneous,
  SchemaError,
  DanglingReference,
  FileNotFound,
  MeshNotValidated,
  NotInteriorEdge,
  NotInteriorVertex,
  NotStabilized,
  DegreeMismatch,
  SpanDeficient,
  HasBasepoints,
  NotInNet,
  InsufficientImageData,
  NotGeneric,
  SingularBranch,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Input problems (unreadable files, malformed documents) as opposed to
// failures of a computation on well-formed input.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace sas
