#pragma once

#include <stdexcept>
#include <string>

namespace partclass {

enum class ErrorKind {
  Domain,
  Pole,
  Coverage,
  Resource,
  Guard,
  Singularity,
  ImaginaryResidue,
  Kind,
  Shape,
  Index,
  Format,
  Io,
};

// Base of every error raised by the library. The kind maps one-to-one onto
// the status codes of the C API.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define PARTCLASS_DEFINE_ERROR(Name, Kind)                                     \
  class Name : public Error {                                                 \
   public:                                                                    \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {}  \
  };

PARTCLASS_DEFINE_ERROR(DomainError, Domain)
PARTCLASS_DEFINE_ERROR(PoleError, Pole)
PARTCLASS_DEFINE_ERROR(CoverageError, Coverage)
PARTCLASS_DEFINE_ERROR(ResourceError, Resource)
PARTCLASS_DEFINE_ERROR(GuardError, Guard)
PARTCLASS_DEFINE_ERROR(SingularityError, Singularity)
PARTCLASS_DEFINE_ERROR(ImaginaryResidueError, ImaginaryResidue)
PARTCLASS_DEFINE_ERROR(KindError, Kind)
PARTCLASS_DEFINE_ERROR(ShapeError, Shape)
PARTCLASS_DEFINE_ERROR(IndexError, Index)
PARTCLASS_DEFINE_ERROR(FormatError, Format)
PARTCLASS_DEFINE_ERROR(IoError, Io)

#undef PARTCLASS_DEFINE_ERROR

}  // namespace partclass
