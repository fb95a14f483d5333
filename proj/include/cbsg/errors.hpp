#pragma once

#include <stdexcept>
#include <string>

namespace cbsg {

// Error classes map onto the CLI exit-code contract:
//   input        -> 1   (malformed documents, bad arguments)
//   precondition -> 2   (valid input outside the supported class)
//   internal     -> 2   (a verified identity failed; indicates a bug)
enum class errc { input = 1, precondition = 2, inconclusive = 3, internal = 4 };

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string kind, const std::string& what)
      : std::runtime_error(what), code_(code), kind_(std::move(kind)) {}
  errc code() const { return code_; }
  const std::string& kind() const { return kind_; }
  int exit_code() const {
    return code_ == errc::internal ? 2 : static_cast<int>(code_);
  }

 private:
  errc code_;
  std::string kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(errc::input, "ParseError", w) {}
};

struct InvalidBody : Error {
  explicit InvalidBody(const std::string& w) : Error(errc::input, "InvalidBody", w) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(errc::input, "InvalidArgument", w) {}
};

struct NotSimplicial : Error {
  explicit NotSimplicial(const std::string& w)
      : Error(errc::precondition, "NotSimplicial", w) {}
};

struct IrrationalRays : Error {
  explicit IrrationalRays(const std::string& w)
      : Error(errc::precondition, "IrrationalRays", w) {}
};

// The decision machinery requires a two-dimensional body; a polygon that
// degenerates to a segment transversal to the rays is outside the class.
struct UnsupportedSegmentPolygon : Error {
  explicit UnsupportedSegmentPolygon(const std::string& w)
      : Error(errc::precondition, "UnsupportedSegmentPolygon", w) {}
};

struct GeneratorNotFound : Error {
  explicit GeneratorNotFound(const std::string& w)
      : Error(errc::precondition, "GeneratorNotFound", w) {}
};

struct StructureSearchOverflow : Error {
  explicit StructureSearchOverflow(const std::string& w)
      : Error(errc::precondition, "StructureSearchOverflow", w) {}
};

struct NuTauParallel : Error {
  explicit NuTauParallel(const std::string& w)
      : Error(errc::precondition, "NuTauParallel", w) {}
};

struct PreconditionNotCM : Error {
  explicit PreconditionNotCM(const std::string& w)
      : Error(errc::precondition, "PreconditionNotCM", w) {}
};

struct BoundExhausted : Error {
  explicit BoundExhausted(const std::string& w)
      : Error(errc::inconclusive, "BoundExhausted", w) {}
};

struct UnboundedRegion : Error {
  explicit UnboundedRegion(const std::string& w)
      : Error(errc::precondition, "UnboundedRegion", w) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error(errc::internal, "InternalError", w) {}
};

}  // namespace cbsg
