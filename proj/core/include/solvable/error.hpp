#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solvable {

/// Root of every domain error raised by the library. The CLI maps these to
/// exit status 1; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SOLVABLE_DEFINE_ERROR(Name)           \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

// family_catalog
SOLVABLE_DEFINE_ERROR(InadmissibleParameters);
SOLVABLE_DEFINE_ERROR(DegreeBeyondCutoff);

// poly_engine / specfun
SOLVABLE_DEFINE_ERROR(DegenerateRecursion);
SOLVABLE_DEFINE_ERROR(UnsupportedCorrespondence);
SOLVABLE_DEFINE_ERROR(OrderExceedsDegree);
SOLVABLE_DEFINE_ERROR(SingularPoint);

// expr_ir
SOLVABLE_DEFINE_ERROR(DomainError);
SOLVABLE_DEFINE_ERROR(NonRationalExponent);

// spectral_oracle
SOLVABLE_DEFINE_ERROR(QuadratureNoConverge);

// generator
SOLVABLE_DEFINE_ERROR(NonIntegrableGauge);
SOLVABLE_DEFINE_ERROR(Unimplemented);
SOLVABLE_DEFINE_ERROR(MapNotClosedForm);
SOLVABLE_DEFINE_ERROR(Inadmissible);
SOLVABLE_DEFINE_ERROR(NoAdmissibleRoot);

#undef SOLVABLE_DEFINE_ERROR

/// Parse failure; carries the 0-based character offset of the problem.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace solvable
