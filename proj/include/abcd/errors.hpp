#pragma once

#include <stdexcept>
#include <string>

namespace abcd {

// Base for all library errors. `kind()` is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ABCD_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                              \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

ABCD_DEFINE_ERROR(NotUnimodular);
ABCD_DEFINE_ERROR(SingularTransform);
ABCD_DEFINE_ERROR(NotEquidiagonal);
ABCD_DEFINE_ERROR(InconsistentSigns);
ABCD_DEFINE_ERROR(DegenerateEquidiagonalization);
ABCD_DEFINE_ERROR(ZeroRadius);
ABCD_DEFINE_ERROR(NonPositiveSeparation);
ABCD_DEFINE_ERROR(UnstableCavity);
ABCD_DEFINE_ERROR(ResidualImaginary);
ABCD_DEFINE_ERROR(NonPositiveMass);
ABCD_DEFINE_ERROR(ParseError);
ABCD_DEFINE_ERROR(ValidationError);

#undef ABCD_DEFINE_ERROR

// Input errors are the caller's fault (bad file, bad fields); everything
// else is a domain failure of an otherwise well-formed request.
inline bool is_input_error(const Error& e) {
    return e.kind() == "ParseError" || e.kind() == "ValidationError";
}

}  // namespace abcd
