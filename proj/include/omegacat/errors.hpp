#pragma once

#include <stdexcept>
#include <string>

namespace omegacat {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define OMEGACAT_ERROR(Name)                                                   \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    };

OMEGACAT_ERROR(ParseError)
OMEGACAT_ERROR(ShapeMismatch)
OMEGACAT_ERROR(IllDefinedHom)
OMEGACAT_ERROR(CompositeNonzero)
OMEGACAT_ERROR(InfiniteGroup)
OMEGACAT_ERROR(NotComposable)
OMEGACAT_ERROR(PreconditionViolated)
OMEGACAT_ERROR(NotAHomotopy)
OMEGACAT_ERROR(TooLarge)
OMEGACAT_ERROR(TruncationTooLow)
OMEGACAT_ERROR(MissingMeet)
OMEGACAT_ERROR(InternalInconsistency)

#undef OMEGACAT_ERROR

}  // namespace omegacat
