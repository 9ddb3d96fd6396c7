#pragma once

#include <stdexcept>
#include <string>

namespace latmid {

// Base for all errors raised on violated preconditions or invalid input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Each error carries its own name in what(), so CLI output and logs name the
// violated invariant directly.
#define LATMID_DEFINE_ERROR(Name)                                                       \
    class Name : public Error {                                                         \
    public:                                                                             \
        explicit Name(const std::string& msg) : Error(std::string(#Name) + ": " + msg) {} \
    }

LATMID_DEFINE_ERROR(DimensionMismatch);
LATMID_DEFINE_ERROR(NegativeValuation);
LATMID_DEFINE_ERROR(SingularMatrix);
LATMID_DEFINE_ERROR(DegenerateForm);
LATMID_DEFINE_ERROR(WrongEpsilon);
LATMID_DEFINE_ERROR(EvenResidueChar);
LATMID_DEFINE_ERROR(NotAlmostSelfDual);
LATMID_DEFINE_ERROR(DegenerateResidual);
LATMID_DEFINE_ERROR(UnboundedAction);
LATMID_DEFINE_ERROR(NotStable);
LATMID_DEFINE_ERROR(GeneratorCountMismatch);
LATMID_DEFINE_ERROR(IncompatibleForm);
LATMID_DEFINE_ERROR(NotInvariant);
LATMID_DEFINE_ERROR(WrongCharacteristic);
LATMID_DEFINE_ERROR(InvalidArgument);

#undef LATMID_DEFINE_ERROR

// Problem-file errors carry the line and field they are anchored to.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& field, const std::string& msg)
        : Error("line " + std::to_string(line) +
                (field.empty() ? "" : ", " + field) + ": " + msg),
          line_(line), field_(field) {}
    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    int line_;
    std::string field_;
};

} // namespace latmid
