#pragma once

#include <stdexcept>
#include <string>

namespace credmatch {

// Domain error raised by library operations. The CLI maps these to exit
// code 1; I/O and usage problems are reported separately with exit code 2.
class Error : public std::runtime_error {
public:
    enum class Code {
        EmptyFrame,
        DuplicateLabel,
        FrameTooLarge,
        MassOutOfRange,
        SumNotOne,
        EmptySetMass,
        EmptySubset,
        FrameMismatch,
        TotalConflict,
        EmptyInput,
        NotSingleton,
        EmptyCandidateSet,
        ScoreOutOfRange,
        BadSubset,
        BadInput,
    };

    Error(Code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

[[noreturn]] inline void fail(Error::Code code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace credmatch
