#pragma once

#include <stdexcept>
#include <string>

namespace xssgen {

// Broad category used by the CLI to pick an exit code.
enum class ErrorKind {
    Usage,    // bad flags / unknown subcommand -> exit 1
    Data,     // unreadable or invalid input    -> exit 2
    Internal, // bugs and invariant breakage    -> exit 3
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct FixpointNotReached : Error {
    explicit FixpointNotReached(const std::string& m) : Error(ErrorKind::Data, m) {}
};

struct NoCandidates : Error {
    explicit NoCandidates(const std::string& m) : Error(ErrorKind::Data, m) {}
};

struct UnknownSymbol : Error {
    explicit UnknownSymbol(const std::string& m) : Error(ErrorKind::Data, m) {}
};

struct NoPath : Error {
    explicit NoPath(const std::string& m) : Error(ErrorKind::Data, m) {}
};

struct InvalidStatePair : Error {
    explicit InvalidStatePair(const std::string& m) : Error(ErrorKind::Data, m) {}
};

struct IoFailure : Error {
    explicit IoFailure(const std::string& m) : Error(ErrorKind::Data, m) {}
};

struct FormatError : Error {
    explicit FormatError(const std::string& m) : Error(ErrorKind::Data, m) {}
};

struct SymbolOutOfAlphabet : Error {
    explicit SymbolOutOfAlphabet(const std::string& m) : Error(ErrorKind::Data, m) {}
};

struct EmptyCorpusForSymbol : Error {
    explicit EmptyCorpusForSymbol(const std::string& m) : Error(ErrorKind::Data, m) {}
};

struct GenerationFailed : Error {
    explicit GenerationFailed(const std::string& m) : Error(ErrorKind::Data, m) {}
};

struct NoSinks : Error {
    explicit NoSinks(const std::string& m) : Error(ErrorKind::Data, m) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& m) : Error(ErrorKind::Usage, m) {}
};

} // namespace xssgen
