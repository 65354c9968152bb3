#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twodist {

enum class Errc {
    EmbeddingInvalid,
    NotConnected,
    UnknownVertex,
    UnknownEdge,
    SurgeryNotPlanar,
    SurgeryDisconnects,
    DegreeBudgetExceeded,
    NotACutVertex,
    ParseError,
    GenerationFailed,
    NoSafeColor,
    PermutationInfeasible,
    BudgetExhausted,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace twodist
