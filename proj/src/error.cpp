#include "twodist/error.hpp"

namespace twodist {

std::string_view errc_name(Errc code)
{
    switch (code) {
    case Errc::EmbeddingInvalid: return "EmbeddingInvalid";
    case Errc::NotConnected: return "NotConnected";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::SurgeryNotPlanar: return "SurgeryNotPlanar";
    case Errc::SurgeryDisconnects: return "SurgeryDisconnects";
    case Errc::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case Errc::NotACutVertex: return "NotACutVertex";
    case Errc::ParseError: return "ParseError";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::NoSafeColor: return "NoSafeColor";
    case Errc::PermutationInfeasible: return "PermutationInfeasible";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

ParseError::ParseError(int line, int column, const std::string& what)
    : Error(Errc::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

}  // namespace twodist
