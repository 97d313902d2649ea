#include "fracfreq/error.hpp"

namespace fracfreq {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

EvaluationError::EvaluationError(const std::string& message, double omega)
    : std::runtime_error(message), omega_(omega) {}

}  // namespace fracfreq
