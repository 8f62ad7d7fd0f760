#pragma once

#include <stdexcept>
#include <string>

namespace txer {

// Error classes map to CLI exit behavior: ShapeError/ConfigError/DataError
// exit 1, ContractError indicates API misuse and also exits 1.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// Short class name for one-line machine-parsable CLI error reports.
inline const char* error_class(const std::exception& e) {
    if (dynamic_cast<const ShapeError*>(&e)) return "ShapeError";
    if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
    if (dynamic_cast<const DataError*>(&e)) return "DataError";
    if (dynamic_cast<const ContractError*>(&e)) return "ContractError";
    return "Error";
}

}  // namespace txer
