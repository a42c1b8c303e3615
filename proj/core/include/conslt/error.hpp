#pragma once

#include <stdexcept>
#include <string>

namespace conslt {

// Violated operation precondition or postcondition (shape mismatch,
// non-normalized distribution, empty candidate pool, ...).
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration value (rate outside [0,1), beam_size < 1, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; message carries the line number where known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite value where a finite one is required.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Training hit a non-finite loss; carries a diagnostic snapshot.
class TrainDivergedError : public std::runtime_error {
public:
    TrainDivergedError(const std::string& msg, long step, double slt, double cl)
        : std::runtime_error(msg), step(step), slt_loss(slt), cl_loss(cl) {}
    long step;
    double slt_loss;
    double cl_loss;
};

}  // namespace conslt
