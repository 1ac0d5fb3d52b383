#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brunnian {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input could not be parsed (matrix text, JSON, sequence notation).
struct ParseError : Error {
    using Error::Error;
};

struct NotOddSize : Error {
    using Error::Error;
};

// A matrix does not match the required block layout; carries the offending
// cell (0-based) and which structural rule it breaks.
struct NotBlockForm : Error {
    NotBlockForm(std::size_t row, std::size_t col, const std::string& what_cell)
        : Error("not in block form: cell (" + std::to_string(row) + "," +
                std::to_string(col) + "): " + what_cell),
          row(row),
          col(col),
          reason(what_cell) {}
    std::size_t row, col;
    std::string reason;
};

struct OddPart : Error {
    using Error::Error;
};

struct NotSquare : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotUnimodular : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct ValueOutOfRange : Error {
    using Error::Error;
};

struct NotInBase : Error {
    using Error::Error;
};

struct InvalidHistory : Error {
    using Error::Error;
};

struct ModulusMismatch : Error {
    using Error::Error;
};

struct InadmissibleChain : Error {
    using Error::Error;
};

struct NotRealizable : Error {
    using Error::Error;
};

struct InconsistentPlan : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

}  // namespace brunnian
