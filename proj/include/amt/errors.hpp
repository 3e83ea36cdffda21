#pragma once

#include <stdexcept>
#include <string>

namespace amt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(std::string msg, int line, int col)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + std::move(msg))
        , line(line)
        , col(col) {}
    int line;
    int col;
};

struct PartitionConflict : Error {
    using Error::Error;
};

struct UniverseNotClosed : Error {
    using Error::Error;
};

struct UniverseTooLarge : Error {
    using Error::Error;
};

struct BoxTooLarge : Error {
    using Error::Error;
};

struct TooManyAtoms : Error {
    using Error::Error;
};

struct NotAbsolute : Error {
    using Error::Error;
};

struct HeadNotTheory : Error {
    using Error::Error;
};

struct CaseSplitLimit : Error {
    using Error::Error;
};

struct SignatureMismatch : Error {
    using Error::Error;
};

} // namespace amt
