#pragma once

#include <stdexcept>
#include <string>

namespace cyclowalk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic between cyclotomic numbers of different levels.
class LevelMismatch : public Error {
public:
    LevelMismatch(unsigned a, unsigned b)
        : Error("level mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// Embedding into a level that is not a multiple of the source level.
class NotAMultiple : public Error {
public:
    NotAMultiple(unsigned from, unsigned to)
        : Error("level " + std::to_string(to) + " is not a multiple of " + std::to_string(from)) {}
};

class LevelCapExceeded : public Error {
public:
    LevelCapExceeded(unsigned long long level, unsigned long long cap)
        : Error("cyclotomic level " + std::to_string(level) + " exceeds the level cap " +
                std::to_string(cap) + " (set CYCLOWALK_LEVEL_CAP to raise it)") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A matrix that was required to be exactly unitary is not.
class NotUnitary : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cyclowalk
