#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nil2 {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct NonSquare : Error {
    explicit NonSquare(const std::string& what) : Error(what) {}
};

// A coordinate matrix fails skew-symmetry / zero diagonal.
struct NotAlternating : Error {
    std::size_t row, col;
    NotAlternating(std::size_t r, std::size_t c, const std::string& what)
        : Error(what), row(r), col(c) {}
};

// The bracket image does not span the whole center: the group splits off
// a direct factor and is outside the model.
struct Decomposable : Error {
    explicit Decomposable(const std::string& what) : Error(what) {}
};

struct OddK : Error {
    explicit OddK(const std::string& what) : Error(what) {}
};

struct OddDimension : Error {
    explicit OddDimension(const std::string& what) : Error(what) {}
};

struct TooFewGenerators : Error {
    explicit TooFewGenerators(const std::string& what) : Error(what) {}
};

struct GroupMismatch : Error {
    explicit GroupMismatch(const std::string& what) : Error(what) {}
};

struct IncompatibleHom : Error {
    explicit IncompatibleHom(const std::string& what) : Error(what) {}
};

struct CenterRankUnsupported : Error {
    explicit CenterRankUnsupported(const std::string& what) : Error(what) {}
};

struct RequiresRankTwoCenter : Error {
    explicit RequiresRankTwoCenter(const std::string& what) : Error(what) {}
};

struct ZeroForm : Error {
    explicit ZeroForm(const std::string& what) : Error(what) {}
};

struct SyntaxError : Error {
    std::size_t line, col;
    SyntaxError(std::size_t l, std::size_t c, const std::string& what)
        : Error(what + " (line " + std::to_string(l) + ", col " + std::to_string(c) + ")"),
          line(l), col(c) {}
};

}  // namespace nil2
