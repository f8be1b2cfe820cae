#pragma once

#include <stdexcept>
#include <string>

namespace namelens {

/// Raised for bad user input: malformed files, invalid arguments, unsplittable
/// names. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An Error tied to a line of an input file.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), m_line(line)
    {
    }

    std::size_t line() const { return m_line; }

private:
    std::size_t m_line;
};

} // namespace namelens
