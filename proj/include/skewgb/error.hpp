#ifndef SKEWGB_ERROR_HPP
#define SKEWGB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewgb
{

// Root of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic misuse: division by zero, operands from different fields.
class FieldError : public Error
{
public:
    using Error::Error;
};

// A precondition on mathematical input was violated (leading term of zero,
// mismatched s-degrees, inhomogeneous input, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

// Inconsistent or incomplete configuration.
class ConfigError : public Error
{
public:
    using Error::Error;
};

// The engine declines to run: the endomorphism is not compatible with
// divisibility or with the ordering.
class RefusalError : public Error
{
public:
    using Error::Error;
};

// Query outside the truncation window of a basis.
class WindowError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string &msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg), m_line(line),
          m_column(column)
    {
    }

    std::size_t line() const noexcept
    {
        return m_line;
    }
    std::size_t column() const noexcept
    {
        return m_column;
    }

private:
    std::size_t m_line;
    std::size_t m_column;
};

} // namespace skewgb

#endif
