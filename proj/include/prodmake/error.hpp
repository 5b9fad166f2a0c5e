#ifndef PRODMAKE_ERROR_HPP
#define PRODMAKE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prodmake
{

// Root of everything the library throws on purpose. The C API maps each
// subclass onto a pm_status code.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad order, c_0 != 1, k > n, ...).
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

// Work would exceed a configured guard (partition enumeration size).
class ResourceLimit : public Error
{
public:
    using Error::Error;
};

// Malformed input text. `position` is a 0-based character offset.
class ParseError : public Error
{
public:
    ParseError(const std::string &msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)), position_(position)
    {
    }

    std::size_t position() const noexcept
    {
        return position_;
    }

private:
    std::size_t position_;
};

// Expression is well formed but cannot be expanded (zero denominator, ...).
// `begin`/`end` delimit the offending subexpression in the source text.
class EvaluationError : public Error
{
public:
    EvaluationError(const std::string &msg, std::size_t begin, std::size_t end)
        : Error(msg + " in subexpression [" + std::to_string(begin) + ", " + std::to_string(end) + ")"),
          begin_(begin), end_(end)
    {
    }

    std::size_t begin() const noexcept
    {
        return begin_;
    }
    std::size_t end() const noexcept
    {
        return end_;
    }

private:
    std::size_t begin_;
    std::size_t end_;
};

// Two independent routes disagreed.
class CrossCheckError : public Error
{
public:
    using Error::Error;
};

class NetworkError : public Error
{
public:
    using Error::Error;
};

} // namespace prodmake

#endif
