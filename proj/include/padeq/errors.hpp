#ifndef PADEQ_ERRORS_HPP
#define PADEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padeq
{

// Bad argument shape (wrong length, all-zero vector, out-of-range k).
class ArgumentError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request: zero denominator, pole, value outside
// the convergence region of an evaluator.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Q(x) = 0 at an evaluation point. `where` is the offending x as "p/q".
class PoleError : public DomainError
{
public:
    PoleError(const std::string &what, std::string where) : DomainError(what), where_(std::move(where)) {}
    const std::string &where() const noexcept { return where_; }

private:
    std::string where_;
};

// An invariant of a construction did not hold. Should be unreachable.
class ConstructionError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Malformed text input. line/column are 1-based, 0 when unknown.
class InputError : public std::runtime_error
{
public:
    InputError(const std::string &what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), line_(line), column_(column)
    {
    }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace padeq

#endif
