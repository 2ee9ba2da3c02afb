#ifndef OMCHAIN_ERRORS_HPP
#define OMCHAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace omchain
{

// Malformed or inconsistent user input: unreadable config files, unknown
// keys, out-of-range parameter values, bad sweep axes. The CLI maps this to
// exit code 2.
class ConfigError : public std::runtime_error
{
public:
    explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

// A computation that cannot proceed or did not converge: steady-state
// quantities requested at an unstable operating point, non-physical
// covariance output, failed bracket searches. The CLI maps this to exit
// code 3.
class NumericalError : public std::runtime_error
{
public:
    explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace omchain

#endif // OMCHAIN_ERRORS_HPP
