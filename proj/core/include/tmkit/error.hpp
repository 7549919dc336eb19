#pragma once

#include <stdexcept>
#include <string>

namespace tmkit
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Malformed input: bad vertex indices, inconsistent labels, unparsable files.
    class InvalidInput : public Error
    {
        public:
            using Error::Error;
    };

    /// A precondition of an operation does not hold for the given arguments.
    class PreconditionFailed : public Error
    {
        public:
            using Error::Error;
    };

    /// A configured resource ceiling was exceeded. The ceiling's name is kept so
    /// that callers (the CLI in particular) can report which knob to turn.
    class CeilingExceeded : public Error
    {
        public:
            CeilingExceeded(const std::string & ceiling, long long limit, long long actual) :
                Error("ceiling '" + ceiling + "' exceeded: limit " + std::to_string(limit) + ", got " + std::to_string(actual)),
                _ceiling(ceiling)
            {
            }

            auto ceiling() const -> const std::string &
            {
                return _ceiling;
            }

        private:
            std::string _ceiling;
    };

    inline auto check_ceiling(const char * name, long long limit, long long actual) -> void
    {
        if (actual > limit)
            throw CeilingExceeded(name, limit, actual);
    }
}
