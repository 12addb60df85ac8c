#ifndef FCEXT_ERROR_HPP
#define FCEXT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fcext {

/* Thrown on precondition violations and on corrupt external data. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define FCEXT_CHECK(cond, msg)                       \
    do {                                             \
        if (!(cond))                                 \
            throw ::fcext::Error(std::string(msg)); \
    } while (0)

}  // namespace fcext

#endif
