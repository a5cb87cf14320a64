#pragma once

#include <stdexcept>
#include <string>

namespace projcoh {

// Base for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates a documented precondition or invariant.
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// A configured cap (group order, representation dimension) was exceeded.
class resource_error : public error {
public:
    explicit resource_error(const std::string& msg) : error(msg) {}
};

// File or JSON trouble.
class io_error : public error {
public:
    explicit io_error(const std::string& msg) : error(msg) {}
};

// Something that should be impossible given verified inputs. Signals a bug,
// never a valid outcome.
class internal_error : public error {
public:
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace projcoh
