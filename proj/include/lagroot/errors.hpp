#ifndef LAGROOT_ERRORS_HPP
#define LAGROOT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lagroot {

/// Malformed textual input (rational strings, polynomial JSON, CLI values).
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A polynomial degree exceeded the table size of a monomial transform.
class CapacityError : public std::length_error {
   public:
    CapacityError(std::size_t requested, std::size_t capacity, const std::string& what)
        : std::length_error(what), requested_(requested), capacity_(capacity) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t capacity() const noexcept { return capacity_; }

   private:
    std::size_t requested_;
    std::size_t capacity_;
};

}  // namespace lagroot

#endif
