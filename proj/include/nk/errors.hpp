#ifndef NK_ERRORS_HPP
#define NK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nk {

// Input that fails the matrix grammar. Offset is the byte position of the
// first character that could not be consumed.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Matrix is well-formed but violates a domain requirement (det != 1,
// wrong shape, empty polynomial, ...).
class domain_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Trace-norm hypothesis |tr(A)|^2 > 4 fails. CLI maps this to exit code 2.
class gate_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certified internal cross-check failed; never expected on valid input.
class internal_error : public std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace nk

#endif
