#ifndef HUGHES_ERRORS_HPP
#define HUGHES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hughes {

// Division by the zero element of a field.
class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// A decomposition z = k*y + k' with k, k' in the subfield is not unique (y in the subfield).
class NotUnique : public std::domain_error {
public:
    explicit NotUnique(const std::string& what) : std::domain_error(what) {}
};

// Caller broke a documented precondition (mismatched contexts, unreduced input, bad index).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hughes

#endif  // HUGHES_ERRORS_HPP
