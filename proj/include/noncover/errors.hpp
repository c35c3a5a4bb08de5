#ifndef NONCOVER_ERRORS_HPP
#define NONCOVER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace noncover {

// Malformed input text; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// An enumeration or search hit its configured guard.  Distinct from a
// negative answer: the computation was cut off, not decided.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::size_t budget, std::size_t reached)
        : std::runtime_error(what + " (budget " + std::to_string(budget) + ", reached " +
                             std::to_string(reached) + ")"),
          budget_(budget),
          reached_(reached) {}

    std::size_t budget() const { return budget_; }
    std::size_t reached() const { return reached_; }

private:
    std::size_t budget_;
    std::size_t reached_;
};

}  // namespace noncover

#endif
