#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace splitkit {

/// Raised for malformed input text. `position` is a byte offset into the
/// offending string.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at position " +
                             std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct ValidationReport {
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }

    std::string to_string() const {
        std::string out;
        for (const auto& p : problems) {
            if (!out.empty()) out += "; ";
            out += p;
        }
        return out;
    }
};

/// Raised when a PD code fails structural validation.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report)
        : std::runtime_error("invalid diagram: " + report.to_string()),
          report_(std::move(report)) {}

    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Raised when an operation's precondition is violated (unknown crossing id,
/// lassoing an inter-component crossing with component_lasso, etc).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace splitkit
