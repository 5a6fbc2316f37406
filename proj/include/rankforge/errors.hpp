#pragma once

#include <stdexcept>
#include <string>

namespace rankforge {

/// Base for every error this library raises on purpose. Anything else
/// escaping (std::logic_error, assertion failures) indicates a bug, not a
/// rejected input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// invert() was asked to invert a series whose known coefficients are all zero.
class ZeroLeadingTerm : public Error {
public:
    explicit ZeroLeadingTerm(const std::string& msg) : Error(msg) {}
};

/// A coefficient was requested at or beyond the truncation order.
class OutOfWindow : public Error {
public:
    explicit OutOfWindow(const std::string& msg) : Error(msg) {}
};

/// j(x;q) at x = q^{km} with unit coefficient is identically zero; atoms are
/// not allowed to be built on that degenerate triple.
class DegenerateTheta : public Error {
public:
    explicit DegenerateTheta(const std::string& msg) : Error(msg) {}
};

/// An infinite Pochhammer product with a non-positive starting exponent has
/// no formal power-series limit.
class NonconvergentProduct : public Error {
public:
    explicit NonconvergentProduct(const std::string& msg) : Error(msg) {}
};

/// g(x;q) has a pole at x = 1.
class PoleAtOne : public Error {
public:
    explicit PoleAtOne(const std::string& msg) : Error(msg) {}
};

/// A verification was requested at an order below the entry's minimum.
class WindowTooSmall : public Error {
public:
    explicit WindowTooSmall(const std::string& msg) : Error(msg) {}
};

/// A table lookup was requested beyond the range the table was built to.
class TableTooSmall : public Error {
public:
    explicit TableTooSmall(const std::string& msg) : Error(msg) {}
};

/// A literal enumeration was requested beyond its configured cap.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

/// Expression text failed to parse; carries a 1-based line and column.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          _line(line),
          _column(column) {}

    int line() const { return _line; }
    int column() const { return _column; }

private:
    int _line;
    int _column;
};

/// Bad run configuration (unknown filter, order out of range, ...). The CLI
/// maps this to exit code 2.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// An internal dual-route cross-check disagreed. This is a hard failure: the
/// two computation paths are supposed to be independent derivations of the
/// same numbers.
class CrossCheckFailure : public Error {
public:
    explicit CrossCheckFailure(const std::string& msg) : Error(msg) {}
};

}  // namespace rankforge
