#pragma once

#include <stdexcept>
#include <string>

namespace gac {

/// Malformed or inadmissible graph input (parse errors carry the line number).
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Eigensolver failed to reduce a matrix within its iteration cap.
class EigNonConvergence : public std::runtime_error {
public:
    explicit EigNonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Requested tolerance unreachable within the series term cap.
class ExpTolError : public std::runtime_error {
public:
    explicit ExpTolError(const std::string& what) : std::runtime_error(what) {}
};

/// Zero eigenvalue of the Laplacian is not simple at tolerance.
class MultiplicityError : public std::runtime_error {
public:
    explicit MultiplicityError(const std::string& what) : std::runtime_error(what) {}
};

/// Successive iterates are parallel; the two-dimensional span collapsed.
class DegenerateSubspace : public std::runtime_error {
public:
    explicit DegenerateSubspace(const std::string& what) : std::runtime_error(what) {}
};

/// A consensus-observer norm estimate came back nonpositive; the
/// distributed iteration cannot continue from such a state.
class ObserverBreakdown : public std::runtime_error {
public:
    explicit ObserverBreakdown(const std::string& what) : std::runtime_error(what) {}
};

/// A node attempted to send along a link that does not exist.
class LocalityViolation : public std::logic_error {
public:
    explicit LocalityViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gac
