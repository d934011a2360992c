#ifndef TOKENGRAPH_ERRORS_HPP
#define TOKENGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tokengraph {

// Malformed input text (graph6, adjacency lists). Carries the byte offset of
// the first offending byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Arguments outside an operation's domain (bad k, wrong sizes).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration bound was exceeded.
class SizeError : public std::runtime_error {
public:
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// The input violates a structural promise (e.g. it is not the token graph of
// a connected (C4,diamond)-free graph). Carries the pipeline stage that
// detected the violation.
class StructureError : public std::runtime_error {
public:
    StructureError(const std::string& stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(stage) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

}  // namespace tokengraph

#endif
