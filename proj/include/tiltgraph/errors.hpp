#pragma once

#include <stdexcept>
#include <string>

namespace tiltgraph {

// Base class for all engine errors. `kind()` is stable and machine-parseable;
// the CLI prints it on its `error: <kind>: <message>` line.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define TILTGRAPH_ERROR_CLASS(name)                        \
    class name : public Error {                           \
    public:                                                \
        explicit name(const std::string& message)          \
            : Error(#name, message) {}                     \
    }

TILTGRAPH_ERROR_CLASS(SyntaxError);          // malformed document text
TILTGRAPH_ERROR_CLASS(SchemaError);          // required field missing
TILTGRAPH_ERROR_CLASS(NotFoundError);        // referenced id does not exist
TILTGRAPH_ERROR_CLASS(DuplicateError);       // re-ingest with replacement disabled
TILTGRAPH_ERROR_CLASS(InvariantViolation);   // graph invariant would break
TILTGRAPH_ERROR_CLASS(PatternError);         // bad pattern / attribute type mismatch
TILTGRAPH_ERROR_CLASS(CoverageError);        // community assignment misses a node
TILTGRAPH_ERROR_CLASS(EmptyProjectionError); // projection over a graph without meta nodes
TILTGRAPH_ERROR_CLASS(ConfigError);          // invalid generator/simulation config
TILTGRAPH_ERROR_CLASS(EmptyCorpusError);     // estimation over an empty corpus
TILTGRAPH_ERROR_CLASS(MissingMetadataError); // corpus lacks generation metadata
TILTGRAPH_ERROR_CLASS(SelfMergeError);       // merge of a controller with itself
TILTGRAPH_ERROR_CLASS(IoError);              // file read/write failure

#undef TILTGRAPH_ERROR_CLASS

} // namespace tiltgraph
