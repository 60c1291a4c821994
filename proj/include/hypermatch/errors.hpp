#ifndef HYPERMATCH_ERRORS_HPP
#define HYPERMATCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypermatch {

// Base for all domain errors. `code()` is the stable machine-readable name
// emitted by the CLI in error JSON.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define HYPERMATCH_DEFINE_ERROR(Name)                          \
    class Name : public error {                                \
    public:                                                    \
        explicit Name(const std::string& msg = #Name)          \
            : error(#Name, msg) {}                             \
    }

HYPERMATCH_DEFINE_ERROR(NonUniformEdge);
HYPERMATCH_DEFINE_ERROR(DuplicateEdge);
HYPERMATCH_DEFINE_ERROR(VertexOutOfRange);
HYPERMATCH_DEFINE_ERROR(BadEdgeIndex);
HYPERMATCH_DEFINE_ERROR(EmptyVertexSet);
HYPERMATCH_DEFINE_ERROR(SizeLimitExceeded);
HYPERMATCH_DEFINE_ERROR(NoEdges);
HYPERMATCH_DEFINE_ERROR(EdgeNotInGraph);
HYPERMATCH_DEFINE_ERROR(MultipleEdgeCreated);
HYPERMATCH_DEFINE_ERROR(PreconditionViolated);
HYPERMATCH_DEFINE_ERROR(DuplicateEdgeAfterJoin);
HYPERMATCH_DEFINE_ERROR(NotAGraph);
HYPERMATCH_DEFINE_ERROR(BadParams);
HYPERMATCH_DEFINE_ERROR(CapExceeded);
HYPERMATCH_DEFINE_ERROR(DimensionMismatch);
HYPERMATCH_DEFINE_ERROR(NotConnected);
HYPERMATCH_DEFINE_ERROR(NoConvergence);
HYPERMATCH_DEFINE_ERROR(UndecidedAtBoundary);
HYPERMATCH_DEFINE_ERROR(UndecidedComparison);
HYPERMATCH_DEFINE_ERROR(ParseError);

#undef HYPERMATCH_DEFINE_ERROR

} // namespace hypermatch

#endif
