#ifndef RIGIDITY_ERRORS_HPP
#define RIGIDITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigidity {

enum class Err {
    InvalidGraph,
    NotSimple,
    ImproperSubgraph,
    SizeLimitExceeded,
    InvalidVertices,
    InvalidEdge,
    InvalidThirdVertex,
    WrongDegree,
    NotLaman,
    NotLamanPlusOne,
    NotType2Maximal,
    IllFormedStep,
    NotConeGraph,
    PointOffSurface,
    DimensionMismatch,
    NoConvergence,
    SamplingFailed,
    NoNontrivialFlex,
    CorrectionDiverged,
    InvalidInput,
};

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace rigidity

#endif
