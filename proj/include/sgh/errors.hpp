#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sgh {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A Cayley table failed one of the group axioms.
struct AxiomViolation : Error {
    std::string axiom;          // "identity", "associativity", "inverse"
    std::vector<int> witness;   // offending element indices
    AxiomViolation(std::string ax, std::vector<int> w, const std::string& what)
        : Error(what), axiom(std::move(ax)), witness(std::move(w)) {}
};

/// A map's domain/codomain does not match what the operation requires.
struct CodomainMismatch : Error {
    explicit CodomainMismatch(const std::string& what) : Error(what) {}
};

/// An isomorphism search was asked about groups above the configured cap.
struct OrderCap : Error {
    int order;
    int cap;
    OrderCap(int ord, int c, const std::string& what) : Error(what), order(ord), cap(c) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

/// One of the simplicial identities failed on a concrete element.
struct IdentityViolation : Error {
    std::string family;  // "dd", "ss", "ds-lt", "ds-eq", "ds-gt"
    int level;
    int i;
    int j;
    int element;
    IdentityViolation(std::string fam, int n, int ii, int jj, int el, const std::string& what)
        : Error(what), family(std::move(fam)), level(n), i(ii), j(jj), element(el) {}
};

struct NonAbelianNerve : Error {
    explicit NonAbelianNerve(const std::string& what) : Error(what) {}
};

struct DepthTooSmall : Error {
    explicit DepthTooSmall(const std::string& what) : Error(what) {}
};

/// A pruned search exceeded its node budget.
struct EnumerationCap : Error {
    long long budget;
    EnumerationCap(long long b, const std::string& what) : Error(what), budget(b) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

/// A connecting-map lift failed; only possible on a malformed exact sequence.
struct LiftFailure : Error {
    explicit LiftFailure(const std::string& what) : Error(what) {}
};

/// The Moore functor failed to be exact on a fixture.  This would falsify the
/// backend, so it is never downgraded to an ordinary check failure.
struct MooreSurjectivityFailure : Error {
    explicit MooreSurjectivityFailure(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace sgh
