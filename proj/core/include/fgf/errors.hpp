#pragma once

#include <stdexcept>
#include <string>

namespace fgf {

/// Base class for all library errors. `name()` is the stable identifier
/// recorded in run manifests and mapped to exit codes by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define FGF_DEFINE_ERROR(E)                                        \
    class E : public Error {                                       \
    public:                                                        \
        explicit E(const std::string& what) : Error(#E, what) {}   \
    }

FGF_DEFINE_ERROR(DomainError);        // parameter outside an operation's domain
FGF_DEFINE_ERROR(PoleError);          // Gamma pole hit (H a nonnegative integer)
FGF_DEFINE_ERROR(NoPointwiseKernel);  // negative-s regimes have no pointwise kernel
FGF_DEFINE_ERROR(MomentError);        // test function lacks required vanishing moments
FGF_DEFINE_ERROR(QuadratureError);    // adaptive quadrature failed to converge
FGF_DEFINE_ERROR(SingularityError);   // kernel evaluated on its singular set
FGF_DEFINE_ERROR(PSDError);           // positive-semidefiniteness certificate failed
FGF_DEFINE_ERROR(FactorizationError); // Cholesky / solve failure
FGF_DEFINE_ERROR(DominanceError);     // precision matrix diagonal dominance failed
FGF_DEFINE_ERROR(TailError);          // truncation tail exceeds requested tolerance
FGF_DEFINE_ERROR(HypergeometricError);// 2F1 series/branch failure or degenerate case
FGF_DEFINE_ERROR(GeometryError);      // incompatible grids / non-lattice inputs
FGF_DEFINE_ERROR(InsufficientData);   // too few samples or pairs for a statistic

#undef FGF_DEFINE_ERROR

} // namespace fgf
