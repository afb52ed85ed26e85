#pragma once

#include <stdexcept>
#include <string>

namespace dpo {

// Deformation parameters of the two reflection directions. Both must stay
// above -1/2 or the underlying measure is no longer normalizable.
struct DunklParams {
    double nu1;
    double nu2;

    DunklParams(double n1, double n2) : nu1(n1), nu2(n2) {
        if (!(nu1 > -0.5) || !(nu2 > -0.5))
            throw std::domain_error("DunklParams: nu1, nu2 must be > -1/2");
    }
};

// Joint parity sector (eps1, eps2) of the two reflections; eps = eps1*eps2
// labels the sector of the product reflection.
struct ParitySector {
    int eps1;
    int eps2;

    ParitySector(int e1, int e2) : eps1(e1), eps2(e2) {
        if ((e1 != 1 && e1 != -1) || (e2 != 1 && e2 != -1))
            throw std::invalid_argument("ParitySector: eps1, eps2 must be +1 or -1");
    }
    int eps() const { return eps1 * eps2; }
};

// Flux strength and spin projection entering the radial problem.
struct FluxSpin {
    double vartheta;
    int m_s;

    FluxSpin(double theta, int ms) : vartheta(theta), m_s(ms) {
        if (!(vartheta >= 0.0))
            throw std::domain_error("FluxSpin: vartheta must be >= 0");
        if (ms != 1 && ms != -1)
            throw std::invalid_argument("FluxSpin: m_s must be +1 or -1");
    }
};

// Value/derivative pair of a degree-n orthogonal polynomial evaluation.
struct PolyEval {
    int degree;
    double value;
    double derivative;
};

// The requested quantum index is not on the admissible lattice for its sector.
struct lattice_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A closed-form branch reduction was requested outside its validity region.
struct branch_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Two closed forms that must agree did not.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The flux coupling requires a parameter relation that does not hold.
struct constraint_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dpo
