#include "eforce/constants.hpp"

namespace eforce {

const PhysConstants& PhysConstants::codata() {
    static const PhysConstants c{
        1.054571817e-34,    // hbar
        1.602176634e-19,    // e
        9.1093837015e-31,   // m_e
        8.8541878128e-12,   // eps0
        1.25663706212e-6,   // mu0
        1.380649e-23,       // k_B
        9.2740100783e-24,   // mu_B
        299792458.0,        // c
    };
    return c;
}

PhysConstants PhysConstants::natural() {
    return PhysConstants{1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
}

}  // namespace eforce
