#include "eforce/errors.hpp"

#include <sstream>

#include "eforce/constants.hpp"

namespace eforce {

namespace {
std::string unstable_message(double omega_c, double omega_z) {
    std::ostringstream os;
    os << "trap unstable: omega_c^2 <= 2*omega_z^2 "
       << "(f_c = " << to_hz(omega_c) << " Hz, sqrt(2)*f_z = "
       << to_hz(1.4142135623730951 * omega_z) << " Hz); "
       << "no confined radial motion";
    return os.str();
}
}  // namespace

TrapUnstable::TrapUnstable(double omega_c_, double omega_z_)
    : PhysicsError(unstable_message(omega_c_, omega_z_)),
      omega_c(omega_c_),
      omega_z(omega_z_) {}

}  // namespace eforce
