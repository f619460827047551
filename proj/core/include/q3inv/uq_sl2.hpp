#pragma once

#include <q3inv/hopf.hpp>

namespace q3inv {

// Restricted quantum sl2 at an odd prime p (q a primitive p-th root of unity),
// in the PBW basis E^a Ftil^b K^c where Ftil = (q - q^{-1}) F.  Dimension p^3.
// The returned algebra carries quasitriangular and balancing data and an
// engine-hooks object that accelerates certification and trace contraction.
HopfAlgebra uq_sl2(long p);

}  // namespace q3inv
