#pragma once

#include "icsq/face_set.hpp"

namespace icsq::fixtures {

/// Single vertex.
FaceSet point();

/// Boundary of the 2-simplex (a 3-vertex circle).
FaceSet circle();

/// The full d-simplex.
FaceSet simplex(int d);

/// 6-vertex triangulation of the real projective plane (hemi-icosahedron).
FaceSet rp2();

/// 7-vertex Csaszar torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
FaceSet torus();

/// 9-vertex Klein bottle: 3x3 grid with one flipped gluing.
FaceSet klein_bottle();

/// 5-vertex Moebius band: triangles {i,i+1,i+2} mod 5.
FaceSet mobius_band();

} // namespace icsq::fixtures
