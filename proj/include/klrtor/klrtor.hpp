#pragma once
// Umbrella header.

#include "klrtor/exact/field.hpp"
#include "klrtor/exact/interpolate.hpp"
#include "klrtor/exact/laurent.hpp"
#include "klrtor/exact/matrix.hpp"
#include "klrtor/quiver/quiver.hpp"
#include "klrtor/quiver/rep.hpp"
#include "klrtor/quiver/root_system.hpp"
#include "klrtor/quiver/multisegment.hpp"
#include "klrtor/strata/strata.hpp"
#include "klrtor/weyl/permutation.hpp"
#include "klrtor/weyl/kl.hpp"
#include "klrtor/weyl/zelevinsky.hpp"
#include "klrtor/ks/ks.hpp"
#include "klrtor/bmp/moment_graph.hpp"
#include "klrtor/bmp/sheaf.hpp"
#include "klrtor/bmp/probe.hpp"
#include "klrtor/groth/decomposition.hpp"
#include "klrtor/groth/identity.hpp"
#include "klrtor/util/deadline.hpp"
