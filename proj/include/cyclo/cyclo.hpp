#pragma once

#include "cyclo/constructions.hpp"
#include "cyclo/deletion.hpp"
#include "cyclo/diameter.hpp"
#include "cyclo/enumerate.hpp"
#include "cyclo/error.hpp"
#include "cyclo/flip.hpp"
#include "cyclo/geodesic.hpp"
#include "cyclo/path.hpp"
#include "cyclo/polygon.hpp"
#include "cyclo/records.hpp"
#include "cyclo/state_graph.hpp"
#include "cyclo/svg.hpp"
#include "cyclo/symmetry.hpp"
#include "cyclo/text_format.hpp"
#include "cyclo/triangulation.hpp"
#include "cyclo/verify.hpp"
