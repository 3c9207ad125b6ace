#pragma once

// Umbrella header: exact rational polynomial algebra, infinitesimal
// simplicial loci and their cosimplicial structure, the de Rham
// transcription maps, and Quillen modules over presented rings.

#include "nilform/cosimplicial.hpp"
#include "nilform/delta.hpp"
#include "nilform/derham.hpp"
#include "nilform/dform.hpp"
#include "nilform/error.hpp"
#include "nilform/inf_algebra.hpp"
#include "nilform/linalg.hpp"
#include "nilform/loci.hpp"
#include "nilform/module_harness.hpp"
#include "nilform/parser.hpp"
#include "nilform/polynomial.hpp"
#include "nilform/random_gen.hpp"
#include "nilform/rational.hpp"
#include "nilform/report.hpp"
#include "nilform/tangent.hpp"
#include "nilform/tangent_category.hpp"
#include "nilform/tangent_checks.hpp"
#include "nilform/taylor.hpp"
#include "nilform/variable.hpp"
