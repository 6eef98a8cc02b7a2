#pragma once

// Umbrella header: exact-integer calculus of telescopic sequences and the
// free numerical semigroups they generate.

#include "teleseq/bigint.hpp"
#include "teleseq/construct.hpp"
#include "teleseq/error.hpp"
#include "teleseq/minimize.hpp"
#include "teleseq/monoid_oracle.hpp"
#include "teleseq/polynomial.hpp"
#include "teleseq/sequence.hpp"
#include "teleseq/telescopic.hpp"
#include "teleseq/transforms.hpp"
