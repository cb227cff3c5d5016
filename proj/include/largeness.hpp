#pragma once

// Umbrella header.

#include "largeness/analyze.hpp"
#include "largeness/certificate.hpp"
#include "largeness/coset_table.hpp"
#include "largeness/errors.hpp"
#include "largeness/fox.hpp"
#include "largeness/freebycyclic.hpp"
#include "largeness/integer.hpp"
#include "largeness/integer_matrix.hpp"
#include "largeness/json_io.hpp"
#include "largeness/laurent.hpp"
#include "largeness/low_index.hpp"
#include "largeness/modular.hpp"
#include "largeness/onerelator.hpp"
#include "largeness/parse.hpp"
#include "largeness/permutation.hpp"
#include "largeness/polynomial.hpp"
#include "largeness/presentation.hpp"
#include "largeness/pv.hpp"
#include "largeness/reidemeister_schreier.hpp"
#include "largeness/verify.hpp"
#include "largeness/word.hpp"
