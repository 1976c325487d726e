// Umbrella header.
#ifndef MILNOR_MILNOR_HPP
#define MILNOR_MILNOR_HPP

#include "milnor/corpus.hpp"
#include "milnor/doubling.hpp"
#include "milnor/equivariant.hpp"
#include "milnor/errors.hpp"
#include "milnor/group.hpp"
#include "milnor/jobfile.hpp"
#include "milnor/local_order.hpp"
#include "milnor/milnor_number.hpp"
#include "milnor/monomial.hpp"
#include "milnor/parse.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/rational.hpp"
#include "milnor/report.hpp"
#include "milnor/standard_basis.hpp"
#include "milnor/sweep.hpp"
#include "milnor/verification.hpp"

#endif
