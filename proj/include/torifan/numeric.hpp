#pragma once

#include <gmpxx.h>

#include <string>

#include "torifan/error.hpp"

namespace torifan {

// Exact scalars.  No floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

/// num/den in canonical form (den > 0, coprime).  den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& q);

/// q must be integral.
Int to_integer(const Rat& q);

Int floor_int(const Rat& q);
Int ceil_int(const Rat& q);

std::string str(const Int& z);

/// Canonical "p" or "p/q" with q > 1.
std::string str(const Rat& q);

/// Accepts the forms emitted by str: "p" and "p/q".  Throws parse_error.
Rat parse_rat(const std::string& s);

}  // namespace torifan
