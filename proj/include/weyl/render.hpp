#pragma once

#include <string>

#include "weyl/correspondence.hpp"
#include "weyl/poly.hpp"
#include "weyl/ratfunc.hpp"
#include "weyl/subspace.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

/// Canonical renderings. Polynomials print in descending powers with
/// explicit signs and `*`; operators print terms sorted by D-degree then
/// t-degree, both descending. parse() inverts these forms exactly.
std::string to_text(const Rational& c);
std::string to_text(const Poly& p);
std::string to_text(const WeylOp& g, bool unicode = false);
std::string to_text(const Subspace& V);
std::string to_text(const IdealPresentation& I, bool unicode = false);

}  // namespace weyl
