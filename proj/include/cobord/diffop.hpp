#pragma once
// The degree-lowering operator d: each monomial maps to the sum of its
// single-factor deletions.  d is linear, d о d = 0, and its kernel on the
// cocharacter side characterises realizable fixed-point data.

#include "cobord/algebra.hpp"

namespace cobord {

Polynomial d(const Monomial& m);
Polynomial d(const Polynomial& p);

bool is_squarefree(const Polynomial& p);

// Given a nonzero squarefree cycle h, returns a squarefree H with
// d(H) = h.  Picks the smallest vector absent from h when one exists, so
// the correction branch is usually empty.  Throws NotACycle, NotSquarefree.
Polynomial find_primitive(const Polynomial& h);

}  // namespace cobord
