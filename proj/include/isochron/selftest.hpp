/**
 * @file selftest.hpp
 * @brief Built-in golden self-test: reproduces the reference mould tables
 *        and the worked correction formulas, checks odd-depth vanishing
 *        and the two-route agreement.
 *
 * Formula prints that are known to carry transcription noise are compared
 * and any divergence from the assembled value is reported as a documented
 *        diagnostic; the two-route agreement is the binding check.
 */
#pragma once

#include "isochron/sympoly.hpp"

#include <iosfwd>

namespace isochron {

/// Returns 0 on success, 1 on any mismatch (a diff is printed).
int run_selftest(std::ostream& out);

/// Reference formula builders shared by the self-test and the acceptance
/// suite. All are the raw printed forms; reduce() before comparing.
namespace reference {

/// i (6 |p[1,0]|^2 + 2/3 |p[-1,2]|^2)
SymPoly quadratic_carr2();
/// p[1,1] + quadratic_carr2()
SymPoly cubic_carr2();
/// i (12 |p[2,0]|^2 + 3/4 |p[-1,3]|^2)
SymPoly carr42_x3x3();
/// i 12 Re(p[2,1] ~p[1,0])
SymPoly carr42_x4x2_interior();
/// i 8 Re(p[3,0] p[-1,2])
SymPoly carr42_x4x2_edge();
/// -i (120 Im(p[2,0] ~p[1,0]^2) + 26/3 Im(~p[-1,3] p[-1,2] ~p[1,0])
///     + 40 Im(p[2,0] p[-1,2] p[1,0]))
SymPoly carr43_print();
/// i (-144 |p[1,0]|^4 + 12 |p[1,0]|^2 |p[-1,2]|^2 - 8/9 |p[-1,2]|^4
///    + 40 Re(p[-1,2] p[0,1]^3))
SymPoly carr44_print();

}  // namespace reference

}  // namespace isochron
