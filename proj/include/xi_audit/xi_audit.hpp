#pragma once

#include "xi_audit/core/complex.hpp"
#include "xi_audit/core/error.hpp"
#include "xi_audit/core/precision.hpp"
#include "xi_audit/core/quadrature.hpp"
#include "xi_audit/core/real.hpp"
#include "xi_audit/special/gamma.hpp"
#include "xi_audit/special/xi.hpp"
#include "xi_audit/special/zeta.hpp"
#include "xi_audit/zeros/zero_finder.hpp"
#include "xi_audit/construction/boundary_function.hpp"
#include "xi_audit/identity/fg_terms.hpp"
#include "xi_audit/identity/identity_audit.hpp"
#include "xi_audit/symbolic/rational_poly.hpp"
#include "xi_audit/symbolic/trig_hyp.hpp"
#include "xi_audit/symbolic/printed_forms.hpp"
#include "xi_audit/symbolic/derivation.hpp"
#include "xi_audit/symbolic/audit.hpp"
#include "xi_audit/search/forms.hpp"
#include "xi_audit/search/case_analysis.hpp"
#include "xi_audit/search/verdict.hpp"
#include "xi_audit/report/anchors.hpp"
#include "xi_audit/report/audit_report.hpp"
#include "xi_audit/report/svg.hpp"
