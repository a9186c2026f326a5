#pragma once

#include "vspace/operator_table.hpp"

namespace vspace {

/// V(X) = E - tau(X), pointwise on any tau-table; no axiom is required.
OperatorTable violator_from_tau(const OperatorTable& tau);

/// tau(X) = H - V(X), pointwise on any V-table.
OperatorTable tau_from_violator(const OperatorTable& v);

/// The table in the requested presentation (a copy when already there).
OperatorTable as_kind(const OperatorTable& op, OperatorKind kind);

inline OperatorTable as_tau(const OperatorTable& op) { return as_kind(op, OperatorKind::Tau); }
inline OperatorTable as_violator(const OperatorTable& op) { return as_kind(op, OperatorKind::Violator); }

}  // namespace vspace
