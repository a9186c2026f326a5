#include "vspace/duality.hpp"

namespace vspace {

OperatorTable violator_from_tau(const OperatorTable& tau) {
    require_kind(tau, OperatorKind::Tau, "violator_from_tau");
    const Subset e = tau.full();
    return OperatorTable::from_rule(tau.ground(), OperatorKind::Violator, [&](Subset x) { return e - tau(x); });
}

OperatorTable tau_from_violator(const OperatorTable& v) {
    require_kind(v, OperatorKind::Violator, "tau_from_violator");
    const Subset h = v.full();
    return OperatorTable::from_rule(v.ground(), OperatorKind::Tau, [&](Subset x) { return h - v(x); });
}

OperatorTable as_kind(const OperatorTable& op, OperatorKind kind) {
    if (op.kind() == kind) return op;
    return kind == OperatorKind::Tau ? tau_from_violator(op) : violator_from_tau(op);
}

}  // namespace vspace
