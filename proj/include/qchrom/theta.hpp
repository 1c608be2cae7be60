#ifndef QCHROM_THETA_HPP
#define QCHROM_THETA_HPP

#include "qchrom/graph.hpp"
#include "qchrom/sdp.hpp"

namespace qchrom {

enum class ThetaVariant { Standard, Minus, Plus };

struct ThetaResult {
    ThetaVariant variant = ThetaVariant::Standard;
    double value = 0.0;
    SymMatrix witness;
    SdpStatus status = SdpStatus::Undecided;
    double max_constraint_violation = 0.0;
};

/// Lovasz theta and its Schrijver (minus) / Szegedy (plus) variants:
/// maximize <J,X> with tr X = 1, X PSD, and per-variant edge constraints
/// (standard: X_uv = 0 on edges; minus: additionally X >= 0 entrywise;
/// plus: X_uv <= 0 on edges instead of the equality).
ThetaResult theta(const Graph& g, ThetaVariant variant,
                  const SdpOptions& opts = {});

}  // namespace qchrom

#endif
