#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcdcat/cyclotomic.hpp"
#include "bcdcat/labels.hpp"
#include "bcdcat/partition.hpp"

namespace bcdcat {

/// The seven root-of-unity specializations of the Kauffman parameters.
/// The CLI names are "C", "CB", "CB-", "B-", "BD", "BD-", "D".
enum class Series { C, CB, CBneg, Bneg, BD, BDneg, D };

std::string series_name(Series s);
Series parse_series(const std::string& name);

/// One specialization: the series tag plus (n, k) determine the order l of
/// s^2, the cyclotomic order M, and the exact values of s and alpha.
///
///   C    : l = 2n+2k+2, M = 2l, alpha = -s^{2n+1} =  s^{-2k-1}
///   CB   : l = 2n+2k+1, M = 2l, alpha = -s^{2n+1} =  s^{-2k}
///   CB-  : l = 2n+2k+1, M =  l, alpha = -s^{2n+1} = -s^{-2k}
///   B-   : l = 2n+2k,   M = 2l, alpha =  s^{2n}   = -s^{-2k}
///   BD   : l = 2n+2k-1, M = 2l, alpha =  s^{2n}   = -s^{-2k+1}
///   BD-  : l = 2n+2k-1, M =  l, alpha = -s^{2n}   = -s^{-2k+1}
///   D    : l = 2n+2k-2, M = 2l, alpha =  s^{2n-1} = -s^{-2k+1}
///
/// s is fixed to the canonical primitive root zeta_M, which makes every
/// output reproducible bit for bit; the asserted identities are invariant
/// under the Galois choices the construction leaves open.
struct SeriesSpec {
    Series series;
    int n = 0;
    int k = 0;
    int l = 0;
    unsigned M = 0;
    CycNum s;
    CycNum alpha;

    std::string name() const;
};

/// Builds and validates a specialization.  Rejects n, k outside each series'
/// bounds and the degenerate parameter values alpha in {1, -1, s, -s,
/// s^{-1}, -s^{-1}} (trivial, zero-polynomial and U(1) cases), which rules
/// out BD/BD- with k = 1 and D with n = 1 or k = 1.  The two defining
/// expressions for alpha are verified to agree exactly in Q(zeta_M), and the
/// multiplicative orders of s and s^2 are verified to be exactly M and l.
SeriesSpec make_spec(Series series, int n, int k);

/// Label data of one series: the representative set Gamma, the enlarged set
/// Gamma-bar carrying the negligible boundary, and the composite transparent
/// labels that extend Gamma to a dominating set where the braiding forces
/// them (B-, BD, BD-, D).
struct LabelSet {
    std::vector<Partition> gamma;
    std::vector<Partition> gamma_bar;
    std::vector<Label> extra;
};

LabelSet label_sets(const SeriesSpec& spec);

DiagramConstraints gamma_constraints(const SeriesSpec& spec);
DiagramConstraints gamma_bar_constraints(const SeriesSpec& spec);

/// Level-rank duality partner.  Transposition maps Gamma(spec) onto the
/// partner's label set; for the mixed series the partner carries a formal
/// tag ("BC", "DB", "BC-", "DB-") and is served through transposition
/// rather than as an independently coded series.
struct DualInfo {
    std::string series_name;
    int n = 0;
    int k = 0;
    /// Present when the partner is itself one of the seven coded series.
    std::optional<SeriesSpec> spec;
    /// labels[i] is the transpose of gamma[i] of the source spec.
    std::vector<Partition> labels;
};

DualInfo level_rank_dual(const SeriesSpec& spec);

}  // namespace bcdcat
