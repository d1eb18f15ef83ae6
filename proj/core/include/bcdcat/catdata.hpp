#pragma once

#include <optional>
#include <vector>

#include "bcdcat/cyclotomic.hpp"
#include "bcdcat/labels.hpp"
#include "bcdcat/partition.hpp"
#include "bcdcat/series.hpp"

namespace bcdcat {

/// Quantum dimension by the general hook-content formula, at arbitrary exact
/// parameters: the product over diagonal cells of
/// ([lambda_j - lambda^v_j]_alpha + [hl(j,j)]) / [hl(j,j)] times the product
/// over off-diagonal cells of [d(i,j)]_alpha / [hl(i,j)].  Throws DomainError
/// if a hook quantum integer vanishes (the label is outside the valid
/// alcove for these parameters).
CycNum qdim_general(const CycNum& alpha, const CycNum& s, const Partition& lambda);

/// qdim_general at the spec's parameters, memoized per spec.  The memo
/// supports concurrent readers with populate-once writes.
CycNum qdim(const SeriesSpec& spec, const Partition& lambda);

/// The series' closed product formula (signed symplectic form for C/CB/CB-,
/// the half-integer orthogonal form for B-/BD/BD-, the two-case even
/// orthogonal form for D).  Defined for diagrams with at most n rows; throws
/// DomainError otherwise.  Agrees with qdim() on its domain.
CycNum qdim_specialized(const SeriesSpec& spec, const Partition& lambda);

/// Cross-check of the primed-statistic product form against the general
/// formula, evaluated in Q(zeta_{4M}) where the half powers of alpha and s
/// live.  Returns true iff the two routes agree exactly.
bool qdim_primed_form_matches(const SeriesSpec& spec, const Partition& lambda);

/// <1^j> = [0]_a [-1]_a ... [2-j]_a ([1-j]_a + [j]) / [j]!
CycNum qdim_column(const SeriesSpec& spec, int j);
/// <(j)> = [0]_a [1]_a ... [j-2]_a ([j-1]_a + [j]) / [j]!
CycNum qdim_row(const SeriesSpec& spec, int j);

/// t_lambda = alpha^{|lambda|} s^{2 sum of contents}.
CycNum twist(const SeriesSpec& spec, const Partition& lambda);

CycNum label_qdim(const SeriesSpec& spec, const Label& label);
CycNum label_twist(const SeriesSpec& spec, const Label& label);

/// Braiding coefficient between adjacent diagrams: s^{2 cn(c)} when `to` is
/// `from` plus the cell c, alpha^{-2} s^{-2 cn(c)} when `to` is `from` minus
/// c.  Throws DomainError if the diagrams are not adjacent.
CycNum braiding_coeff(const SeriesSpec& spec, const Partition& from, const Partition& to);

enum class BranchDirection { Add, Remove };

struct BranchEntry {
    Partition target;
    BranchDirection direction;
    bool negligible;  // quantum dimension of the target vanishes
};

/// Decomposition data of lambda (x) fundamental: all adjacent diagrams that
/// carry an idempotent at this specialization (members of Gamma-bar), each
/// tagged negligible iff its quantum dimension vanishes.
std::vector<BranchEntry> branching(const SeriesSpec& spec, const Partition& lambda);

/// The transparent simple objects: the trivial label, every nontrivial
/// lambda in Gamma whose non-negligible branching coefficients all equal
/// one, and the composite of the two generators when both are present.
std::vector<Label> transparent_objects(const SeriesSpec& spec);

enum class Modularizability { Modular, Modularizable, NotModularizable };

const char* modularizability_name(Modularizability m);

struct Verdict {
    Modularizability kind;
    /// For NotModularizable: a transparent object violating the criterion
    /// and its twist.
    std::optional<Label> witness;
    std::optional<CycNum> witness_twist;
};

/// Modularizability by the twist/dimension criterion: modular when no
/// nontrivial transparent object exists, modularizable when all transparent
/// objects have quantum dimension one and twist one.
Verdict modularizability(const SeriesSpec& spec);

/// Sum of squared dimensions over Gamma.
CycNum omega_gamma(const SeriesSpec& spec);
/// Sum of squared dimensions over the full dominating label set (Gamma plus
/// composite transparent labels).
CycNum omega_dominating(const SeriesSpec& spec);

struct ObjectData {
    Partition label;
    CycNum qdim;
    CycNum twist;
};

std::vector<ObjectData> object_table(const SeriesSpec& spec);

/// alpha written as sign * s^exponent (exists for every series spec).
std::pair<int, int> decompose_alpha(const SeriesSpec& spec);

}  // namespace bcdcat
