#include "bcdcat/catdata.hpp"

#include <algorithm>
#include <map>
#include <shared_mutex>
#include <tuple>

namespace bcdcat {

namespace {

struct SpecKey {
    int series;
    int n;
    int k;
    friend auto operator<=>(const SpecKey&, const SpecKey&) = default;
};

SpecKey key_of(const SeriesSpec& spec) {
    return SpecKey{static_cast<int>(spec.series), spec.n, spec.k};
}

struct QdimCache {
    std::shared_mutex mtx;
    std::map<std::pair<SpecKey, std::vector<int>>, CycNum> values;
};

QdimCache& qdim_cache() {
    static QdimCache cache;
    return cache;
}

}  // namespace

CycNum qdim_general(const CycNum& alpha, const CycNum& s, const Partition& lambda) {
    const unsigned M = s.order();
    CycNum acc = CycNum::one(M);
    for (auto [i, j] : lambda.cells()) {
        const CycNum hl = qint(s, lambda.hook_length(i, j));
        if (hl.is_zero())
            throw DomainError("vanishing hook denominator at cell (" + std::to_string(i) + "," +
                              std::to_string(j) + ") of " + lambda.str());
        if (i == j) {
            acc *= (qint_alpha(alpha, s, lambda.part(i) - lambda.col(i)) + hl) / hl;
        } else {
            acc *= qint_alpha(alpha, s, lambda.d_stat(i, j)) / hl;
        }
    }
    return acc;
}

CycNum qdim(const SeriesSpec& spec, const Partition& lambda) {
    auto& cache = qdim_cache();
    const auto key = std::make_pair(key_of(spec), lambda.parts());
    {
        std::shared_lock lock(cache.mtx);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }
    CycNum value = qdim_general(spec.alpha, spec.s, lambda);
    std::unique_lock lock(cache.mtx);
    auto [it, inserted] = cache.values.emplace(key, std::move(value));
    (void)inserted;
    return it->second;
}

namespace {

// Brackets with a half-integer entry, evaluated through t = s^{1/2} living
// in a larger cyclotomic field:  [x] = (t^{2x} - t^{-2x}) / (t^2 - t^{-2}).
struct HalfBrackets {
    CycNum t;  // square root of the working image of s

    CycNum integer(long x) const {
        return (pow(t, 2 * x) - pow(t, -2 * x)) / (t * t - (t * t).inv());
    }
    CycNum half(long x) const {  // [x + 1/2]
        return (pow(t, 2 * x + 1) - pow(t, -2 * x - 1)) / (t * t - (t * t).inv());
    }
};

// The odd orthogonal product form at parameters (alpha, s) = (t^{4n}, t^2).
CycNum qdim_B_form(const HalfBrackets& br, int n, const Partition& lambda) {
    const unsigned W = br.t.order();
    CycNum acc = CycNum::one(W);
    for (int j = 1; j <= n; ++j) {
        acc *= br.half(n + lambda.part(j) - j) / br.half(n - j);
    }
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            acc *= br.integer(2 * n + lambda.part(i) - i + lambda.part(j) - j + 1) *
                   br.integer(lambda.part(i) - i - lambda.part(j) + j) /
                   (br.integer(2 * n - i - j + 1) * br.integer(j - i));
        }
    }
    return acc;
}

CycNum qdim_C_form(const SeriesSpec& spec, const Partition& lambda) {
    const int n = spec.n;
    const CycNum& s = spec.s;
    CycNum acc = CycNum::one(spec.M);
    for (int j = 1; j <= n; ++j) {
        acc *= qint(s, 2 * n + 2 + 2 * lambda.part(j) - 2 * j) / qint(s, 2 * n + 2 - 2 * j);
    }
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            acc *= qint(s, 2 * n + 2 + lambda.part(i) - i + lambda.part(j) - j) *
                   qint(s, lambda.part(i) - i - lambda.part(j) + j) /
                   (qint(s, 2 * n + 2 - i - j) * qint(s, j - i));
        }
    }
    return lambda.size() % 2 == 0 ? acc : -acc;
}

CycNum qdim_D_form(const SeriesSpec& spec, const Partition& lambda) {
    const int n = spec.n;
    const CycNum& s = spec.s;
    CycNum acc = lambda.part(n) != 0 ? CycNum::from_integer(spec.M, 2) : CycNum::one(spec.M);
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            acc *= qint(s, 2 * n + lambda.part(i) - i + lambda.part(j) - j) *
                   qint(s, lambda.part(i) - i - lambda.part(j) + j) /
                   (qint(s, 2 * n - i - j) * qint(s, j - i));
        }
    }
    return acc;
}

}  // namespace

CycNum qdim_specialized(const SeriesSpec& spec, const Partition& lambda) {
    if (lambda.rows() > spec.n)
        throw DomainError("the specialized dimension formula needs at most n rows, got " +
                          lambda.str() + " at " + spec.name());
    switch (spec.series) {
        case Series::C:
        case Series::CB:
        case Series::CBneg:
            return qdim_C_form(spec, lambda);
        case Series::Bneg:
        case Series::BD: {
            // alpha = s^{2n} with s = zeta_M, M even: work in Q(zeta_{2M}).
            HalfBrackets br{CycNum::root(2 * spec.M, 1)};
            return descend(qdim_B_form(br, spec.n, lambda), spec.M);
        }
        case Series::BDneg: {
            // alpha = -s^{2n}: dimensions are invariant under
            // (alpha, s) -> (-alpha, -s), which has the B shape at -s.
            // M is odd, so a square root of -zeta_M needs Q(zeta_{4M}).
            HalfBrackets br{CycNum::root(4 * spec.M, static_cast<long>(spec.M) + 2)};
            return descend(qdim_B_form(br, spec.n, lambda), spec.M);
        }
        case Series::D:
            return qdim_D_form(spec, lambda);
    }
    throw InvalidParameterError("unknown series");
}

std::pair<int, int> decompose_alpha(const SeriesSpec& spec) {
    for (int e = 0; e < static_cast<int>(spec.M); ++e) {
        const CycNum p = pow(spec.s, e);
        if (spec.alpha == p) return {+1, e};
        if (spec.alpha == -p) return {-1, e};
    }
    throw ConsistencyError("alpha is not plus or minus a power of s");
}

bool qdim_primed_form_matches(const SeriesSpec& spec, const Partition& lambda) {
    const unsigned W = 4 * spec.M;
    const CycNum u = CycNum::root(W, 2);  // u^2 = zeta_M = s
    auto [sign, exp] = decompose_alpha(spec);
    CycNum a = pow(u, exp);  // a^2 = +-alpha, corrected below
    if (sign < 0) a *= CycNum::root(W, spec.M);  // (zeta_W^M)^2 = -1
    const CycNum a_inv = a.inv();

    CycNum product = CycNum::one(W);
    for (auto [i, j] : lambda.cells()) {
        const int hl = lambda.hook_length(i, j);
        const int d = lambda.d_stat(i, j);
        const int dp = lambda.d_prime_stat(i, j);
        const CycNum num1 = a * pow(u, d) - a_inv * pow(u, -d);
        const CycNum den1 = pow(u, hl) - pow(u, -hl);
        const CycNum num2 = a * pow(u, dp) + a_inv * pow(u, -dp);
        const CycNum den2 = pow(u, hl) + pow(u, -hl);
        if (den1.is_zero() || den2.is_zero())
            throw DomainError("vanishing hook denominator in the primed product form");
        product *= (num1 / den1) * (num2 / den2);
    }
    return product == embed(qdim(spec, lambda), W);
}

CycNum qdim_column(const SeriesSpec& spec, int j) {
    if (j < 0) throw InvalidParameterError("column length must be nonnegative");
    if (j == 0) return CycNum::one(spec.M);
    const CycNum fact = qfactorial(spec.s, j);
    if (fact.is_zero()) throw DomainError("[j]! vanishes at this specialization");
    CycNum acc = CycNum::one(spec.M);
    for (int m = 0; m >= 2 - j; --m) acc *= qint_alpha(spec.alpha, spec.s, m);
    acc *= qint_alpha(spec.alpha, spec.s, 1 - j) + qint(spec.s, j);
    return acc / fact;
}

CycNum qdim_row(const SeriesSpec& spec, int j) {
    if (j < 0) throw InvalidParameterError("row length must be nonnegative");
    if (j == 0) return CycNum::one(spec.M);
    const CycNum fact = qfactorial(spec.s, j);
    if (fact.is_zero()) throw DomainError("[j]! vanishes at this specialization");
    CycNum acc = CycNum::one(spec.M);
    for (int m = 0; m <= j - 2; ++m) acc *= qint_alpha(spec.alpha, spec.s, m);
    acc *= qint_alpha(spec.alpha, spec.s, j - 1) + qint(spec.s, j);
    return acc / fact;
}

CycNum twist(const SeriesSpec& spec, const Partition& lambda) {
    return pow(spec.alpha, lambda.size()) * pow(spec.s, 2 * lambda.content_sum());
}

CycNum label_qdim(const SeriesSpec& spec, const Label& label) {
    switch (label.kind) {
        case LabelKind::Plain:
        case LabelKind::Undetermined:
            return qdim(spec, label.partition);
        case LabelKind::SplitPlus:
        case LabelKind::SplitMinus:
        case LabelKind::Hat:
            return qdim(spec, label.partition) / CycNum::from_integer(spec.M, 2);
        case LabelKind::QuadPP:
        case LabelKind::QuadPM:
        case LabelKind::QuadMP:
        case LabelKind::QuadMM:
            return qdim(spec, label.partition) / CycNum::from_integer(spec.M, 4);
        case LabelKind::Tensor:
            return qdim(spec, label.tensor_column) * qdim(spec, label.tensor_row);
    }
    throw InvalidParameterError("unknown label kind");
}

CycNum label_twist(const SeriesSpec& spec, const Label& label) {
    if (label.kind == LabelKind::Tensor)
        return twist(spec, label.tensor_column) * twist(spec, label.tensor_row);
    // Splitting a fixed-point idempotent does not change the twist scalar.
    return twist(spec, label.partition);
}

CycNum braiding_coeff(const SeriesSpec& spec, const Partition& from, const Partition& to) {
    const auto find_cell = [](const Partition& small, const Partition& big) -> std::optional<std::pair<int, int>> {
        if (big.size() != small.size() + 1) return std::nullopt;
        const int rows = big.rows();
        std::optional<std::pair<int, int>> cell;
        for (int i = 1; i <= rows; ++i) {
            const int d = big.part(i) - small.part(i);
            if (d == 0) continue;
            if (d != 1 || cell) return std::nullopt;
            cell = std::make_pair(i, big.part(i));
        }
        return cell;
    };
    if (auto cell = find_cell(from, to)) {
        return pow(spec.s, 2 * cell_content(cell->first, cell->second));
    }
    if (auto cell = find_cell(to, from)) {
        return pow(spec.alpha, -2) * pow(spec.s, -2 * cell_content(cell->first, cell->second));
    }
    throw DomainError("diagrams " + from.str() + " and " + to.str() + " differ by more than one cell");
}

std::vector<BranchEntry> branching(const SeriesSpec& spec, const Partition& lambda) {
    const DiagramConstraints gamma = gamma_constraints(spec);
    const DiagramConstraints gamma_bar = gamma_bar_constraints(spec);
    if (!gamma.admits(lambda))
        throw DomainError("branching expects a label in Gamma, got " + lambda.str());
    std::vector<BranchEntry> out;
    for (auto& mu : lambda.with_cell_added()) {
        if (!gamma_bar.admits(mu)) continue;  // no idempotent at this specialization
        const bool neg = qdim(spec, mu).is_zero();
        out.push_back(BranchEntry{std::move(mu), BranchDirection::Add, neg});
    }
    for (auto& mu : lambda.with_cell_removed()) {
        const bool neg = qdim(spec, mu).is_zero();
        out.push_back(BranchEntry{std::move(mu), BranchDirection::Remove, neg});
    }
    std::sort(out.begin(), out.end(),
              [](const BranchEntry& a, const BranchEntry& b) { return canonical_less(a.target, b.target); });
    return out;
}

std::vector<Label> transparent_objects(const SeriesSpec& spec) {
    const CycNum one = CycNum::one(spec.M);
    std::vector<Partition> found;
    for (const auto& lambda : label_sets(spec).gamma) {
        if (lambda.empty()) continue;
        bool transparent = true;
        for (const auto& entry : branching(spec, lambda)) {
            if (entry.negligible) continue;
            if (braiding_coeff(spec, lambda, entry.target) != one) {
                transparent = false;
                break;
            }
        }
        if (transparent) found.push_back(lambda);
    }
    std::sort(found.begin(), found.end(), CanonicalLess{});

    std::vector<Label> out;
    out.push_back(Label::plain(Partition()));
    for (auto& p : found) out.push_back(Label::plain(std::move(p)));
    if (found.size() == 2) {
        // Two independent order-2 generators close into a Klein group whose
        // fourth element is not a diagram of Gamma.
        const Partition& a = out[1].partition;
        const Partition& b = out[2].partition;
        const Partition& column = a.part(1) <= 1 ? a : b;
        const Partition& row = a.part(1) <= 1 ? b : a;
        out.push_back(Label::tensor(column, row));
    } else if (found.size() > 2) {
        throw ConsistencyError(spec.name() + ": unexpected transparent census (" +
                               std::to_string(found.size()) + " nontrivial generators)");
    }
    return out;
}

const char* modularizability_name(Modularizability m) {
    switch (m) {
        case Modularizability::Modular: return "modular";
        case Modularizability::Modularizable: return "modularizable";
        case Modularizability::NotModularizable: return "not_modularizable";
    }
    return "?";
}

Verdict modularizability(const SeriesSpec& spec) {
    const CycNum one = CycNum::one(spec.M);
    Verdict verdict{Modularizability::Modular, std::nullopt, std::nullopt};
    for (const auto& label : transparent_objects(spec)) {
        if (label.kind == LabelKind::Plain && label.partition.empty()) continue;
        if (verdict.kind == Modularizability::Modular) verdict.kind = Modularizability::Modularizable;
        const CycNum d = label_qdim(spec, label);
        const CycNum t = label_twist(spec, label);
        const bool dim_ok = d.is_integer() && d.integer_value() > 0;
        if (!dim_ok || t != one) {
            verdict.kind = Modularizability::NotModularizable;
            verdict.witness = label;
            verdict.witness_twist = t;
            return verdict;
        }
    }
    return verdict;
}

CycNum omega_gamma(const SeriesSpec& spec) {
    CycNum acc = CycNum::zero(spec.M);
    for (const auto& lambda : label_sets(spec).gamma) {
        const CycNum d = qdim(spec, lambda);
        acc += d * d;
    }
    return acc;
}

CycNum omega_dominating(const SeriesSpec& spec) {
    const LabelSet ls = label_sets(spec);
    CycNum acc = CycNum::zero(spec.M);
    for (const auto& lambda : ls.gamma) {
        const CycNum d = qdim(spec, lambda);
        acc += d * d;
    }
    for (const auto& label : ls.extra) {
        const CycNum d = label_qdim(spec, label);
        acc += d * d;
    }
    return acc;
}

std::vector<ObjectData> object_table(const SeriesSpec& spec) {
    std::vector<ObjectData> out;
    for (const auto& lambda : label_sets(spec).gamma) {
        out.push_back(ObjectData{lambda, qdim(spec, lambda), twist(spec, lambda)});
    }
    return out;
}

}  // namespace bcdcat
