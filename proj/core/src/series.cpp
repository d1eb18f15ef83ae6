#include "bcdcat/series.hpp"

#include <sstream>

namespace bcdcat {

std::string series_name(Series s) {
    switch (s) {
        case Series::C: return "C";
        case Series::CB: return "CB";
        case Series::CBneg: return "CB-";
        case Series::Bneg: return "B-";
        case Series::BD: return "BD";
        case Series::BDneg: return "BD-";
        case Series::D: return "D";
    }
    return "?";
}

Series parse_series(const std::string& name) {
    if (name == "C") return Series::C;
    if (name == "CB") return Series::CB;
    if (name == "CB-") return Series::CBneg;
    if (name == "B-") return Series::Bneg;
    if (name == "BD") return Series::BD;
    if (name == "BD-") return Series::BDneg;
    if (name == "D") return Series::D;
    throw InvalidParameterError("unknown series '" + name + "' (expected C, CB, CB-, B-, BD, BD-, D)");
}

std::string SeriesSpec::name() const {
    std::ostringstream os;
    os << series_name(series) << "^{" << n << "," << k << "}";
    return os.str();
}

namespace {

struct SeriesData {
    int l;
    bool doubled;        // M = 2l rather than M = l
    int alpha_exp;       // alpha = alpha_sign * s^{alpha_exp}
    int alpha_sign;
    int alpha_exp2;      // second expression alpha = alpha_sign2 * s^{alpha_exp2}
    int alpha_sign2;
};

SeriesData series_data(Series series, int n, int k) {
    switch (series) {
        case Series::C:
            return {2 * n + 2 * k + 2, true, 2 * n + 1, -1, -2 * k - 1, +1};
        case Series::CB:
            return {2 * n + 2 * k + 1, true, 2 * n + 1, -1, -2 * k, +1};
        case Series::CBneg:
            return {2 * n + 2 * k + 1, false, 2 * n + 1, -1, -2 * k, -1};
        case Series::Bneg:
            return {2 * n + 2 * k, true, 2 * n, +1, -2 * k, -1};
        case Series::BD:
            return {2 * n + 2 * k - 1, true, 2 * n, +1, -2 * k + 1, -1};
        case Series::BDneg:
            return {2 * n + 2 * k - 1, false, 2 * n, -1, -2 * k + 1, -1};
        case Series::D:
            return {2 * n + 2 * k - 2, true, 2 * n - 1, +1, -2 * k + 1, -1};
    }
    throw InvalidParameterError("unknown series");
}

CycNum signed_power(const CycNum& s, int sign, int exp) {
    CycNum v = pow(s, exp);
    return sign < 0 ? -v : v;
}

}  // namespace

SeriesSpec make_spec(Series series, int n, int k) {
    if (n < 1 || k < 1)
        throw InvalidParameterError("series parameters require n >= 1 and k >= 1");
    const SeriesData data = series_data(series, n, k);
    const unsigned M = static_cast<unsigned>(data.doubled ? 2 * data.l : data.l);

    SeriesSpec spec;
    spec.series = series;
    spec.n = n;
    spec.k = k;
    spec.l = data.l;
    spec.M = M;
    spec.s = CycNum::root(M, 1);
    spec.alpha = signed_power(spec.s, data.alpha_sign, data.alpha_exp);

    // Degenerate parameter values are treated separately in the construction
    // (trivial category, vanishing Kauffman polynomial, U(1) invariants) and
    // are rejected here.  This rules out BD/BD- with k = 1 and D with n = 1
    // or k = 1.
    const CycNum one = CycNum::one(M);
    const CycNum sinv = spec.s.inv();
    if (spec.alpha == one || spec.alpha == -one)
        throw InvalidParameterError(spec.name() + ": alpha = +-1 is a degenerate specialization");
    if (spec.alpha == spec.s || spec.alpha == -sinv)
        throw InvalidParameterError(spec.name() +
                                    ": alpha = s or -s^{-1} gives the U(1) specialization, not supported");
    if (spec.alpha == -spec.s || spec.alpha == sinv)
        throw InvalidParameterError(spec.name() +
                                    ": alpha = -s or s^{-1} makes the Kauffman polynomial vanish");

    // Constructor self-checks; failures here would indicate an internal fault.
    const CycNum alpha2 = signed_power(spec.s, data.alpha_sign2, data.alpha_exp2);
    if (spec.alpha != alpha2)
        throw ConsistencyError(spec.name() + ": the two defining expressions for alpha disagree");
    if (multiplicative_order(spec.s, M) != static_cast<long>(M))
        throw ConsistencyError(spec.name() + ": s does not have exact order M");
    if (multiplicative_order(spec.s * spec.s, M) != data.l)
        throw ConsistencyError(spec.name() + ": s^2 does not have exact order l");
    return spec;
}

DiagramConstraints gamma_constraints(const SeriesSpec& spec) {
    DiagramConstraints c;
    switch (spec.series) {
        case Series::C:
            c.row1 = spec.k;
            c.col1 = spec.n;
            break;
        case Series::CB:
        case Series::CBneg:
            c.row12 = 2 * spec.k + 1;
            c.col1 = spec.n;
            break;
        case Series::Bneg:
            c.row12 = 2 * spec.k + 1;
            c.col12 = 2 * spec.n + 1;
            break;
        case Series::BD:
        case Series::BDneg:
            c.row12 = 2 * spec.k;
            c.col12 = 2 * spec.n + 1;
            break;
        case Series::D:
            c.row12 = 2 * spec.k;
            c.col12 = 2 * spec.n;
            break;
    }
    return c;
}

DiagramConstraints gamma_bar_constraints(const SeriesSpec& spec) {
    DiagramConstraints c;
    switch (spec.series) {
        case Series::C:
            c.row1 = spec.k + 1;
            c.row2 = spec.k;
            c.col1 = spec.n + 1;
            c.col2 = spec.n;
            break;
        case Series::CB:
        case Series::CBneg:
            c.row12 = 2 * spec.k + 2;
            c.col1 = spec.n + 1;
            c.col2 = spec.n;
            break;
        case Series::Bneg:
            c.row12 = 2 * spec.k + 2;
            c.col12 = 2 * spec.n + 2;
            c.rowcol = spec.l;
            break;
        case Series::BD:
        case Series::BDneg:
            // Not spelled out in the construction; one-cell enlargement of
            // Gamma intersected with the idempotent existence bound
            // lambda_1 + lambda^v_1 <= l, following the B- pattern.
            c.row12 = 2 * spec.k + 1;
            c.col12 = 2 * spec.n + 2;
            c.rowcol = spec.l;
            break;
        case Series::D:
            c.row12 = 2 * spec.k + 1;
            c.col12 = 2 * spec.n + 1;
            c.rowcol = spec.l;
            break;
    }
    return c;
}

LabelSet label_sets(const SeriesSpec& spec) {
    LabelSet out;
    out.gamma = enumerate_diagrams(gamma_constraints(spec));
    out.gamma_bar = enumerate_diagrams(gamma_bar_constraints(spec));
    switch (spec.series) {
        case Series::Bneg:
            out.extra.push_back(Label::tensor(Partition::column(2 * spec.n + 1),
                                              Partition::row(2 * spec.k + 1)));
            break;
        case Series::BD:
        case Series::BDneg:
            out.extra.push_back(Label::tensor(Partition::column(2 * spec.n + 1),
                                              Partition::row(2 * spec.k)));
            break;
        case Series::D:
            out.extra.push_back(Label::tensor(Partition::column(2 * spec.n),
                                              Partition::row(2 * spec.k)));
            break;
        case Series::C:
        case Series::CB:
        case Series::CBneg:
            break;
    }
    return out;
}

DualInfo level_rank_dual(const SeriesSpec& spec) {
    DualInfo dual;
    dual.n = spec.k;
    dual.k = spec.n;
    switch (spec.series) {
        case Series::C:
            dual.series_name = "C";
            dual.spec = make_spec(Series::C, spec.k, spec.n);
            break;
        case Series::Bneg:
            dual.series_name = "B-";
            dual.spec = make_spec(Series::Bneg, spec.k, spec.n);
            break;
        case Series::D:
            dual.series_name = "D";
            dual.spec = make_spec(Series::D, spec.k, spec.n);
            break;
        case Series::CB:
            dual.series_name = "BC";
            break;
        case Series::CBneg:
            dual.series_name = "BC-";
            break;
        case Series::BD:
            dual.series_name = "DB";
            break;
        case Series::BDneg:
            dual.series_name = "DB-";
            break;
    }
    for (const auto& lambda : label_sets(spec).gamma) dual.labels.push_back(lambda.transposed());
    return dual;
}

}  // namespace bcdcat
