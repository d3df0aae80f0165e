#include "inertia/milp.hpp"

#include "inertia/alpha_bound.hpp"
#include "inertia/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace inertia {

std::string to_string(Formulation f)
{
    switch (f) {
    case Formulation::alpha_per_vertex:
        return "alpha_per_vertex";
    case Formulation::alpha_unified:
        return "alpha_unified";
    case Formulation::chi_fixed_ell:
        return "chi_fixed_ell";
    case Formulation::chi_unified:
        return "chi_unified";
    }
    return "?";
}

int MilpModel::add_variable(MilpVariable v)
{
    variables.push_back(std::move(v));
    return static_cast<int>(variables.size()) - 1;
}

int MilpModel::find(const std::string& name) const
{
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i].name == name)
            return static_cast<int>(i);
    return -1;
}

int MilpModel::count(VarKind kind) const
{
    return static_cast<int>(
        std::count_if(variables.begin(), variables.end(), [kind](const MilpVariable& v) { return v.kind == kind; }));
}

std::string MilpModel::tag() const
{
    std::string t = to_string(formulation);
    if (vertex)
        t += "_u" + std::to_string(*vertex);
    if (ell)
        t += "_l" + std::to_string(*ell);
    return t;
}

// ---------------------------------------------------------------- builders

namespace {

std::vector<int> add_coefficients(MilpModel& m, int k)
{
    std::vector<int> a;
    for (int i = 0; i <= k; ++i)
        a.push_back(m.add_variable({"a" + std::to_string(i), VarKind::continuous, std::nullopt, std::nullopt}));
    return a;
}

std::vector<int> add_binaries(MilpModel& m, const std::string& prefix, int first, int last)
{
    std::vector<int> out;
    for (int i = first; i <= last; ++i)
        out.push_back(m.add_variable({prefix + std::to_string(i), VarKind::binary, 0.0, 1.0}));
    return out;
}

std::vector<MilpTerm> polynomial_terms(const std::vector<int>& a, const std::vector<double>& coeffs)
{
    std::vector<MilpTerm> terms;
    for (std::size_t i = 0; i < a.size(); ++i)
        terms.push_back({a[i], coeffs[i]});
    return terms;
}

std::vector<double> walk_row(const DiagonalProfile& prof, int v, int k)
{
    std::vector<double> row(k + 1);
    for (int i = 0; i <= k; ++i)
        row[i] = static_cast<double>(prof.diag[v][i]);
    return row;
}

} // namespace

MilpModel build_alpha_model(const DistinctSpectrum& ds, const DiagonalProfile& prof, int k, const AlphaVariant& variant,
                            const MilpOptions& options)
{
    if (k < 1 || k > prof.k)
        throw ContractError("build_alpha_model: k must be in [1, profile k]");
    const int n = static_cast<int>(prof.diag.size());
    const auto* per_vertex = std::get_if<PerVertex>(&variant);
    if (per_vertex && (per_vertex->u < 0 || per_vertex->u >= n))
        throw ContractError("build_alpha_model: vertex " + std::to_string(per_vertex->u) + " out of range");

    MilpModel m;
    m.k = k;
    m.sense = Sense::minimize;
    const auto a = add_coefficients(m, k);
    const auto b = add_binaries(m, "b", 0, ds.d());

    double big_m = 1.0;
    if (per_vertex) {
        m.formulation = Formulation::alpha_per_vertex;
        m.vertex = per_vertex->u;
        m.big_m = options.big_m;
        m.epsilon = options.epsilon;
        big_m = options.big_m;
    } else {
        m.formulation = Formulation::alpha_unified;
        m.epsilon = options.epsilon / options.big_m;
    }

    for (int v = 0; v < n; ++v) {
        const bool pinned = per_vertex && v == per_vertex->u;
        m.rows.push_back({(pinned ? "walk_eq_v" : "walk_v") + std::to_string(v),
                          polynomial_terms(a, walk_row(prof, v, k)),
                          pinned ? Relation::equal : Relation::greater_equal, 0.0});
    }
    for (int j = 0; j <= ds.d(); ++j) {
        auto terms = polynomial_terms(a, power_row(ds.thetas[j], k));
        terms.push_back({b[j], -big_m});
        m.rows.push_back({"sign_j" + std::to_string(j), std::move(terms), Relation::less_equal, -m.epsilon});
        m.objective.push_back({b[j], static_cast<double>(ds.mults[j])});
    }
    return m;
}

MilpModel build_chi_model(const DistinctSpectrum& ds, int k, const ChiVariant& variant, const MilpOptions& options)
{
    if (k < 1)
        throw ContractError("build_chi_model: k must be positive");
    const int n = ds.order();
    const auto* fixed = std::get_if<FixedEll>(&variant);
    if (fixed && (fixed->ell < 1 || fixed->ell > n - 1))
        throw ContractError("build_chi_model: ell must be in [1, " + std::to_string(n - 1) + "], got " +
                            std::to_string(fixed->ell));

    MilpModel m;
    m.k = k;
    m.sense = Sense::maximize;
    const auto a = add_coefficients(m, k);
    const auto b = add_binaries(m, "b", 0, ds.d());
    const auto c = add_binaries(m, "c", 0, ds.d());

    double big_m = 1.0;
    if (fixed) {
        m.formulation = Formulation::chi_fixed_ell;
        m.ell = fixed->ell;
        m.big_m = options.big_m;
        m.epsilon = options.epsilon;
        big_m = options.big_m;
    } else {
        m.formulation = Formulation::chi_unified;
        m.epsilon = options.epsilon / options.big_m;
    }
    const double eps = m.epsilon;

    std::vector<double> trace(k + 1, 0.0);
    for (int j = 0; j <= ds.d(); ++j) {
        const auto row = power_row(ds.thetas[j], k);
        for (int i = 0; i <= k; ++i)
            trace[i] += ds.mults[j] * row[i];
    }
    m.rows.push_back({"trace", polynomial_terms(a, trace), Relation::equal, 0.0});

    for (int j = 0; j <= ds.d(); ++j) {
        const auto row = power_row(ds.thetas[j], k);
        const std::string s = std::to_string(j);
        auto nonneg = polynomial_terms(a, row);
        nonneg.push_back({b[j], -big_m});
        m.rows.push_back({"nonneg_j" + s, std::move(nonneg), Relation::less_equal, -eps});
        auto pos = polynomial_terms(a, row);
        pos.push_back({c[j], -big_m});
        m.rows.push_back({"pos_j" + s, std::move(pos), Relation::less_equal, 0.0});
        auto margin = polynomial_terms(a, row);
        margin.push_back({c[j], -big_m});
        m.rows.push_back({"posmargin_j" + s, std::move(margin), Relation::greater_equal, eps - big_m});
    }

    std::vector<MilpTerm> card;
    for (int j = 0; j <= ds.d(); ++j)
        card.push_back({c[j], static_cast<double>(ds.mults[j])});

    if (fixed) {
        const double ell = fixed->ell;
        m.rows.push_back({"card", card, Relation::equal, ell});
        m.objective_constant = 1.0 + n / ell;
        for (int j = 0; j <= ds.d(); ++j)
            m.objective.push_back({b[j], -ds.mults[j] / ell});
        return m;
    }

    const auto y = add_binaries(m, "y", 1, n - 1);
    const int t = m.add_variable({"t", VarKind::continuous, 0.0, static_cast<double>(n)});
    std::vector<MilpTerm> one_hot;
    for (int v : y)
        one_hot.push_back({v, 1.0});
    m.rows.push_back({"select", one_hot, Relation::equal, 1.0});
    auto link = card;
    for (int l = 1; l <= n - 1; ++l)
        link.push_back({y[l - 1], -static_cast<double>(l)});
    m.rows.push_back({"link", std::move(link), Relation::equal, 0.0});
    // l t <= n - m.b + l n (1 - y_l)
    for (int l = 1; l <= n - 1; ++l) {
        std::vector<MilpTerm> terms{{t, static_cast<double>(l)}};
        for (int j = 0; j <= ds.d(); ++j)
            terms.push_back({b[j], static_cast<double>(ds.mults[j])});
        terms.push_back({y[l - 1], static_cast<double>(l) * n});
        m.rows.push_back({"ratio_l" + std::to_string(l), std::move(terms), Relation::less_equal,
                          static_cast<double>(n) + static_cast<double>(l) * n});
    }
    m.objective_constant = 1.0;
    m.objective.push_back({t, 1.0});
    return m;
}

// ---------------------------------------------------------------- solver

namespace {

enum class RowClass { polynomial, binary_only, ratio };

struct PreparedRow {
    RowClass cls;
    std::vector<MilpTerm> poly;   // continuous free variables, indexed into the coefficient space
    std::vector<MilpTerm> bins;   // binaries (model indices)
    double t_coeff = 0;
    Relation rel;
    double rhs;
};

class ReferenceSolver {
public:
    ReferenceSolver(const MilpModel& model, const SolveOptions& options) : m_(model), opt_(options)
    {
        classify_variables();
        prepare_rows();
        order_binaries();
    }

    std::optional<MilpSolution> solve()
    {
        assignment_.assign(m_.variables.size(), -1);
        witnesses_.assign(order_.size() + 1, std::nullopt);
        if (!check_polynomial_rows(0))
            return std::nullopt;
        dfs(0);
        return best_;
    }

private:
    void classify_variables()
    {
        space_index_.assign(m_.variables.size(), -1);
        for (std::size_t i = 0; i < m_.variables.size(); ++i) {
            const auto& v = m_.variables[i];
            if (v.kind == VarKind::binary)
                continue;
            if (!v.lower && !v.upper) {
                space_index_[i] = dim_++;
            } else {
                if (t_ >= 0)
                    throw CapabilityError("solve_reference: at most one bounded continuous variable is supported");
                t_ = static_cast<int>(i);
            }
        }
        if (dim_ == 0)
            throw CapabilityError("solve_reference: model has no free continuous variables");
    }

    void prepare_rows()
    {
        std::vector<bool> in_polynomial(m_.variables.size(), false);
        std::vector<int> candidate_rows;
        for (const auto& row : m_.rows) {
            PreparedRow p{RowClass::binary_only, {}, {}, 0.0, row.rel, row.rhs};
            bool all_unit_binary = row.rel == Relation::equal && row.rhs == 1.0 && !row.terms.empty();
            for (const auto& term : row.terms) {
                const auto& var = m_.variables[term.var];
                if (var.kind == VarKind::binary) {
                    p.bins.push_back(term);
                } else if (term.var == t_) {
                    p.t_coeff += term.coeff;
                } else {
                    p.poly.push_back({space_index_[term.var], term.coeff});
                }
                if (var.kind != VarKind::binary || term.coeff != 1.0)
                    all_unit_binary = false;
            }
            if (!p.poly.empty() && p.t_coeff != 0.0)
                throw CapabilityError("solve_reference: rows mixing the bounded variable with free variables are "
                                      "not supported");
            p.cls = !p.poly.empty() ? RowClass::polynomial : (p.t_coeff != 0.0 ? RowClass::ratio : RowClass::binary_only);
            if (p.cls == RowClass::polynomial)
                for (const auto& t : p.bins)
                    in_polynomial[t.var] = true;
            if (all_unit_binary)
                candidate_rows.push_back(static_cast<int>(rows_.size()));
            rows_.push_back(std::move(p));
        }

        // One-hot rows over binaries that never meet the free variables.
        selector_of_.assign(m_.variables.size(), -1);
        for (int r : candidate_rows) {
            const auto& bins = rows_[r].bins;
            const bool usable = std::all_of(bins.begin(), bins.end(), [&](const MilpTerm& t) {
                return !in_polynomial[t.var] && selector_of_[t.var] < 0;
            });
            if (!usable)
                continue;
            std::vector<int> group;
            for (const auto& t : bins) {
                selector_of_[t.var] = static_cast<int>(groups_.size());
                group.push_back(t.var);
            }
            groups_.push_back(std::move(group));
        }
        objective_coeff_.assign(m_.variables.size(), 0.0);
        for (const auto& term : m_.objective)
            objective_coeff_[term.var] += term.coeff;
        sign_ = m_.sense == Sense::maximize ? 1.0 : -1.0;
    }

    void order_binaries()
    {
        position_.assign(m_.variables.size(), -1);
        for (const auto& row : m_.rows) {
            for (const auto& term : row.terms) {
                const auto& v = m_.variables[term.var];
                if (v.kind == VarKind::binary && selector_of_[term.var] < 0 && position_[term.var] < 0) {
                    position_[term.var] = static_cast<int>(order_.size());
                    order_.push_back(term.var);
                }
            }
        }
        for (std::size_t i = 0; i < m_.variables.size(); ++i) {
            if (m_.variables[i].kind == VarKind::binary && selector_of_[i] < 0 && position_[i] < 0) {
                position_[i] = static_cast<int>(order_.size());
                order_.push_back(static_cast<int>(i));
            }
        }
        if (static_cast<int>(order_.size()) > opt_.max_binaries)
            throw CapabilityError("solve_reference: " + std::to_string(order_.size()) +
                                  " binaries exceed the enumeration limit of " + std::to_string(opt_.max_binaries));

        fixed_at_.assign(order_.size() + 1, {});
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].cls != RowClass::polynomial)
                continue;
            int depth = 0;
            for (const auto& t : rows_[r].bins)
                depth = std::max(depth, position_[t.var] + 1);
            fixed_at_[depth].push_back(static_cast<int>(r));
        }
    }

    // Polynomial rows whose binaries are all assigned, checked once new ones
    // appear at this depth.
    bool check_polynomial_rows(int depth)
    {
        if (fixed_at_[depth].empty()) {
            witnesses_[depth] = depth > 0 ? witnesses_[depth - 1] : std::vector<double>(dim_, 0.0);
            return true;
        }
        LinearConstraintSystem sys(dim_);
        for (int d = 0; d <= depth; ++d) {
            for (int r : fixed_at_[d]) {
                const auto& row = rows_[r];
                std::vector<double> coeffs(dim_, 0.0);
                for (const auto& t : row.poly)
                    coeffs[t.var] += t.coeff;
                double rhs = row.rhs;
                for (const auto& t : row.bins)
                    rhs -= t.coeff * assignment_[t.var];
                sys.add(std::move(coeffs), row.rel, rhs);
            }
        }
        witnesses_[depth] = feasible(sys, opt_.feasibility);
        return witnesses_[depth].has_value();
    }

    // Range of the binary part of a row: assigned values are exact, free
    // binaries range over [0, 1]; `forced` (if >= 0) is a selector set to 1
    // with the rest of its group at 0.
    std::pair<double, double> binary_range(const PreparedRow& row, int forced_group, int forced) const
    {
        double lo = 0.0, hi = 0.0;
        for (const auto& t : row.bins) {
            const int g = selector_of_[t.var];
            if (g >= 0 && g == forced_group) {
                if (t.var == forced) {
                    lo += t.coeff;
                    hi += t.coeff;
                }
                continue;
            }
            if (assignment_[t.var] >= 0) {
                lo += t.coeff * assignment_[t.var];
                hi += t.coeff * assignment_[t.var];
            } else {
                lo += std::min(0.0, t.coeff);
                hi += std::max(0.0, t.coeff);
            }
        }
        return {lo, hi};
    }

    static bool range_compatible(double lo, double hi, Relation rel, double rhs)
    {
        constexpr double tol = 1e-9;
        switch (rel) {
        case Relation::less_equal:
            return lo <= rhs + tol;
        case Relation::greater_equal:
            return hi >= rhs - tol;
        case Relation::equal:
            return lo <= rhs + tol && hi >= rhs - tol;
        }
        return false;
    }

    // Interval of t allowed by the ratio rows and its bounds, or nullopt when
    // binary-only rows already fail.
    std::optional<std::pair<double, double>> t_range(int forced_group, int forced) const
    {
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        if (t_ >= 0) {
            lo = m_.variables[t_].lower.value_or(lo);
            hi = m_.variables[t_].upper.value_or(hi);
        }
        for (const auto& row : rows_) {
            if (row.cls == RowClass::polynomial)
                continue;
            auto [blo, bhi] = binary_range(row, forced_group, forced);
            if (row.cls == RowClass::binary_only) {
                if (!range_compatible(blo, bhi, row.rel, row.rhs))
                    return std::nullopt;
                continue;
            }
            // t_coeff * t + B (rel) rhs, B in [blo, bhi]; keep the loosest t.
            const double c = row.t_coeff;
            auto upper_from = [&](double slack) { return slack / c; };
            if (row.rel != Relation::greater_equal) {  // c t <= rhs - B for some B
                if (c > 0)
                    hi = std::min(hi, upper_from(row.rhs - blo));
                else
                    lo = std::max(lo, upper_from(row.rhs - blo));
            }
            if (row.rel != Relation::less_equal) {  // c t >= rhs - B
                if (c > 0)
                    lo = std::max(lo, upper_from(row.rhs - bhi));
                else
                    hi = std::min(hi, upper_from(row.rhs - bhi));
            }
        }
        if (lo > hi + 1e-9)
            return std::nullopt;
        return std::make_pair(lo, std::max(lo, hi));
    }

    double best_t_score(std::pair<double, double> range) const
    {
        if (t_ < 0)
            return 0.0;
        const double c = sign_ * objective_coeff_[t_];
        return std::max(c * range.first, c * range.second);
    }

    // Optimistic score (objective times sign) reachable below this node.
    std::optional<double> optimistic_score() const
    {
        double score = sign_ * m_.objective_constant;
        for (std::size_t i = 0; i < m_.variables.size(); ++i) {
            if (m_.variables[i].kind != VarKind::binary || selector_of_[i] >= 0)
                continue;
            const double c = sign_ * objective_coeff_[i];
            score += assignment_[i] >= 0 ? c * assignment_[i] : std::max(0.0, c);
        }
        if (groups_.empty()) {
            auto r = t_range(-1, -1);
            if (!r)
                return std::nullopt;
            return score + best_t_score(*r);
        }
        // Categorical bound over the first group; further groups stay relaxed.
        std::optional<double> best;
        for (int s : groups_[0]) {
            auto r = t_range(0, s);
            if (!r)
                continue;
            double extra = sign_ * objective_coeff_[s] + best_t_score(*r);
            for (std::size_t g = 1; g < groups_.size(); ++g) {
                double top = -std::numeric_limits<double>::infinity();
                for (int v : groups_[g])
                    top = std::max(top, sign_ * objective_coeff_[v]);
                extra += top;
            }
            if (!best || score + extra > *best)
                best = score + extra;
        }
        return best;
    }

    bool can_improve(double score) const
    {
        return !best_ || score > best_score_ + 1e-9;
    }

    void dfs(int depth)
    {
        auto bound = optimistic_score();
        if (!bound || !can_improve(*bound))
            return;
        if (depth == static_cast<int>(order_.size())) {
            assign_selectors(0);
            return;
        }
        const int var = order_[depth];
        const int first = sign_ * objective_coeff_[var] > 0 ? 1 : 0;
        for (int value : {first, 1 - first}) {
            assignment_[var] = value;
            if (check_polynomial_rows(depth + 1))
                dfs(depth + 1);
            assignment_[var] = -1;
        }
    }

    void assign_selectors(std::size_t g)
    {
        if (g == groups_.size()) {
            record_leaf();
            return;
        }
        for (int s : groups_[g]) {
            for (int v : groups_[g])
                assignment_[v] = v == s ? 1 : 0;
            assign_selectors(g + 1);
        }
        for (int v : groups_[g])
            assignment_[v] = -1;
    }

    void record_leaf()
    {
        auto r = t_range(-1, -1);
        if (!r)
            return;
        double t_value = 0.0;
        if (t_ >= 0) {
            const double c = sign_ * objective_coeff_[t_];
            t_value = c >= 0 ? r->second : r->first;
            if (!std::isfinite(t_value))
                throw CapabilityError("solve_reference: unbounded objective");
        }
        double objective = m_.objective_constant;
        for (std::size_t i = 0; i < m_.variables.size(); ++i) {
            if (m_.variables[i].kind == VarKind::binary)
                objective += objective_coeff_[i] * assignment_[i];
        }
        if (t_ >= 0)
            objective += objective_coeff_[t_] * t_value;
        const double score = sign_ * objective;
        if (!can_improve(score))
            return;

        MilpSolution sol;
        sol.objective = objective;
        sol.values.assign(m_.variables.size(), 0.0);
        const auto& a = *witnesses_[order_.size()];
        for (std::size_t i = 0; i < m_.variables.size(); ++i) {
            if (m_.variables[i].kind == VarKind::binary)
                sol.values[i] = assignment_[i];
            else if (space_index_[i] >= 0)
                sol.values[i] = a[space_index_[i]];
        }
        if (t_ >= 0)
            sol.values[t_] = t_value;
        best_ = std::move(sol);
        best_score_ = score;
    }

    const MilpModel& m_;
    SolveOptions opt_;
    int dim_ = 0;
    int t_ = -1;
    double sign_ = 1.0;
    std::vector<int> space_index_;
    std::vector<int> selector_of_;
    std::vector<std::vector<int>> groups_;
    std::vector<PreparedRow> rows_;
    std::vector<double> objective_coeff_;
    std::vector<int> order_;
    std::vector<int> position_;
    std::vector<std::vector<int>> fixed_at_;
    std::vector<int> assignment_;
    std::vector<std::optional<std::vector<double>>> witnesses_;
    std::optional<MilpSolution> best_;
    double best_score_ = 0;
};

} // namespace

std::optional<MilpSolution> solve_reference(const MilpModel& model, const SolveOptions& options)
{
    return ReferenceSolver(model, options).solve();
}

// ---------------------------------------------------------------- LP export

namespace {

std::string number(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string linear_form(const MilpModel& m, const std::vector<MilpTerm>& terms)
{
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        if (t.coeff == 0.0)
            continue;
        const double mag = std::abs(t.coeff);
        if (first)
            out += (t.coeff < 0 ? "- " : "") + number(mag);
        else
            out += (t.coeff < 0 ? " - " : " + ") + number(mag);
        out += " " + m.variables[t.var].name;
        first = false;
    }
    if (first && !terms.empty())
        out = "0 " + m.variables[terms.front().var].name;
    return out;
}

const char* relation_text(Relation r)
{
    switch (r) {
    case Relation::greater_equal:
        return ">=";
    case Relation::less_equal:
        return "<=";
    case Relation::equal:
        return "=";
    }
    return "=";
}

} // namespace

std::string export_lp(const MilpModel& m)
{
    std::ostringstream os;
    os << "\\ " << m.tag() << " k=" << m.k << " epsilon=" << number(m.epsilon);
    if (m.big_m)
        os << " M=" << number(*m.big_m);
    os << "\n";
    os << (m.sense == Sense::minimize ? "Minimize" : "Maximize") << "\n";
    os << " obj: " << linear_form(m, m.objective);
    if (m.objective_constant != 0.0)
        os << (m.objective_constant < 0 ? " - " : " + ") << number(std::abs(m.objective_constant));
    os << "\nSubject To\n";
    for (const auto& row : m.rows)
        os << " " << row.name << ": " << linear_form(m, row.terms) << " " << relation_text(row.rel) << " "
           << number(row.rhs) << "\n";
    os << "Bounds\n";
    for (const auto& v : m.variables) {
        if (v.kind == VarKind::binary)
            continue;
        if (!v.lower && !v.upper)
            os << " " << v.name << " free\n";
        else
            os << " " << (v.lower ? number(*v.lower) : "-inf") << " <= " << v.name << " <= "
               << (v.upper ? number(*v.upper) : "+inf") << "\n";
    }
    os << "Binaries\n";
    bool any = false;
    for (const auto& v : m.variables) {
        if (v.kind == VarKind::binary) {
            os << " " << v.name;
            any = true;
        }
    }
    if (any)
        os << "\n";
    os << "End\n";
    return os.str();
}

std::string lp_file_name(const std::string& graph_name, const MilpModel& model)
{
    std::string stem;
    for (char ch : graph_name) {
        const bool keep = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9');
        if (keep)
            stem += ch;
        else if (!stem.empty() && stem.back() != '_')
            stem += '_';
    }
    while (!stem.empty() && stem.back() == '_')
        stem.pop_back();
    if (stem.empty())
        stem = "graph";
    return stem + "_" + model.tag() + "_k" + std::to_string(model.k) + ".lp";
}

} // namespace inertia
