#include "wsnash/linear_system.hpp"

#include <stdexcept>

namespace wsnash {

void validate(const LinearSystem& system) {
    if (system.num_vars == 0) throw std::invalid_argument("linear system has no variables");
    if (!system.nonneg)
        throw std::invalid_argument("free variables are not supported");
    for (const LinearConstraint& c : system.constraints)
        if (c.coeffs.size() != system.num_vars)
            throw std::invalid_argument("constraint length does not match num_vars");
}

bool satisfies(const LinearSystem& system, const std::vector<Rational>& assignment) {
    if (assignment.size() != system.num_vars) return false;
    for (const Rational& v : assignment)
        if (v < 0) return false;
    for (const LinearConstraint& c : system.constraints) {
        Rational lhs(0);
        for (std::size_t j = 0; j < c.coeffs.size(); ++j) lhs += c.coeffs[j] * assignment[j];
        switch (c.relation) {
            case Relation::LessEq:
                if (lhs > c.rhs) return false;
                break;
            case Relation::Equal:
                if (lhs != c.rhs) return false;
                break;
            case Relation::GreaterEq:
                if (lhs < c.rhs) return false;
                break;
        }
    }
    return true;
}

namespace {

// Dense phase-1 tableau. Columns: original vars, then one slack/surplus per
// inequality, then one artificial per row that needs it, then the rhs.
class Phase1Tableau {
public:
    explicit Phase1Tableau(const LinearSystem& system) : n_orig_(system.num_vars) {
        const std::size_t m = system.constraints.size();

        std::size_t num_slack = 0;
        for (const LinearConstraint& c : system.constraints)
            if (c.relation != Relation::Equal) ++num_slack;

        // Worst case every row carries an artificial; unused ones are dropped
        // by never allocating them (columns are assigned on the fly).
        std::size_t next_col = n_orig_ + num_slack;
        total_cols_ = n_orig_ + num_slack + m; // upper bound, trimmed below
        rows_.assign(m, std::vector<Rational>(total_cols_, Rational(0)));
        rhs_.assign(m, Rational(0));
        basis_.assign(m, 0);

        std::size_t slack_col = n_orig_;
        for (std::size_t i = 0; i < m; ++i) {
            const LinearConstraint& c = system.constraints[i];
            int sign = c.rhs < 0 ? -1 : 1; // flip rows so rhs is nonnegative
            for (std::size_t j = 0; j < n_orig_; ++j) rows_[i][j] = sign * c.coeffs[j];
            rhs_[i] = sign * c.rhs;

            Relation rel = c.relation;
            if (sign < 0) {
                if (rel == Relation::LessEq)
                    rel = Relation::GreaterEq;
                else if (rel == Relation::GreaterEq)
                    rel = Relation::LessEq;
            }

            bool needs_artificial = true;
            if (rel == Relation::LessEq) {
                rows_[i][slack_col] = 1;
                basis_[i] = slack_col;
                needs_artificial = false;
                ++slack_col;
            } else if (rel == Relation::GreaterEq) {
                rows_[i][slack_col] = -1;
                ++slack_col;
            }
            if (needs_artificial) {
                rows_[i][next_col] = 1;
                basis_[i] = next_col;
                artificial_.push_back(next_col);
                ++next_col;
            }
        }
        total_cols_ = next_col;
        for (auto& row : rows_) row.resize(total_cols_);

        // Reduced costs for minimizing the sum of artificials: start from
        // c (1 on artificials) and cancel the basic artificial rows.
        reduced_.assign(total_cols_, Rational(0));
        for (std::size_t col : artificial_) reduced_[col] = 1;
        objective_ = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!is_artificial(basis_[i])) continue;
            for (std::size_t j = 0; j < total_cols_; ++j) reduced_[j] -= rows_[i][j];
            objective_ -= rhs_[i];
        }
    }

    // Runs simplex to optimality; returns true when the artificials reach 0.
    bool drive_to_feasible() {
        for (;;) {
            std::size_t entering = total_cols_;
            for (std::size_t j = 0; j < total_cols_; ++j) {
                if (reduced_[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == total_cols_) break; // optimal

            std::size_t leaving = rows_.size();
            Rational best_ratio(0);
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][entering] <= 0) continue;
                Rational ratio = rhs_[i] / rows_[i][entering];
                if (leaving == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == rows_.size())
                throw std::logic_error("phase-1 objective unbounded"); // cannot happen: w >= -sum(b)
            pivot(leaving, entering);
        }
        return objective_ == 0;
    }

    std::vector<Rational> extract(std::size_t num_vars) const {
        std::vector<Rational> x(num_vars, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < num_vars) x[basis_[i]] = rhs_[i];
        return x;
    }

private:
    bool is_artificial(std::size_t col) const {
        return !artificial_.empty() && col >= artificial_.front();
    }

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = Rational(1) / rows_[row][col];
        for (std::size_t j = 0; j < total_cols_; ++j) rows_[row][j] *= inv;
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row || rows_[i][col] == 0) continue;
            Rational factor = rows_[i][col];
            for (std::size_t j = 0; j < total_cols_; ++j)
                rows_[i][j] -= factor * rows_[row][j];
            rhs_[i] -= factor * rhs_[row];
        }
        if (reduced_[col] != 0) {
            Rational factor = reduced_[col];
            for (std::size_t j = 0; j < total_cols_; ++j)
                reduced_[j] -= factor * rows_[row][j];
            objective_ -= factor * rhs_[row];
        }
        basis_[row] = col;
    }

    std::size_t n_orig_;
    std::size_t total_cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> artificial_;
    std::vector<Rational> reduced_;
    Rational objective_;
};

} // namespace

std::optional<std::vector<Rational>> solve_feasible(const LinearSystem& system) {
    validate(system);
    if (system.constraints.empty())
        return std::vector<Rational>(system.num_vars, Rational(0));

    Phase1Tableau tableau(system);
    if (!tableau.drive_to_feasible()) return std::nullopt;

    std::vector<Rational> point = tableau.extract(system.num_vars);
    if (!satisfies(system, point))
        throw std::logic_error("simplex produced a point that fails substitution");
    return point;
}

} // namespace wsnash
