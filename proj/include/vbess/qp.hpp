#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vbess {

// Sparse affine expression sum(coeff * x[col]) + constant.
struct LinExpr {
    std::vector<std::pair<int, double>> terms;
    double constant = 0.0;

    LinExpr() = default;
    explicit LinExpr(double c) : constant(c) {}

    LinExpr& add(int col, double coeff) {
        terms.emplace_back(col, coeff);
        return *this;
    }
    LinExpr& offset(double c) {
        constant += c;
        return *this;
    }
    double value(const std::vector<double>& x) const;
};

enum class SolveStatus { optimal, max_iters, infeasible };
const char* to_string(SolveStatus s);

struct QpSolution {
    std::vector<double> x;
    double objective = 0.0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    SolveStatus status = SolveStatus::max_iters;
    int iterations = 0;
    bool polished = false;
    double wall_ms = 0.0;
};

// Convex QP with diagonal quadratic cost:
//   min  sum_j quad_diag[j]*x_j^2 + q.x + obj_constant
//   s.t. a.x <= ub (ineq rows), g.x = d (eq rows)
// Variables are created by name; the name map is the decode contract.
class QpProblem {
public:
    struct Row {
        std::vector<std::pair<int, double>> terms;
        double rhs = 0.0;
    };
    struct HingeInfo {
        int var = -1;        // auxiliary column
        LinExpr expr;        // hinged expression
        double weight = 0.0;
        bool squared = false;
    };

    int add_variable(const std::string& name);
    int num_vars() const { return static_cast<int>(names_.size()); }

    void add_lin_cost(int var, double coeff);
    void add_quad_cost(int var, double coeff);  // coeff >= 0
    void add_obj_constant(double c) { obj_constant_ += c; }

    void add_ineq(const LinExpr& expr, double ub);  // expr <= ub
    void add_eq(const LinExpr& expr, double rhs);   // expr == rhs
    void add_lower_bound(int var, double lb);       // var >= lb
    void add_upper_bound(int var, double ub);       // var <= ub

    // Auxiliary u >= 0, u >= expr with weight*u in the linear cost. At any
    // optimum with weight > 0, u = max(expr, 0).
    int add_hinge_cost(const LinExpr& expr, double weight, const std::string& name = "");
    // As above with weight*u^2 in the quadratic cost.
    int add_squared_hinge_cost(const LinExpr& expr, double weight, const std::string& name = "");

    int index_of(const std::string& name) const;  // throws ValidationError if absent
    bool has_variable(const std::string& name) const;
    const std::string& name_of(int col) const { return names_[col]; }

    const std::vector<double>& quad_diag() const { return quad_diag_; }
    const std::vector<double>& lin_cost() const { return lin_cost_; }
    double obj_constant() const { return obj_constant_; }
    const std::vector<Row>& ineq_rows() const { return ineq_; }
    const std::vector<Row>& eq_rows() const { return eq_; }
    const std::vector<HingeInfo>& hinges() const { return hinges_; }

    double objective_value(const std::vector<double>& x) const;

    // Debug dump, one line per cost and constraint term. Format not stable.
    void dump(std::ostream& os) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<double> quad_diag_;
    std::vector<double> lin_cost_;
    double obj_constant_ = 0.0;
    std::vector<Row> ineq_;
    std::vector<Row> eq_;
    std::vector<HingeInfo> hinges_;
    int anon_counter_ = 0;
};

struct SolverOptions {
    double tol = 1e-6;
    int max_iters = 200000;
    // ADMM internals; defaults are fine for every scheme problem.
    double rho = 0.1;
    double sigma = 1e-6;
    double relax_alpha = 1.6;
    int check_every = 25;
    bool adaptive_rho = true;
    bool polish = true;
    bool verbose = false;
};

// Deterministic first-order solve (ADMM with Ruiz equilibration and an
// active-set polish step). status == optimal guarantees both residuals <= tol.
QpSolution solve(const QpProblem& p, const SolverOptions& opts = {},
                 const QpSolution* warm_start = nullptr);
QpSolution solve(const QpProblem& p, double tol, int max_iters);

// Largest violation of u = max(expr, 0) over positively weighted hinge
// auxiliaries at x.
double max_hinge_slack(const QpProblem& p, const std::vector<double>& x);

}  // namespace vbess
