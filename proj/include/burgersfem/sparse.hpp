#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <map>
#include <vector>

namespace burgersfem {

// Square sparse matrix in compressed-row form. Column indices are strictly
// increasing within each row; explicit zeros are kept so operators assembled
// from the same mesh share one pattern.
struct SparseOperator {
    int dim = 0;
    std::vector<int> row_ptr;  // size dim+1
    std::vector<int> cols;
    std::vector<double> vals;

    int nnz() const { return static_cast<int>(cols.size()); }
    double coeff(int i, int j) const;
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
    Eigen::SparseMatrix<double> to_eigen() const;
    Eigen::MatrixXd to_dense() const;

    void scale(double s);
    // this += s * other; the pattern of `other` must be contained in ours.
    void add_scaled(const SparseOperator& other, double s);
    // same pattern, all values zero
    SparseOperator zeros_like() const;
};

// Accumulates (i, j, value) contributions with a fixed deterministic order
// (ordered map per row), then freezes into CSR form.
class SparseBuilder {
  public:
    explicit SparseBuilder(int dim) : dim_(dim), rows_(dim) {}
    void add(int i, int j, double v) { rows_[i][j] += v; }
    SparseOperator build() const;
    int dim() const { return dim_; }

  private:
    int dim_;
    std::vector<std::map<int, double>> rows_;
};

// Direct sparse LU behind a stable interface. The symbolic analysis can be
// reused across factorizations with the same pattern (Newton iterations).
class DirectSolver {
  public:
    void analyze(const SparseOperator& a);
    void factorize(const SparseOperator& a);  // throws SingularJacobian
    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

  private:
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
    bool analyzed_ = false;
};

}  // namespace burgersfem
