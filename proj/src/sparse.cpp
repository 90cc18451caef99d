#include "burgersfem/sparse.hpp"

#include <stdexcept>

#include "burgersfem/errors.hpp"

namespace burgersfem {

double SparseOperator::coeff(int i, int j) const {
    for (int p = row_ptr[i]; p < row_ptr[i + 1]; ++p)
        if (cols[p] == j) return vals[p];
    return 0.0;
}

Eigen::VectorXd SparseOperator::apply(const Eigen::VectorXd& x) const {
    if (x.size() != dim) throw std::invalid_argument("SparseOperator::apply: dimension mismatch");
    Eigen::VectorXd y = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < dim; ++i) {
        double acc = 0.0;
        for (int p = row_ptr[i]; p < row_ptr[i + 1]; ++p) acc += vals[p] * x[cols[p]];
        y[i] = acc;
    }
    return y;
}

Eigen::SparseMatrix<double> SparseOperator::to_eigen() const {
    Eigen::SparseMatrix<double> a(dim, dim);
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(vals.size());
    for (int i = 0; i < dim; ++i)
        for (int p = row_ptr[i]; p < row_ptr[i + 1]; ++p)
            trips.emplace_back(i, cols[p], vals[p]);
    a.setFromTriplets(trips.begin(), trips.end());
    return a;
}

Eigen::MatrixXd SparseOperator::to_dense() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int p = row_ptr[i]; p < row_ptr[i + 1]; ++p) a(i, cols[p]) = vals[p];
    return a;
}

void SparseOperator::scale(double s) {
    for (double& v : vals) v *= s;
}

void SparseOperator::add_scaled(const SparseOperator& other, double s) {
    if (other.dim != dim) throw std::invalid_argument("add_scaled: dimension mismatch");
    for (int i = 0; i < dim; ++i) {
        int p = row_ptr[i];
        for (int q = other.row_ptr[i]; q < other.row_ptr[i + 1]; ++q) {
            const int j = other.cols[q];
            while (p < row_ptr[i + 1] && cols[p] < j) ++p;
            if (p == row_ptr[i + 1] || cols[p] != j)
                throw std::invalid_argument("add_scaled: pattern not contained");
            vals[p] += s * other.vals[q];
        }
    }
}

SparseOperator SparseOperator::zeros_like() const {
    SparseOperator z = *this;
    std::fill(z.vals.begin(), z.vals.end(), 0.0);
    return z;
}

SparseOperator SparseBuilder::build() const {
    SparseOperator op;
    op.dim = dim_;
    op.row_ptr.resize(dim_ + 1, 0);
    std::size_t nnz = 0;
    for (const auto& row : rows_) nnz += row.size();
    op.cols.reserve(nnz);
    op.vals.reserve(nnz);
    for (int i = 0; i < dim_; ++i) {
        op.row_ptr[i] = static_cast<int>(op.cols.size());
        for (const auto& [j, v] : rows_[i]) {
            op.cols.push_back(j);
            op.vals.push_back(v);
        }
    }
    op.row_ptr[dim_] = static_cast<int>(op.cols.size());
    return op;
}

void DirectSolver::analyze(const SparseOperator& a) {
    lu_.analyzePattern(a.to_eigen());
    analyzed_ = true;
}

void DirectSolver::factorize(const SparseOperator& a) {
    const Eigen::SparseMatrix<double> m = a.to_eigen();
    if (!analyzed_) {
        lu_.analyzePattern(m);
        analyzed_ = true;
    }
    lu_.factorize(m);
    if (lu_.info() != Eigen::Success)
        throw SingularJacobian("sparse LU factorization failed");
}

Eigen::VectorXd DirectSolver::solve(const Eigen::VectorXd& rhs) const {
    Eigen::VectorXd x = lu_.solve(rhs);
    if (lu_.info() != Eigen::Success)
        throw SingularJacobian("sparse LU solve failed");
    return x;
}

}  // namespace burgersfem
