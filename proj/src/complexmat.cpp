#include "objbell/complexmat.hpp"

#include <cmath>
#include <stdexcept>

namespace objbell {

Mat::Mat(int dim) : dim_(dim) {
    if (dim != 2 && dim != 4 && dim != 8) {
        throw std::invalid_argument("Mat: dim must be 2, 4 or 8");
    }
}

Mat Mat::identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("Mat: dimension mismatch");
    Mat out(dim_);
    for (int r = 0; r < dim_; ++r) {
        for (int k = 0; k < dim_; ++k) {
            const cplx a = at(r, k);
            if (a == cplx{}) continue;
            for (int c = 0; c < dim_; ++c) out.at(r, c) += a * rhs.at(k, c);
        }
    }
    return out;
}

Mat Mat::adjoint() const {
    Mat out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out.at(r, c) = std::conj(at(c, r));
    return out;
}

Mat Mat::kron(const Mat& rhs) const {
    const int d = dim_ * rhs.dim_;
    Mat out(d);
    for (int r1 = 0; r1 < dim_; ++r1)
        for (int c1 = 0; c1 < dim_; ++c1)
            for (int r2 = 0; r2 < rhs.dim_; ++r2)
                for (int c2 = 0; c2 < rhs.dim_; ++c2)
                    out.at(r1 * rhs.dim_ + r2, c1 * rhs.dim_ + c2) = at(r1, c1) * rhs.at(r2, c2);
    return out;
}

Mat Mat::scaled(cplx factor) const {
    Mat out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out.at(r, c) = factor * at(r, c);
    return out;
}

double Mat::max_abs_diff(const Mat& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("Mat: dimension mismatch");
    double worst = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) worst = std::max(worst, std::abs(at(r, c) - rhs.at(r, c)));
    return worst;
}

bool Mat::is_unitary(double tol) const {
    const Mat prod = adjoint() * (*this);
    return prod.max_abs_diff(Mat::identity(dim_)) < tol;
}

double global_phase_distance(const Mat& a, const Mat& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("global_phase_distance: dimension mismatch");
    int br = 0, bc = 0;
    double best = -1.0;
    for (int r = 0; r < b.dim(); ++r) {
        for (int c = 0; c < b.dim(); ++c) {
            const double mag = std::abs(b.at(r, c));
            if (mag > best) { best = mag; br = r; bc = c; }
        }
    }
    cplx phase{1.0, 0.0};
    if (best > 0.0 && std::abs(a.at(br, bc)) > 0.0) {
        phase = a.at(br, bc) / b.at(br, bc);
        phase /= std::abs(phase);
    }
    return a.max_abs_diff(b.scaled(phase));
}

bool equal_up_to_global_phase(const Mat& a, const Mat& b, double tol) {
    return global_phase_distance(a, b) < tol;
}

}  // namespace objbell
