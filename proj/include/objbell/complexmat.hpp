#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace objbell {

using cplx = std::complex<double>;

// Small dense complex square matrix, dim in {2, 4, 8}, row-major.
// Big enough for every gate in the library; no heap, value semantics.
class Mat {
public:
    Mat() = default;
    explicit Mat(int dim);
    static Mat identity(int dim);

    int dim() const noexcept { return dim_; }
    cplx& at(int r, int c) { return m_[static_cast<std::size_t>(r) * dim_ + c]; }
    const cplx& at(int r, int c) const { return m_[static_cast<std::size_t>(r) * dim_ + c]; }

    Mat operator*(const Mat& rhs) const;
    Mat adjoint() const;
    Mat kron(const Mat& rhs) const;  // this acts on the first (high) wire
    Mat scaled(cplx factor) const;

    double max_abs_diff(const Mat& rhs) const;
    bool is_unitary(double tol) const;

private:
    int dim_ = 0;
    std::array<cplx, 64> m_{};
};

// Max-norm distance to the best global-phase alignment; the phase is read off
// the largest-magnitude entry of b. Throws std::invalid_argument on dim mismatch.
double global_phase_distance(const Mat& a, const Mat& b);
bool equal_up_to_global_phase(const Mat& a, const Mat& b, double tol);

}  // namespace objbell
